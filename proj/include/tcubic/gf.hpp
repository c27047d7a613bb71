#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tcubic {

/// Canonical encoding of an element of GF(p^k): sum c_i p^i with 0 <= c_i < p.
using Elt = std::uint16_t;

/// GF(q) for q = p^k, p an odd prime. Arithmetic is table-driven and exact;
/// the field object is immutable after construction.
class Field {
public:
    static Field make(int p, int k);

    /// Accepts "q" or "p^k", e.g. "25" and "5^2" give the same field.
    static Field parse(const std::string& spec);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }

    /// Monic modulus polynomial, coefficients low-to-high degree (size k+1).
    /// For k = 1 this is {0, 1} - arithmetic is plain mod p.
    const std::vector<int>& modulus() const { return modulus_; }

    Elt add(Elt a, Elt b) const { return add_[a * q_ + b]; }
    Elt sub(Elt a, Elt b) const { return add_[a * q_ + neg_[b]]; }
    Elt mul(Elt a, Elt b) const { return mul_[a * q_ + b]; }
    Elt neg(Elt a) const { return neg_[a]; }
    Elt inv(Elt a) const;
    Elt pow(Elt a, long e) const;

    /// Embeds an integer through the prime subfield (v mod p).
    Elt from_int(long v) const;

    bool is_nonzero_square(Elt x) const { return x != 0 && sqrt_[x] >= 0; }

    /// Smaller of the two square roots (canonical encoding) when x is a
    /// square, including sqrt(0) = 0; empty otherwise.
    std::optional<Elt> sqrt(Elt x) const;

    bool minus_three_square() const { return is_nonzero_square(from_int(-3)); }

    /// Smallest-encoded non-square (used as the GF(q^2) generator's square).
    Elt smallest_nonsquare() const { return smallest_nonsquare_; }

    /// Smallest-encoded generator of the multiplicative group.
    Elt primitive_element() const { return primitive_; }

private:
    Field() = default;

    int p_ = 0, k_ = 0, q_ = 0;
    std::vector<int> modulus_;
    std::vector<Elt> add_, mul_;
    std::vector<Elt> neg_, inv_;
    std::vector<int> sqrt_; // -1 when not a square
    Elt smallest_nonsquare_ = 0;
    Elt primitive_ = 0;
};

/// a + b*w in GF(q^2), with w^2 equal to the base field's smallest non-square.
struct ExtElt {
    Elt a = 0, b = 0;
    bool operator==(const ExtElt&) const = default;
};

/// The quadratic extension GF(q^2) over a fixed base field.
class ExtField {
public:
    explicit ExtField(const Field& base);

    const Field& base() const { return *base_; }
    Elt omega_sq() const { return n_; }

    ExtElt lift(Elt a) const { return {a, 0}; }
    bool in_base(ExtElt x) const { return x.b == 0; }
    Elt project(ExtElt x) const;

    ExtElt add(ExtElt x, ExtElt y) const;
    ExtElt sub(ExtElt x, ExtElt y) const;
    ExtElt mul(ExtElt x, ExtElt y) const;
    ExtElt neg(ExtElt x) const;
    ExtElt inv(ExtElt x) const;

    /// x -> x^q; an involution fixing exactly the GF(q)-rational elements.
    ExtElt frobenius(ExtElt x) const { return {x.a, base_->neg(x.b)}; }

    /// x + x^q, always in the base field.
    Elt trace(ExtElt x) const { return base_->add(x.a, x.a); }

    /// x * x^q, always in the base field.
    Elt norm(ExtElt x) const;

    std::vector<ExtElt> all_elements() const;

private:
    const Field* base_;
    Elt n_;
};

} // namespace tcubic
