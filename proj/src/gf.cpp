#include "tcubic/gf.hpp"

#include <algorithm>
#include <stdexcept>

namespace tcubic {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Coefficient vectors over GF(p), low-to-high degree, possibly with trailing
// zeros. Used only while building the multiplication table.
using Poly = std::vector<int>;

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, int p) {
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    int k = static_cast<int>(mod.size()) - 1; // mod is monic of degree k
    for (int d = static_cast<int>(prod.size()) - 1; d >= k; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < k; ++i)
            prod[d - k + i] = ((prod[d - k + i] - c * mod[i]) % p + p * p) % p;
    }
    prod.resize(k);
    return prod;
}

Poly decode(int v, int p, int k) {
    Poly c(k, 0);
    for (int i = 0; i < k; ++i) {
        c[i] = v % p;
        v /= p;
    }
    return c;
}

int encode(const Poly& c, int p) {
    int v = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * p + c[i];
    return v;
}

// Trial division by all monic polynomials of degree 1..deg/2.
bool is_irreducible(const Poly& f, int p) {
    int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int v = 0; v < count; ++v) {
            Poly g = decode(v, p, d);
            g.push_back(1); // monic divisor candidate
            // Remainder of f mod g.
            Poly r = f;
            for (int t = deg; t >= d; --t) {
                int c = r[t];
                if (c == 0) continue;
                for (int i = 0; i <= d; ++i)
                    r[t - d + i] = ((r[t - d + i] - c * g[i]) % p + p * p) % p;
            }
            if (std::all_of(r.begin(), r.begin() + d, [](int x) { return x == 0; }))
                return false;
        }
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree k over GF(p),
// coefficients ordered low-to-high degree.
Poly smallest_irreducible(int p, int k) {
    int count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (int v = 0; v < count; ++v) {
        Poly f = decode(v, p, k);
        f.push_back(1);
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

} // namespace

Field Field::make(int p, int k) {
    if (p == 2) throw std::invalid_argument("even characteristic");
    if (!is_prime(p)) throw std::invalid_argument("characteristic is not prime");
    if (k < 1) throw std::invalid_argument("degree must be >= 1");

    Field f;
    f.p_ = p;
    f.k_ = k;
    long q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > 60000) throw std::invalid_argument("field too large");
    }
    f.q_ = static_cast<int>(q);

    if (k == 1) {
        f.modulus_ = {0, 1};
    } else {
        f.modulus_ = smallest_irreducible(p, k);
    }

    const int n = f.q_;
    f.add_.resize(static_cast<size_t>(n) * n);
    f.mul_.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        Poly pa = decode(a, p, k);
        for (int b = 0; b <= a; ++b) {
            Poly pb = decode(b, p, k);
            Poly s(k);
            for (int i = 0; i < k; ++i) s[i] = (pa[i] + pb[i]) % p;
            Elt sum = static_cast<Elt>(encode(s, p));
            Elt prod = static_cast<Elt>(encode(poly_mul_mod(pa, pb, f.modulus_, p), p));
            f.add_[static_cast<size_t>(a) * n + b] = sum;
            f.add_[static_cast<size_t>(b) * n + a] = sum;
            f.mul_[static_cast<size_t>(a) * n + b] = prod;
            f.mul_[static_cast<size_t>(b) * n + a] = prod;
        }
    }

    f.neg_.resize(n);
    f.inv_.assign(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (f.add_[static_cast<size_t>(a) * n + b] == 0) f.neg_[a] = static_cast<Elt>(b);
            if (a != 0 && f.mul_[static_cast<size_t>(a) * n + b] == 1)
                f.inv_[a] = static_cast<Elt>(b);
        }

    f.sqrt_.assign(n, -1);
    for (int y = n - 1; y >= 0; --y)
        f.sqrt_[f.mul_[static_cast<size_t>(y) * n + y]] = y; // keeps the smaller root

    f.smallest_nonsquare_ = 0;
    for (int x = 1; x < n; ++x)
        if (f.sqrt_[x] < 0) {
            f.smallest_nonsquare_ = static_cast<Elt>(x);
            break;
        }

    for (int x = 2; x < n; ++x) {
        Elt acc = static_cast<Elt>(x);
        int order = 1;
        while (acc != 1) {
            acc = f.mul_[static_cast<size_t>(acc) * n + x];
            ++order;
        }
        if (order == n - 1) {
            f.primitive_ = static_cast<Elt>(x);
            break;
        }
    }

    return f;
}

Field Field::parse(const std::string& spec) {
    auto caret = spec.find('^');
    if (caret != std::string::npos) {
        int p = std::stoi(spec.substr(0, caret));
        int k = std::stoi(spec.substr(caret + 1));
        return make(p, k);
    }
    long q = std::stol(spec);
    if (q < 2) throw std::invalid_argument("invalid field order");
    // Factor q as p^k.
    int p = 0;
    for (int d = 2; static_cast<long>(d) * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return make(static_cast<int>(q), 1);
    int k = 0;
    long rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) throw std::invalid_argument("field order is not a prime power");
    return make(p, k);
}

Elt Field::inv(Elt a) const {
    if (a == 0) throw std::domain_error("inversion of zero");
    return inv_[a];
}

Elt Field::pow(Elt a, long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    Elt r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elt Field::from_int(long v) const {
    long r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Elt>(r);
}

std::optional<Elt> Field::sqrt(Elt x) const {
    if (sqrt_[x] < 0) return std::nullopt;
    return static_cast<Elt>(sqrt_[x]);
}

ExtField::ExtField(const Field& base) : base_(&base), n_(base.smallest_nonsquare()) {}

Elt ExtField::project(ExtElt x) const {
    if (x.b != 0) throw std::domain_error("element outside the base subfield");
    return x.a;
}

ExtElt ExtField::add(ExtElt x, ExtElt y) const {
    return {base_->add(x.a, y.a), base_->add(x.b, y.b)};
}

ExtElt ExtField::sub(ExtElt x, ExtElt y) const {
    return {base_->sub(x.a, y.a), base_->sub(x.b, y.b)};
}

ExtElt ExtField::mul(ExtElt x, ExtElt y) const {
    // (a + bw)(c + dw) = ac + bd*n + (ad + bc)w
    const Field& F = *base_;
    Elt re = F.add(F.mul(x.a, y.a), F.mul(F.mul(x.b, y.b), n_));
    Elt im = F.add(F.mul(x.a, y.b), F.mul(x.b, y.a));
    return {re, im};
}

ExtElt ExtField::neg(ExtElt x) const { return {base_->neg(x.a), base_->neg(x.b)}; }

ExtElt ExtField::inv(ExtElt x) const {
    const Field& F = *base_;
    // 1/(a + bw) = (a - bw) / (a^2 - n b^2); the norm is nonzero since n
    // is a non-square.
    Elt nm = F.sub(F.mul(x.a, x.a), F.mul(n_, F.mul(x.b, x.b)));
    if (nm == 0) throw std::domain_error("inversion of zero");
    Elt ni = F.inv(nm);
    return {F.mul(x.a, ni), F.mul(F.neg(x.b), ni)};
}

Elt ExtField::norm(ExtElt x) const {
    const Field& F = *base_;
    return F.sub(F.mul(x.a, x.a), F.mul(n_, F.mul(x.b, x.b)));
}

std::vector<ExtElt> ExtField::all_elements() const {
    std::vector<ExtElt> out;
    out.reserve(static_cast<size_t>(base_->q()) * base_->q());
    for (int a = 0; a < base_->q(); ++a)
        for (int b = 0; b < base_->q(); ++b)
            out.push_back({static_cast<Elt>(a), static_cast<Elt>(b)});
    return out;
}

} // namespace tcubic
