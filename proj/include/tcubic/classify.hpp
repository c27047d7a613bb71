#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tcubic/cubic_model.hpp"

namespace tcubic {

/// Factorization type of a binary cubic over GF(q); the enumerator order
/// matches the plane orbits H1..H5 and point orbits P1..P5.
enum class RootType : std::int8_t {
    Triple = 0,        // H1 / P1
    DoubleSimple = 1,  // H2 / P2
    ThreeDistinct = 2, // H3 / P3
    OneRational = 3,   // H4 / P4
    NoRational = 4,    // H5 / P5
};

Elt eval_cubic(const Field& F, const Cubic& f, const Pt2& x);

/// Distinct rational zeros of a nonzero cubic form, as normalized points of
/// PG(1,q).
std::vector<Pt2> cubic_roots(const Field& F, const Cubic& f);

RootType cubic_root_type(const Field& F, const Cubic& f);

/// Line classes of PG(3,q) refined by duality; every line falls in exactly
/// one cell.
enum class LineCell : std::int8_t {
    O1 = 0,  // real chords
    O1d,     // real axes (intersections of two osculating planes)
    O2,      // tangents
    O3,      // imaginary chords
    O3d,     // imaginary axes
    O4,      // non-tangent unisecants in osculating planes
    O5,      // unisecants not in osculating planes
    O5d,     // external lines in exactly one osculating plane
    O6,      // all remaining external lines
};

std::string cell_name(LineCell c);

/// 1..10 for the named orbits L1..L10; 0 for the unclassified O6 residue.
using OrbitLabel = int;

std::string label_name(OrbitLabel l);

struct OD {
    std::array<int, 5> v{};
    bool operator==(const OD&) const = default;
};

std::string od_to_string(const OD& od);

/// Exact class size of each cell as a function of q.
long cell_size_formula(LineCell c, long q);

/// Closed-form (OD2, OD0) for L1..L10; the branch is chosen by whether -3 is
/// a square. All divisions are exact for gcd(q,6)=1.
struct ExpectedOD {
    OD od2, od0;
};
ExpectedOD expected_od(OrbitLabel label, const Field& F);

/// Point/plane/line classification against a fixed twisted cubic, with all
/// q^3+q^2+q+1 point and plane classes precomputed.
class Classifier {
public:
    explicit Classifier(const Field& F);

    const Field& field() const { return *F_; }
    const CubicModel& model() const { return model_; }

    RootType classify_plane(const Pt4& h) const {
        return plane_class_[pack4(*F_, h)];
    }
    RootType classify_point(const Pt4& p) const {
        return point_class_[pack4(*F_, p)];
    }

    /// Direct definition of the point orbits (membership on C, tangent
    /// lines, osculating-plane counts); used as a cross-check oracle.
    RootType classify_point_direct(const Pt4& p) const;

    OD od0(const Line& l) const;
    OD od2(const Line& l) const;

    LineCell classify_line_cell(const Line& l) const;
    OrbitLabel classify_line_orbit(const Line& l) const;

    std::array<long, 5> point_class_sizes() const;
    std::array<long, 5> plane_class_sizes() const;

private:
    const Field* F_;
    CubicModel model_;
    std::vector<RootType> plane_class_; // indexed by pack4
    std::vector<RootType> point_class_;
};

} // namespace tcubic
