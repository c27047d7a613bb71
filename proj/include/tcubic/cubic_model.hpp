#pragma once

#include <unordered_set>
#include <vector>

#include "tcubic/pg.hpp"

namespace tcubic {

/// Parameter of a point P(t) of the twisted cubic: a field element or the
/// infinity symbol, q+1 values in total.
struct Param {
    Elt t = 0;
    bool inf = false;

    static Param at(Elt t) { return {t, false}; }
    static Param infinity() { return {0, true}; }
    bool operator==(const Param&) const = default;
};

std::vector<Param> all_params(const Field& F);

/// Coefficients (y30, y21, y12, y03) of y30 X0^3 + y21 X0^2 X1 + y12 X0 X1^2
/// + y03 X1^3, projectively normalized. Shared with the pencils layer.
using Cubic = Pt4;

Pt4 veronese(const Field& F, const Pt2& x);
Pt4 curve_point(const Field& F, Param t);

/// Plane with the cubic's coefficients as dual coordinates; its intersection
/// with the curve is the image of the cubic's rational zero set.
Pt4 delta3(const Field& F, const Cubic& f);

Pt4 osculating_plane(const Field& F, Param t);
Line tangent_line(const Field& F, Param t);
Line real_chord(const Field& F, Param t1, Param t2);

Pt4 sigma_point(const Field& F, const Pt4& p);
Line sigma_line(const Field& F, const Line& l);

/// 2x2 invertible matrix modulo scalars; canonical form scales the first
/// nonzero entry in row-major order to 1. Row-vector convention:
/// (x0,x1) -> (x0,x1) * M.
struct Mat2 {
    std::array<Elt, 4> a{}; // a b / c d
    bool operator==(const Mat2&) const = default;
};

struct Mat4 {
    std::array<Elt, 16> a{};
};

Mat2 canon2(const Field& F, std::array<Elt, 4> raw);
Mat2 mul2(const Field& F, const Mat2& x, const Mat2& y);

/// The cubic Veronese lift: phi(g) * nu3(x) = nu3(x * g) for every point of
/// PG(1,q), acting on row vectors from the right.
Mat4 phi(const Field& F, const Mat2& g);

Mat4 canon4(const Field& F, Mat4 m);
Mat4 mat4_inverse(const Field& F, const Mat4& m);

Pt4 apply_point(const Field& F, const Mat4& m, const Pt4& p);
Line apply_line(const Field& F, const Mat4& m, const Line& l);

/// Image of a plane under the projectivity with matrix m; expects the
/// precomputed inverse.
Pt4 apply_plane(const Field& F, const Mat4& m_inv, const Pt4& h);

/// x -> x+1, x -> lambda x, x -> 1/x as 2x2 matrices.
std::vector<Mat2> group_generators(const Field& F);
long group_order(const Field& F);

/// All q^3 - q canonical elements of PGL(2,q).
std::vector<Mat2> all_group_elements(const Field& F);

/// The twisted cubic with its tangent, chord, and osculating-plane sets.
/// Built once, immutable afterwards.
class CubicModel {
public:
    explicit CubicModel(const Field& F);

    const Field& field() const { return *F_; }
    const std::vector<Param>& params() const { return params_; }
    const std::vector<Pt4>& curve_points() const { return points_; }
    const std::vector<Pt4>& osc_planes() const { return osc_planes_; }
    const std::vector<Line>& tangents() const { return tangents_; }
    const std::vector<Line>& imaginary_chords() const { return imag_chords_; }

    bool on_curve(const Pt4& p) const { return curve_set_.count(pack4(*F_, p)) != 0; }
    bool is_osc_plane(const Pt4& h) const { return osc_set_.count(pack4(*F_, h)) != 0; }
    bool is_tangent(const Line& l) const { return tangent_set_.count(pack_line(*F_, l)) != 0; }
    bool is_real_chord(const Line& l) const { return real_chord_set_.count(pack_line(*F_, l)) != 0; }
    bool is_imaginary_chord(const Line& l) const {
        return imag_chord_set_.count(pack_line(*F_, l)) != 0;
    }

    int curve_points_on(const Line& l) const;
    int osc_planes_containing(const Line& l) const;
    int osc_planes_through(const Pt4& p) const;
    bool on_some_tangent(const Pt4& p) const;

private:
    const Field* F_;
    std::vector<Param> params_;
    std::vector<Pt4> points_;
    std::vector<Pt4> osc_planes_;
    std::vector<Line> tangents_;
    std::vector<Line> imag_chords_;
    std::unordered_set<std::uint32_t> curve_set_, osc_set_;
    std::unordered_set<std::uint64_t> tangent_set_, real_chord_set_, imag_chord_set_;
};

} // namespace tcubic
