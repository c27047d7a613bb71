#include "tcubic/classify.hpp"

#include <stdexcept>

namespace tcubic {

Elt eval_cubic(const Field& F, const Cubic& f, const Pt2& x) {
    Elt a = x[0], b = x[1];
    Elt a2 = F.mul(a, a), b2 = F.mul(b, b);
    Elt s = F.mul(f[0], F.mul(a2, a));
    s = F.add(s, F.mul(f[1], F.mul(a2, b)));
    s = F.add(s, F.mul(f[2], F.mul(a, b2)));
    s = F.add(s, F.mul(f[3], F.mul(b2, b)));
    return s;
}

static std::vector<Pt2> pg1_points(const Field& F) {
    std::vector<Pt2> pts;
    pts.reserve(F.q() + 1);
    for (int t = 0; t < F.q(); ++t) pts.push_back(Pt2{1, static_cast<Elt>(t)});
    pts.push_back(Pt2{0, 1});
    return pts;
}

std::vector<Pt2> cubic_roots(const Field& F, const Cubic& f) {
    bool zero = f[0] == 0 && f[1] == 0 && f[2] == 0 && f[3] == 0;
    if (zero) throw std::invalid_argument("zero form");
    std::vector<Pt2> roots;
    for (const Pt2& x : pg1_points(F))
        if (eval_cubic(F, f, x) == 0) roots.push_back(x);
    return roots;
}

// Exact division of f by the linear form b X0 - a X1 vanishing at root (a,b).
static std::array<Elt, 3> divide_by_root(const Field& F, const Cubic& f, const Pt2& r) {
    Elt a = r[0], b = r[1];
    std::array<Elt, 3> quot{};
    if (b != 0) {
        Elt bi = F.inv(b);
        quot[0] = F.mul(f[0], bi);
        quot[1] = F.mul(F.add(f[1], F.mul(a, quot[0])), bi);
        quot[2] = F.mul(F.add(f[2], F.mul(a, quot[1])), bi);
    } else {
        // Root (1,0): the linear factor is X1 up to scalar.
        quot[0] = F.neg(f[1]);
        quot[1] = F.neg(f[2]);
        quot[2] = F.neg(f[3]);
    }
    return quot;
}

static Elt eval_quad(const Field& F, const std::array<Elt, 3>& g, const Pt2& x) {
    Elt a = x[0], b = x[1];
    Elt s = F.mul(g[0], F.mul(a, a));
    s = F.add(s, F.mul(g[1], F.mul(a, b)));
    return F.add(s, F.mul(g[2], F.mul(b, b)));
}

RootType cubic_root_type(const Field& F, const Cubic& f) {
    std::vector<Pt2> roots = cubic_roots(F, f);
    switch (roots.size()) {
        case 0: return RootType::NoRational;
        case 2: return RootType::DoubleSimple;
        case 3: return RootType::ThreeDistinct;
        case 1: {
            auto quot = divide_by_root(F, f, roots[0]);
            // The quadratic cofactor either vanishes again at the root
            // (triple root) or has no rational zero at all.
            return eval_quad(F, quot, roots[0]) == 0 ? RootType::Triple
                                                     : RootType::OneRational;
        }
        default: throw std::logic_error("cubic with more than 3 roots");
    }
}

std::string cell_name(LineCell c) {
    switch (c) {
        case LineCell::O1: return "O1";
        case LineCell::O1d: return "O1^perp";
        case LineCell::O2: return "O2";
        case LineCell::O3: return "O3";
        case LineCell::O3d: return "O3^perp";
        case LineCell::O4: return "O4";
        case LineCell::O5: return "O5";
        case LineCell::O5d: return "O5^perp";
        case LineCell::O6: return "O6";
    }
    return "?";
}

std::string label_name(OrbitLabel l) {
    if (l == 0) return "O6-residual";
    return "L" + std::to_string(l);
}

std::string od_to_string(const OD& od) {
    std::string s = "[";
    for (int i = 0; i < 5; ++i) {
        if (i) s += ",";
        s += std::to_string(od.v[i]);
    }
    return s + "]";
}

long cell_size_formula(LineCell c, long q) {
    switch (c) {
        case LineCell::O1: return q * (q + 1) / 2;
        case LineCell::O1d: return q * (q + 1) / 2;
        case LineCell::O2: return q + 1;
        case LineCell::O3: return q * (q - 1) / 2;
        case LineCell::O3d: return q * (q - 1) / 2;
        case LineCell::O4: return q * (q + 1);
        case LineCell::O5: return q * (q * q - 1);
        case LineCell::O5d: return q * (q * q - 1);
        case LineCell::O6: return q * (q - 1) * (q * q - 1);
    }
    return 0;
}

static OD make_od(long a, long b, long c, long d, long e) {
    for (long x : {a, b, c, d, e})
        if (x < 0) throw std::logic_error("negative orbit distribution entry");
    return OD{{static_cast<int>(a), static_cast<int>(b), static_cast<int>(c),
               static_cast<int>(d), static_cast<int>(e)}};
}

static long exact_div(long n, long d) {
    if (n % d != 0) throw std::logic_error("non-integral orbit distribution formula");
    return n / d;
}

ExpectedOD expected_od(OrbitLabel label, const Field& F) {
    const long q = F.q();
    if (q % 2 == 0 || q % 3 == 0) throw std::invalid_argument("q must be coprime to 6");
    const bool sq = F.minus_three_square(); // equivalent to q = 1 mod 6
    switch (label) {
        case 1: // L1 = O1^perp
            return {sq ? make_od(2, 0, exact_div(q - 1, 3), 0, exact_div(2 * (q - 1), 3))
                       : make_od(2, 0, 0, q - 1, 0),
                    make_od(0, 2, q - 1, 0, 0)};
        case 2: // L2 = O2
            return {make_od(1, q, 0, 0, 0), make_od(1, q, 0, 0, 0)};
        case 3: // L3 = O4
            return {make_od(1, 1, exact_div(q - 1, 2), exact_div(q - 1, 2), 0),
                    make_od(1, 1, exact_div(q - 1, 2), exact_div(q - 1, 2), 0)};
        case 4: // L4 in O5^perp
            return {sq ? make_od(1, 2, exact_div(q - 7, 6), exact_div(q - 1, 2),
                                 exact_div(q - 1, 3))
                       : make_od(1, 2, exact_div(q - 5, 6), exact_div(q - 3, 2),
                                 exact_div(q + 1, 3)),
                    make_od(0, 3, exact_div(q - 3, 2), exact_div(q - 1, 2), 0)};
        case 5: // L5 in O5^perp
            return {sq ? make_od(1, 0, exact_div(q - 1, 6), exact_div(q + 1, 2),
                                 exact_div(q - 1, 3))
                       : make_od(1, 0, exact_div(q + 1, 6), exact_div(q - 1, 2),
                                 exact_div(q + 1, 3)),
                    make_od(0, 1, exact_div(q - 1, 2), exact_div(q + 1, 2), 0)};
        case 6: // L6 = O1 (polar of L1)
            return {make_od(0, 2, q - 1, 0, 0),
                    sq ? make_od(2, 0, exact_div(q - 1, 3), 0, exact_div(2 * (q - 1), 3))
                       : make_od(2, 0, 0, q - 1, 0)};
        case 7: // L7 in O5 (polar of L4)
            return {make_od(0, 3, exact_div(q - 3, 2), exact_div(q - 1, 2), 0),
                    sq ? make_od(1, 2, exact_div(q - 7, 6), exact_div(q - 1, 2),
                                 exact_div(q - 1, 3))
                       : make_od(1, 2, exact_div(q - 5, 6), exact_div(q - 3, 2),
                                 exact_div(q + 1, 3))};
        case 8: // L8 in O5 (polar of L5)
            return {make_od(0, 1, exact_div(q - 1, 2), exact_div(q + 1, 2), 0),
                    sq ? make_od(1, 0, exact_div(q - 1, 6), exact_div(q + 1, 2),
                                 exact_div(q - 1, 3))
                       : make_od(1, 0, exact_div(q + 1, 6), exact_div(q - 1, 2),
                                 exact_div(q + 1, 3))};
        case 9: // L9 = O3 (imaginary chords)
            return {make_od(0, 0, 0, q + 1, 0),
                    sq ? make_od(0, 0, 0, q + 1, 0)
                       : make_od(0, 0, exact_div(q + 1, 3), 0, exact_div(2 * (q + 1), 3))};
        case 10: // L10 = O3^perp (imaginary axes)
            return {sq ? make_od(0, 0, 0, q + 1, 0)
                       : make_od(0, 0, exact_div(q + 1, 3), 0, exact_div(2 * (q + 1), 3)),
                    make_od(0, 0, 0, q + 1, 0)};
        default: throw std::invalid_argument("expected_od requires a label L1..L10");
    }
}

Classifier::Classifier(const Field& F) : F_(&F), model_(F) {
    if (F.q() % 3 == 0) throw std::invalid_argument("q divisible by 3 is not supported");
    const std::size_t keys = static_cast<std::size_t>(F.q()) * F.q() * F.q() * F.q();
    plane_class_.assign(keys, RootType::NoRational);
    point_class_.assign(keys, RootType::NoRational);
    for (const Pt4& h : all_planes(F))
        plane_class_[pack4(F, h)] = cubic_root_type(F, h);
    for (const Pt4& p : all_points(F))
        point_class_[pack4(F, p)] = plane_class_[pack4(F, sigma_point(F, p))];
}

RootType Classifier::classify_point_direct(const Pt4& p) const {
    if (model_.on_curve(p)) return RootType::Triple;
    if (model_.on_some_tangent(p)) return RootType::DoubleSimple;
    switch (model_.osc_planes_through(p)) {
        case 3: return RootType::ThreeDistinct;
        case 1: return RootType::OneRational;
        case 0: return RootType::NoRational;
        default: throw std::logic_error("unexpected osculating plane count");
    }
}

OD Classifier::od0(const Line& l) const {
    OD od;
    for (const Pt4& p : points_on_line(*F_, l)) ++od.v[static_cast<int>(classify_point(p))];
    return od;
}

OD Classifier::od2(const Line& l) const {
    OD od;
    for (const Pt4& h : planes_through_line(*F_, l)) ++od.v[static_cast<int>(classify_plane(h))];
    return od;
}

LineCell Classifier::classify_line_cell(const Line& l) const {
    int n = model_.curve_points_on(l);
    if (n == 2) return LineCell::O1;
    if (n == 1) {
        if (model_.is_tangent(l)) return LineCell::O2;
        return model_.osc_planes_containing(l) > 0 ? LineCell::O4 : LineCell::O5;
    }
    if (model_.is_imaginary_chord(l)) return LineCell::O3;
    if (model_.is_imaginary_chord(sigma_line(*F_, l))) return LineCell::O3d;
    switch (model_.osc_planes_containing(l)) {
        case 2: return LineCell::O1d;
        case 1: return LineCell::O5d;
        case 0: return LineCell::O6;
        default: throw std::logic_error("external line in >2 osculating planes");
    }
}

OrbitLabel Classifier::classify_line_orbit(const Line& l) const {
    switch (classify_line_cell(l)) {
        case LineCell::O1: return 6;
        case LineCell::O1d: return 1;
        case LineCell::O2: return 2;
        case LineCell::O3: return 9;
        case LineCell::O3d: return 10;
        case LineCell::O4: return 3;
        case LineCell::O5d: return od0(l).v[1] == 3 ? 4 : 5;
        case LineCell::O5: return od2(l).v[1] == 3 ? 7 : 8;
        case LineCell::O6: return 0;
    }
    throw std::logic_error("unreachable");
}

std::array<long, 5> Classifier::point_class_sizes() const {
    std::array<long, 5> sizes{};
    for (const Pt4& p : all_points(*F_)) ++sizes[static_cast<int>(classify_point(p))];
    return sizes;
}

std::array<long, 5> Classifier::plane_class_sizes() const {
    std::array<long, 5> sizes{};
    for (const Pt4& h : all_planes(*F_)) ++sizes[static_cast<int>(classify_plane(h))];
    return sizes;
}

} // namespace tcubic
