#include "tcubic/pencils.hpp"

#include <stdexcept>
#include <unordered_set>

namespace tcubic {

Pencil pencil_from(const Field& F, const Cubic& f1, const Cubic& f2) {
    Line span;
    try {
        span = line_from_rows(F, f1, f2);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("degenerate pencil: rank < 2");
    }
    return Pencil{span.m};
}

Cubic parse_cubic(const Field& F, const std::string& s) {
    Cubic f{};
    size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        size_t next = s.find(',', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
        long v = std::stol(tok);
        if (v < 0 || v >= F.q()) throw std::invalid_argument("coefficient out of range");
        f[i] = static_cast<Elt>(v);
        if (i < 3) {
            if (next == std::string::npos) throw std::invalid_argument("expected 4 coefficients");
            pos = next + 1;
        }
    }
    return f;
}

Pencil parse_pencil(const Field& F, const std::string& s) {
    auto bar = s.find('|');
    if (bar == std::string::npos)
        throw std::invalid_argument("pencil syntax is \"cubic|cubic\"");
    return pencil_from(F, parse_cubic(F, s.substr(0, bar)), parse_cubic(F, s.substr(bar + 1)));
}

std::string cubic_to_string(const Cubic& f) {
    std::string s;
    for (int i = 0; i < 4; ++i) {
        if (i) s += ',';
        s += std::to_string(f[i]);
    }
    return s;
}

std::string pencil_to_string(const Pencil& P) {
    Cubic f1{P.m[0], P.m[1], P.m[2], P.m[3]};
    Cubic f2{P.m[4], P.m[5], P.m[6], P.m[7]};
    return cubic_to_string(f1) + "|" + cubic_to_string(f2);
}

Line pencil_to_line(const Field& F, const Pencil& P) {
    Pt4 h1{P.m[0], P.m[1], P.m[2], P.m[3]};
    Pt4 h2{P.m[4], P.m[5], P.m[6], P.m[7]};
    return line_from_planes(F, h1, h2);
}

Pencil line_to_pencil(const Field& F, const Line& l) {
    auto basis = null_space(F, l);
    Line span = line_from_rows(F, basis[0], basis[1]);
    return Pencil{span.m};
}

std::vector<Pt2> base_locus(const Field& F, const Pencil& P) {
    Cubic f1{P.m[0], P.m[1], P.m[2], P.m[3]};
    Cubic f2{P.m[4], P.m[5], P.m[6], P.m[7]};
    std::vector<Pt2> base;
    for (int t = 0; t <= F.q(); ++t) {
        Pt2 x = t < F.q() ? Pt2{1, static_cast<Elt>(t)} : Pt2{0, 1};
        if (eval_cubic(F, f1, x) == 0 && eval_cubic(F, f2, x) == 0) base.push_back(x);
    }
    return base;
}

std::vector<Cubic> pencil_members(const Field& F, const Pencil& P) {
    Cubic f1{P.m[0], P.m[1], P.m[2], P.m[3]};
    Cubic f2{P.m[4], P.m[5], P.m[6], P.m[7]};
    std::vector<Cubic> members;
    members.reserve(F.q() + 1);
    for (int t = 0; t < F.q(); ++t) {
        Cubic f;
        for (int j = 0; j < 4; ++j) f[j] = F.add(f1[j], F.mul(static_cast<Elt>(t), f2[j]));
        members.push_back(normalize4(F, f));
    }
    members.push_back(normalize4(F, f2));
    return members;
}

std::array<int, 5> member_type_census(const Field& F, const Pencil& P) {
    std::array<int, 5> census{};
    for (const Cubic& f : pencil_members(F, P))
        ++census[static_cast<int>(cubic_root_type(F, f))];
    return census;
}

static Elt det2(const Field& F, const Pt2& x, const Pt2& y) {
    return F.sub(F.mul(x[0], y[1]), F.mul(x[1], y[0]));
}

Elt cross_ratio(const Field& F, const Pt2& p1, const Pt2& p2, const Pt2& p3, const Pt2& p4) {
    // (x3-x1)(x4-x2) / ((x3-x2)(x4-x1)) in terms of 2x2 determinants, which
    // handles the affine coordinate infinity uniformly.
    Elt d13 = det2(F, p1, p3), d24 = det2(F, p2, p4);
    Elt d23 = det2(F, p2, p3), d14 = det2(F, p1, p4);
    if (d13 == 0 || d24 == 0 || d23 == 0 || d14 == 0 || det2(F, p1, p2) == 0 ||
        det2(F, p3, p4) == 0)
        throw std::invalid_argument("cross-ratio requires four distinct points");
    return F.mul(F.mul(d13, d24), F.inv(F.mul(d23, d14)));
}

std::array<Elt, 6> cross_ratio_orbit(const Field& F, Elt u) {
    Elt one = 1;
    Elt one_minus = F.sub(one, u);
    return {u,
            F.inv(u),
            one_minus,
            F.inv(one_minus),
            F.mul(F.neg(one_minus), F.inv(u)), // (u-1)/u
            F.mul(u, F.inv(F.neg(one_minus)))}; // u/(u-1)
}

Elt j_of_quadruple(const Field& F, const Pt2& p1, const Pt2& p2, const Pt2& p3, const Pt2& p4) {
    Elt u = cross_ratio(F, p1, p2, p3, p4);
    auto us = cross_ratio_orbit(F, u);
    // e2 of the six values via (e1^2 - sum of squares) / 2.
    Elt e1 = 0, sq = 0;
    for (Elt x : us) {
        e1 = F.add(e1, x);
        sq = F.add(sq, F.mul(x, x));
    }
    return F.mul(F.sub(F.mul(e1, e1), sq), F.inv(F.from_int(2)));
}

Elt j_of_x(const Field& F, Elt u) {
    if (u == 0 || u == 1) throw std::invalid_argument("J(u) is undefined at 0 and 1");
    Elt num = F.add(F.sub(F.mul(u, u), u), 1); // u^2 - u + 1
    Elt num3 = F.mul(F.mul(num, num), num);
    Elt um1 = F.sub(u, static_cast<Elt>(1));
    Elt den = F.mul(F.mul(u, u), F.mul(um1, um1));
    return F.sub(F.from_int(6), F.mul(num3, F.inv(den)));
}

bool contains_type2(const Field& F, const Pencil& P) {
    for (const Cubic& f : pencil_members(F, P))
        if (cubic_root_type(F, f) == RootType::DoubleSimple) return true;
    return false;
}

NoType2Report check_notype2(const Classifier& cls) {
    const Field& F = cls.field();
    NoType2Report report;
    report.q = F.q();

    // J values attainable with u^2-u+1 a non-square.
    std::unordered_set<Elt> good_j;
    for (int u = 2; u < F.q(); ++u) {
        Elt uu = static_cast<Elt>(u);
        Elt disc = F.add(F.sub(F.mul(uu, uu), uu), 1);
        if (!F.is_nonzero_square(disc)) good_j.insert(j_of_x(F, uu));
    }

    for (const Line& l : all_lines(F)) {
        Pencil P{l.m}; // pencils and lines share the canonical RREF space
        auto members = pencil_members(F, P);
        const Cubic* type1 = nullptr;
        const Cubic* type3 = nullptr;
        bool has_type2 = false;
        for (const Cubic& f : members) {
            // Reuse the precomputed plane classification: cubic coefficients
            // are exactly the dual plane coordinates under delta3.
            switch (cls.classify_plane(f)) {
                case RootType::Triple:
                    if (!type1) type1 = &f;
                    break;
                case RootType::ThreeDistinct:
                    if (!type3) type3 = &f;
                    break;
                case RootType::DoubleSimple: has_type2 = true; break;
                default: break;
            }
        }
        if (!type1 || !type3) continue;
        if (!base_locus(F, P).empty()) continue;
        ++report.pencils_checked;

        Pt2 triple_pt = cubic_roots(F, *type1).front();
        auto pts = cubic_roots(F, *type3);
        Elt j = j_of_quadruple(F, pts[0], pts[1], pts[2], triple_pt);
        bool j_good = good_j.count(j) != 0;
        if (j_good == has_type2)
            report.counterexamples.push_back(pencil_to_string(P));
    }
    return report;
}

BasePointReport check_base_point_lemma(const Classifier& cls) {
    const Field& F = cls.field();
    BasePointReport report;
    for (const Line& l : all_lines(F)) {
        Pencil P = line_to_pencil(F, l);
        if (base_locus(F, P).empty()) continue;
        ++report.pencils_with_base;
        OrbitLabel lab = cls.classify_line_orbit(pencil_to_line(F, P));
        if (lab != 2 && lab != 3 && lab != 6 && lab != 7 && lab != 8)
            report.counterexamples.push_back(pencil_to_string(P));
    }
    return report;
}

} // namespace tcubic
