#pragma once

#include "tcubic/classify.hpp"

namespace tcubic {

/// Pencil of binary cubics: the 2x4 RREF of two independent coefficient
/// vectors, canonicalized exactly like a line.
struct Pencil {
    std::array<Elt, 8> m{};
    bool operator==(const Pencil&) const = default;
};

Pencil pencil_from(const Field& F, const Cubic& f1, const Cubic& f2);

/// "y30,y21,y12,y03|y30,y21,y12,y03"
Pencil parse_pencil(const Field& F, const std::string& s);
Cubic parse_cubic(const Field& F, const std::string& s);
std::string cubic_to_string(const Cubic& f);
std::string pencil_to_string(const Pencil& P);

/// The dictionary between pencils and lines: delta3 of the two generators
/// intersected. Mutually inverse with line_to_pencil.
Line pencil_to_line(const Field& F, const Pencil& P);
Pencil line_to_pencil(const Field& F, const Line& l);

/// Common rational zeros of all members.
std::vector<Pt2> base_locus(const Field& F, const Pencil& P);

/// The q+1 projectively distinct members.
std::vector<Cubic> pencil_members(const Field& F, const Pencil& P);

/// Counts per cubic type 1..5 (indexed by RootType), summing to q+1.
std::array<int, 5> member_type_census(const Field& F, const Pencil& P);

/// Cross-ratio (p1,p2;p3,p4) of four distinct points of PG(1,q); never
/// 0, 1, or infinity for distinct points.
Elt cross_ratio(const Field& F, const Pt2& p1, const Pt2& p2, const Pt2& p3, const Pt2& p4);

/// Sum of pairwise products of the six cross-ratios of an unordered
/// quadruple; invariant under relabeling.
Elt j_of_quadruple(const Field& F, const Pt2& p1, const Pt2& p2, const Pt2& p3, const Pt2& p4);

/// Closed form 6 - (u^2-u+1)^3 / (u^2 (u-1)^2), matching j_of_quadruple on
/// any quadruple with cross-ratio u. The denominator exponent differs from
/// the published formula, which is not invariant under u -> 1/u.
Elt j_of_x(const Field& F, Elt u);

/// The six cross-ratio values {u, 1/u, 1-u, 1/(1-u), (u-1)/u, u/(u-1)}.
std::array<Elt, 6> cross_ratio_orbit(const Field& F, Elt u);

bool contains_type2(const Field& F, const Pencil& P);

struct NoType2Report {
    int q = 0;
    long pencils_checked = 0; // pencils with a type-1 and a type-3 member, empty base
    std::vector<std::string> counterexamples;
    bool pass() const { return counterexamples.empty(); }
};

/// Exhaustive biconditional check: a type-1/type-3 pencil with empty base
/// has no type-2 member iff its J-invariant is J(u) for some u with
/// u^2-u+1 a non-square.
NoType2Report check_notype2(const Classifier& cls);

struct BasePointReport {
    long pencils_with_base = 0;
    std::vector<std::string> counterexamples;
    bool pass() const { return counterexamples.empty(); }
};

/// Every pencil with a base point maps to a line in L2, L3, L6, L7 or L8.
BasePointReport check_base_point_lemma(const Classifier& cls);

} // namespace tcubic
