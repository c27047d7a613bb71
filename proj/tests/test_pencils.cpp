#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "tcubic/pencils.hpp"

using namespace tcubic;

TEST_CASE("cubic evaluation") {
    Field F = Field::make(5, 1);
    CHECK(eval_cubic(F, {0, 0, 0, 1}, {1, 0}) == 0); // X1^3 at (1,0)
    CHECK(eval_cubic(F, {0, 1, 0, 0}, {0, 1}) == 0); // X0^2 X1 at (0,1)
    CHECK(eval_cubic(F, {1, 0, 0, 1}, {1, 1}) == 2); // X0^3 + X1^3 at (1,1)
}

TEST_CASE("pencil construction and parsing") {
    Field F = Field::make(5, 1);
    Pencil P = pencil_from(F, {1, 0, 0, 0}, {0, 0, 0, 1});
    CHECK(P == parse_pencil(F, "1,0,0,0|0,0,0,1"));
    CHECK(P == parse_pencil(F, pencil_to_string(P)));
    CHECK_THROWS_WITH_AS(parse_pencil(F, "0,0,0,1|0,0,0,1"), doctest::Contains("rank < 2"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_pencil(F, "1,0,0"), std::invalid_argument);
}

TEST_CASE("base locus") {
    Field F = Field::make(5, 1);
    // P(X1^3, X0^2 X1): base point (1,0)
    auto base = base_locus(F, pencil_from(F, {0, 0, 0, 1}, {0, 1, 0, 0}));
    REQUIRE(base.size() == 1);
    CHECK(base[0] == Pt2{1, 0});
    CHECK(base_locus(F, pencil_from(F, {1, 0, 0, 0}, {0, 0, 0, 1})).empty());
    // P(X0^3, X1^2(X0 - X1))
    CHECK(base_locus(F, pencil_from(F, {1, 0, 0, 0}, {0, 0, 1, F.neg(1)})).empty());
}

TEST_CASE("pencil-line dictionary") {
    Field F = Field::make(5, 1);
    Pencil P = pencil_from(F, {1, 0, 0, 0}, {0, 0, 0, 1}); // P(X0^3, X1^3)
    CHECK(pencil_to_line(F, P) == line_from_planes(F, {1, 0, 0, 0}, {0, 0, 0, 1}));
    Pencil T = pencil_from(F, {0, 0, 0, 1}, {0, 0, 1, 0}); // P(X1^3, X0 X1^2)
    CHECK(pencil_to_line(F, T) == line_from_planes(F, {0, 0, 1, 0}, {0, 0, 0, 1}));

    CubicModel M(F);
    for (const Line& l : all_lines(F)) {
        Pencil Q = line_to_pencil(F, l);
        CHECK(pencil_to_line(F, Q) == l);
        CHECK(line_to_pencil(F, pencil_to_line(F, Q)) == Q);
        // base locus corresponds to l ∩ C under the Veronese map
        auto base = base_locus(F, Q);
        CHECK(static_cast<int>(base.size()) == M.curve_points_on(l));
        for (const Pt2& b : base) CHECK(point_on_line(F, veronese(F, b), l));
    }
}

TEST_CASE("pencil members and type census") {
    Field F = Field::make(5, 1);
    Pencil P = pencil_from(F, {1, 0, 0, 0}, {0, 0, 0, 1});
    auto members = pencil_members(F, P);
    CHECK(members.size() == 6);
    Pencil T = pencil_from(F, {0, 0, 0, 1}, {0, 1, 0, 0});
    CHECK(std::find(pencil_members(F, T).begin(), pencil_members(F, T).end(),
                    Cubic{0, 0, 0, 1}) != pencil_members(F, T).end());
    for (const Line& l : all_lines(F)) {
        auto census = member_type_census(F, Pencil{l.m});
        CHECK(census[0] + census[1] + census[2] + census[3] + census[4] == 6);
    }
}

TEST_CASE("cross-ratio") {
    Field F = Field::make(7, 1);
    // affine coords 0,1,2,3: (2-0)(3-1)/((2-1)(3-0)) = 4/3 = 6 mod 7
    CHECK(cross_ratio(F, {1, 0}, {1, 1}, {1, 2}, {1, 3}) == 6);
    // normalized frame: (inf,0;1,x) -> x under the (x3-x1)(x4-x2)/((x3-x2)(x4-x1)) form
    for (int x = 2; x < 7; ++x)
        CHECK(cross_ratio(F, {0, 1}, {1, 0}, {1, 1}, {1, static_cast<Elt>(x)}) ==
              static_cast<Elt>(x));
    // swapping the last two points inverts
    Elt u = cross_ratio(F, {1, 0}, {1, 1}, {1, 2}, {1, 3});
    CHECK(cross_ratio(F, {1, 0}, {1, 1}, {1, 3}, {1, 2}) == F.inv(u));
    CHECK_THROWS_AS(cross_ratio(F, {1, 0}, {1, 0}, {1, 2}, {1, 3}), std::invalid_argument);
    // invariance under projectivities
    for (const Mat2& g : group_generators(F)) {
        auto act = [&](Pt2 p) {
            return normalize2(F, {F.add(F.mul(p[0], g.a[0]), F.mul(p[1], g.a[2])),
                                  F.add(F.mul(p[0], g.a[1]), F.mul(p[1], g.a[3]))});
        };
        CHECK(cross_ratio(F, act({1, 0}), act({1, 1}), act({1, 2}), act({1, 3})) == u);
    }
}

TEST_CASE("J-invariant: quadruple formula vs closed form") {
    for (int q : {5, 7, 11, 13}) {
        Field F = Field::parse(std::to_string(q));
        std::vector<Pt2> pts;
        for (int t = 0; t < q; ++t) pts.push_back({1, static_cast<Elt>(t)});
        pts.push_back({0, 1});
        // invariance under all 24 orderings
        std::array<Pt2, 4> T{pts[0], pts[1], pts[2], pts[3]};
        Elt j0 = j_of_quadruple(F, T[0], T[1], T[2], T[3]);
        std::array<int, 4> idx{0, 1, 2, 3};
        do {
            CHECK(j_of_quadruple(F, T[idx[0]], T[idx[1]], T[idx[2]], T[idx[3]]) == j0);
        } while (std::next_permutation(idx.begin(), idx.end()));
        // agreement with the closed form on the cross-ratio
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = a + 1; b < pts.size(); ++b)
                for (std::size_t c = b + 1; c < pts.size(); ++c)
                    for (std::size_t d = c + 1; d < pts.size(); ++d) {
                        Elt u = cross_ratio(F, pts[a], pts[b], pts[c], pts[d]);
                        CHECK(j_of_quadruple(F, pts[a], pts[b], pts[c], pts[d]) == j_of_x(F, u));
                    }
    }
}

TEST_CASE("j_of_x is constant on S3-orbits of the cross-ratio") {
    for (int q : {5, 7, 11, 13}) {
        Field F = Field::parse(std::to_string(q));
        for (int u = 2; u < q; ++u) {
            Elt uu = static_cast<Elt>(u);
            Elt j = j_of_x(F, uu);
            for (Elt v : cross_ratio_orbit(F, uu)) {
                if (v == 0 || v == 1) continue; // never happens for u ∉ {0,1}
                CHECK(j_of_x(F, v) == j);
            }
        }
        CHECK_THROWS_AS(j_of_x(F, 0), std::invalid_argument);
        CHECK_THROWS_AS(j_of_x(F, 1), std::invalid_argument);
    }
    // harmonic orbit {2, 1/2, -1}
    Field F = Field::make(7, 1);
    CHECK(j_of_x(F, 2) == j_of_x(F, F.inv(2)));
    CHECK(j_of_x(F, 2) == j_of_x(F, F.neg(1)));
}

TEST_CASE("contains_type2") {
    Field F = Field::make(5, 1);
    CHECK(contains_type2(F, pencil_from(F, {1, 0, 0, 0}, {0, 0, 1, F.neg(1)})));
    CHECK(contains_type2(F, pencil_from(F, {0, 0, 0, 1}, {0, 1, 0, 0})));
    // P((X1-uX0)^3, X0X1(X0-X1)) with u^2-u+1 non-square has no type-2 member
    for (int u = 0; u < 5; ++u) {
        Elt uu = static_cast<Elt>(u);
        Elt disc = F.add(F.sub(F.mul(uu, uu), uu), 1);
        if (disc == 0 || F.is_nonzero_square(disc)) continue;
        Cubic f1{F.neg(F.mul(F.mul(uu, uu), uu)), F.mul(3, F.mul(uu, uu)), F.neg(F.mul(3, uu)), 1};
        Cubic f2{0, 1, F.neg(1), 0};
        CHECK_FALSE(contains_type2(F, pencil_from(F, f1, f2)));
    }
}

TEST_CASE("type-2 exclusion criterion, exhaustive") {
    for (int q : {5, 7}) {
        Field F = Field::parse(std::to_string(q));
        Classifier cls(F);
        NoType2Report rep = check_notype2(cls);
        CHECK(rep.pencils_checked > 0);
        CHECK(rep.counterexamples.empty());
    }
}

TEST_CASE("pencils with a base point map into the unisecant orbits") {
    Field F = Field::make(5, 1);
    Classifier cls(F);
    BasePointReport rep = check_base_point_lemma(cls);
    CHECK(rep.pencils_with_base > 0);
    CHECK(rep.counterexamples.empty());
}
