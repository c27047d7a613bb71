#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "tcubic/classify.hpp"

using namespace tcubic;

TEST_CASE("cubic root types") {
    Field F = Field::make(5, 1);
    CHECK(cubic_root_type(F, {0, 0, 0, 1}) == RootType::Triple);        // X1^3
    CHECK(cubic_root_type(F, {0, 1, 0, 0}) == RootType::DoubleSimple);  // X0^2 X1
    // X1(X0^2 - 2X1^2): 2 is a non-square mod 5 -> one rational root
    CHECK(cubic_root_type(F, {0, 1, 0, F.neg(2)}) == RootType::OneRational);
    // X0 X1 (X0 - X1)
    CHECK(cubic_root_type(F, {0, 1, F.neg(1), 0}) == RootType::ThreeDistinct);
    // (X1 - X0)^3 = -X0^3 + 3X0^2X1 - 3X0X1^2 + X1^3
    CHECK(cubic_root_type(F, {F.neg(1), 3, F.neg(3), 1}) == RootType::Triple);
    CHECK_THROWS_AS(cubic_root_type(F, {0, 0, 0, 0}), std::invalid_argument);

    // irreducible cubics exist: count them
    int no_rational = 0;
    for (const Pt4& f : all_planes(F))
        no_rational += cubic_root_type(F, f) == RootType::NoRational;
    CHECK(no_rational == 5 * (25 - 1) / 3); // |H5| = q(q^2-1)/3
}

TEST_CASE("root enumeration with multiplicity classes") {
    for (int q : {5, 7, 11}) {
        Field F = Field::parse(std::to_string(q));
        for (const Pt4& f : all_planes(F)) { // all nonzero cubics up to scalar
            auto roots = cubic_roots(F, f);
            for (const Pt2& r : roots) CHECK(eval_cubic(F, f, r) == 0);
            switch (cubic_root_type(F, f)) {
                case RootType::Triple: CHECK(roots.size() == 1); break;
                case RootType::DoubleSimple: CHECK(roots.size() == 2); break;
                case RootType::ThreeDistinct: CHECK(roots.size() == 3); break;
                case RootType::OneRational: CHECK(roots.size() == 1); break;
                case RootType::NoRational: CHECK(roots.empty()); break;
            }
        }
    }
}

TEST_CASE("plane and point classification") {
    Field F = Field::make(5, 1);
    Classifier cls(F);
    CHECK(cls.classify_plane({0, 0, 0, 1}) == RootType::Triple);       // Z(Y3) = Pi(0)
    CHECK(cls.classify_plane({0, 1, 0, 0}) == RootType::DoubleSimple); // Z(Y1)
    // Z(Y2 - Y3): cubic X1^2(X0 - X1)
    CHECK(cls.classify_plane(normalize4(F, {0, 0, 1, F.neg(1)})) == RootType::DoubleSimple);
    CHECK(cls.classify_point({1, 0, 0, 0}) == RootType::Triple);       // on C
    CHECK(cls.classify_point({0, 1, 0, 0}) == RootType::DoubleSimple); // on tangent at P(0)
    for (int t = 1; t < 5; ++t)
        CHECK(cls.classify_point({0, 1, static_cast<Elt>(t), 0}) == RootType::ThreeDistinct);
}

TEST_CASE("sigma-based point classes match the direct definition") {
    for (int q : {5, 7}) {
        Field F = Field::parse(std::to_string(q));
        Classifier cls(F);
        for (const Pt4& p : all_points(F))
            CHECK(cls.classify_point(p) == cls.classify_point_direct(p));
    }
}

TEST_CASE("point and plane class sizes") {
    for (const char* spec : {"5", "7", "11", "13", "25"}) {
        Field F = Field::parse(spec);
        Classifier cls(F);
        long q = F.q();
        std::array<long, 5> expected{q + 1, q * (q + 1), q * (q * q - 1) / 6,
                                     q * (q * q - 1) / 2, q * (q * q - 1) / 3};
        CHECK(cls.plane_class_sizes() == expected);
        CHECK(cls.point_class_sizes() == expected);
    }
}

TEST_CASE("orbit distributions of Z(Y0,Y3)") {
    Field F5 = Field::make(5, 1);
    Classifier c5(F5);
    Line l5 = line_from_planes(F5, {1, 0, 0, 0}, {0, 0, 0, 1});
    CHECK(c5.od0(l5) == OD{{0, 2, 4, 0, 0}});
    CHECK(c5.od2(l5) == OD{{2, 0, 0, 4, 0}});

    Field F7 = Field::make(7, 1);
    Classifier c7(F7);
    Line l7 = line_from_planes(F7, {1, 0, 0, 0}, {0, 0, 0, 1});
    CHECK(c7.od2(l7) == OD{{2, 0, 2, 0, 4}});

    // entries always sum to q+1
    for (const Line& l : all_lines(F5)) {
        OD a = c5.od0(l), b = c5.od2(l);
        int sa = 0, sb = 0;
        for (int i = 0; i < 5; ++i) {
            sa += a.v[i];
            sb += b.v[i];
        }
        CHECK(sa == 6);
        CHECK(sb == 6);
    }
}

TEST_CASE("line cell examples") {
    Field F = Field::make(5, 1);
    Classifier cls(F);
    CHECK(cls.classify_line_cell(line_from_planes(F, {1, 0, 0, 0}, {0, 0, 0, 1})) ==
          LineCell::O1d); // Z(Y0,Y3)
    CHECK(cls.classify_line_cell(line_from_planes(F, {0, 1, 0, 0}, {0, 0, 0, 1})) ==
          LineCell::O4); // Z(Y1,Y3)
    CHECK(cls.classify_line_cell(line_from_planes(F, {1, 0, 0, 0},
                                                  normalize4(F, {0, 0, 1, F.neg(1)}))) ==
          LineCell::O5d); // Z(Y0, Y2-Y3)
    CHECK(cls.classify_line_cell(line_from_planes(F, {0, 0, 1, 0}, {0, 0, 0, 1})) ==
          LineCell::O2); // tangent at P(0)
}

TEST_CASE("cell sizes partition the line set") {
    for (const char* spec : {"5", "7", "11"}) {
        Field F = Field::parse(spec);
        Classifier cls(F);
        long q = F.q();
        std::array<long, 9> counts{};
        for (const Line& l : all_lines(F)) ++counts[static_cast<int>(cls.classify_line_cell(l))];
        long total = 0;
        for (int c = 0; c < 9; ++c) {
            CHECK(counts[c] == cell_size_formula(static_cast<LineCell>(c), q));
            total += counts[c];
        }
        CHECK(total == (q * q + 1) * (q * q + q + 1));
    }
}

TEST_CASE("orbit label examples") {
    Field F = Field::make(5, 1);
    Classifier cls(F);
    CHECK(cls.classify_line_orbit(line_from_planes(F, {1, 0, 0, 0}, {0, 0, 0, 1})) == 1);
    CHECK(cls.classify_line_orbit(line_from_planes(F, {0, 0, 1, 0}, {0, 0, 0, 1})) == 2);
    CHECK(cls.classify_line_orbit(line_from_planes(F, {0, 1, 0, 0}, {0, 0, 0, 1})) == 3);
    CHECK(cls.classify_line_orbit(line_from_planes(F, {1, 0, 0, 0},
                                                   normalize4(F, {0, 0, 1, F.neg(1)}))) == 4);
    // L5 representative: Z(Y3 - 3uY2 + 3u^2Y1 - u^3Y0, Y1 - Y2), u^2-u+1 non-square
    bool found_l5 = false;
    for (int u = 0; u < 5; ++u) {
        Elt uu = static_cast<Elt>(u);
        Elt disc = F.add(F.sub(F.mul(uu, uu), uu), 1);
        if (disc == 0 || F.is_nonzero_square(disc)) continue;
        Pt4 h1 = normalize4(F, {F.neg(F.mul(F.mul(uu, uu), uu)), F.mul(3, F.mul(uu, uu)),
                                F.neg(F.mul(3, uu)), 1});
        Pt4 h2 = normalize4(F, {0, 1, F.neg(1), 0});
        CHECK(cls.classify_line_orbit(line_from_planes(F, h1, h2)) == 5);
        found_l5 = true;
    }
    CHECK(found_l5);
    // imaginary chord -> L9
    CubicModel M(F);
    for (const Line& l : M.imaginary_chords()) CHECK(cls.classify_line_orbit(l) == 9);
}

TEST_CASE("expected orbit distributions, pinned rows") {
    Field F5 = Field::make(5, 1);
    CHECK(expected_od(9, F5).od2 == OD{{0, 0, 0, 6, 0}});
    CHECK(expected_od(9, F5).od0 == OD{{0, 0, 2, 0, 4}});
    CHECK(expected_od(7, F5).od2 == OD{{0, 3, 1, 2, 0}});
    CHECK(expected_od(7, F5).od0 == OD{{1, 2, 0, 1, 2}});
    Field F7 = Field::make(7, 1);
    CHECK(expected_od(9, F7).od2 == OD{{0, 0, 0, 8, 0}});
    CHECK(expected_od(9, F7).od0 == OD{{0, 0, 0, 8, 0}});
    CHECK(expected_od(1, F7).od2 == OD{{2, 0, 2, 0, 4}});
    CHECK(expected_od(1, F5).od2 == OD{{2, 0, 0, 4, 0}});
    // every expected OD sums to q+1 on both branches
    for (const char* spec : {"5", "7", "11", "13", "25"}) {
        Field F = Field::parse(spec);
        for (int lab = 1; lab <= 10; ++lab) {
            ExpectedOD e = expected_od(lab, F);
            int s2 = 0, s0 = 0;
            for (int i = 0; i < 5; ++i) {
                s2 += e.od2.v[i];
                s0 += e.od0.v[i];
            }
            CHECK(s2 == F.q() + 1);
            CHECK(s0 == F.q() + 1);
        }
    }
}

TEST_CASE("duality: od0 = od2 of the polar line; self-polar cells") {
    for (int q : {5, 7}) {
        Field F = Field::parse(std::to_string(q));
        Classifier cls(F);
        std::map<LineCell, LineCell> dual{
            {LineCell::O1, LineCell::O1d}, {LineCell::O1d, LineCell::O1},
            {LineCell::O2, LineCell::O2},  {LineCell::O3, LineCell::O3d},
            {LineCell::O3d, LineCell::O3}, {LineCell::O4, LineCell::O4},
            {LineCell::O5, LineCell::O5d}, {LineCell::O5d, LineCell::O5},
            {LineCell::O6, LineCell::O6}};
        for (const Line& l : all_lines(F)) {
            Line s = sigma_line(F, l);
            CHECK(cls.od0(l) == cls.od2(s));
            LineCell c = cls.classify_line_cell(l);
            CHECK(cls.classify_line_cell(s) == dual.at(c));
            if (c == LineCell::O2 || c == LineCell::O4) CHECK(s == l);
        }
    }
}

TEST_CASE("classifier rejects characteristic 3") {
    Field F = Field::make(3, 1);
    CHECK_THROWS_AS(Classifier{F}, std::invalid_argument);
}
