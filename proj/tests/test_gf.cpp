#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "tcubic/gf.hpp"

using namespace tcubic;

TEST_CASE("field construction and parsing") {
    Field f5 = Field::make(5, 1);
    CHECK(f5.q() == 5);
    Field f25 = Field::make(5, 2);
    CHECK(f25.q() == 25);
    CHECK(f25.modulus().size() == 3);

    CHECK(Field::parse("25").q() == 25);
    CHECK(Field::parse("5^2").q() == 25);
    CHECK(Field::parse("25").modulus() == Field::parse("5^2").modulus());

    CHECK_THROWS_WITH_AS(Field::make(2, 1), doctest::Contains("even characteristic"),
                         std::invalid_argument);
    CHECK_THROWS_AS(Field::make(6, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::parse("12"), std::invalid_argument);
}

TEST_CASE("prime field arithmetic") {
    Field F = Field::make(7, 1);
    CHECK(F.inv(3) == 5);
    CHECK(F.pow(2, 3) == 1);
    CHECK(Field::make(5, 1).neg(2) == 3);
    CHECK_THROWS_AS(F.inv(0), std::exception);
}

TEST_CASE("squares and square roots in GF(7)") {
    Field F = Field::make(7, 1);
    CHECK(F.is_nonzero_square(2));
    CHECK_FALSE(F.is_nonzero_square(3));
    CHECK_FALSE(F.is_nonzero_square(0));
    CHECK(F.sqrt(2) == Elt{3}); // roots are {3,4}; smaller encoding wins
    CHECK(F.sqrt(0) == Elt{0});
    CHECK_FALSE(F.sqrt(3).has_value());
}

TEST_CASE("minus_three_square matches q mod 6") {
    CHECK(Field::make(7, 1).minus_three_square());
    CHECK_FALSE(Field::make(5, 1).minus_three_square());
    CHECK(Field::make(13, 1).minus_three_square());
    for (int q : {5, 7, 11, 13, 17, 19, 23}) {
        Field F = Field::parse(std::to_string(q));
        CHECK(F.minus_three_square() == (q % 6 == 1));
    }
    CHECK(Field::make(5, 2).minus_three_square()); // 25 = 1 mod 6
}

TEST_CASE("field axioms and square structure, several q") {
    for (const char* spec : {"5", "7", "11", "25", "49"}) {
        Field F = Field::parse(spec);
        CAPTURE(spec);
        int q = F.q();

        int squares = 0;
        Elt n = F.smallest_nonsquare();
        for (int x = 1; x < q; ++x) {
            Elt e = static_cast<Elt>(x);
            bool sq = F.is_nonzero_square(e);
            squares += sq;
            CHECK(sq != F.is_nonzero_square(F.mul(n, e)));
            CHECK(F.mul(e, F.inv(e)) == 1);
            if (auto r = F.sqrt(e)) CHECK(F.mul(*r, *r) == e);
            CHECK(F.sqrt(e).has_value() == sq);
        }
        CHECK(squares == (q - 1) / 2);

        // associativity + distributivity spot grid
        for (int a = 0; a < q; a += 3)
            for (int b = 1; b < q; b += 5)
                for (int c = 2; c < q; c += 7) {
                    Elt x = static_cast<Elt>(a), y = static_cast<Elt>(b), z = static_cast<Elt>(c);
                    CHECK(F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)));
                    CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
                }

        // primitive element has full order
        Elt g = F.primitive_element();
        std::set<Elt> powers;
        Elt acc = 1;
        for (int i = 0; i < q - 1; ++i) {
            powers.insert(acc);
            acc = F.mul(acc, g);
        }
        CHECK(powers.size() == static_cast<std::size_t>(q - 1));
    }
}

TEST_CASE("quadratic extension") {
    Field F = Field::make(7, 1);
    ExtField E(F);
    CHECK(E.frobenius(E.lift(3)) == E.lift(3));
    ExtElt w{0, 1};
    CHECK(E.frobenius(w) == ExtElt{0, F.neg(1)});
    CHECK_THROWS_AS(E.project(ExtElt{1, 1}), std::exception);
    CHECK(E.project(E.lift(4)) == 4);

    // Frobenius is an involution fixing exactly the base field
    int fixed = 0;
    for (ExtElt x : E.all_elements()) {
        CHECK(E.frobenius(E.frobenius(x)) == x);
        if (E.frobenius(x) == x) {
            ++fixed;
            CHECK(E.in_base(x));
        }
        if (!(x == ExtElt{})) CHECK(E.mul(x, E.inv(x)) == E.lift(1));
        CHECK(E.in_base(ExtElt{E.trace(x), 0}));
        ExtElt nrm = E.mul(x, E.frobenius(x));
        CHECK(E.in_base(nrm));
        CHECK(E.project(nrm) == E.norm(x));
    }
    CHECK(fixed == F.q());
    CHECK(E.all_elements().size() == static_cast<std::size_t>(F.q() * F.q()));
}

TEST_CASE("from_int embeds through the prime subfield") {
    Field F = Field::make(5, 2);
    CHECK(F.from_int(7) == 2);
    CHECK(F.from_int(-3) == 2);
    CHECK(F.from_int(0) == 0);
}
