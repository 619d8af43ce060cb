#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eaq/field.hpp"
#include "eaq/rng.hpp"

using namespace eaq;

TEST_CASE("prime field construction") {
    Field f = Field::with_auto_poly(2, 1);
    CHECK(f.q() == 2);
    CHECK(f.poly() == std::vector<int>{0, 1}); // the polynomial x
    CHECK(f.add(1, 1) == 0);
}

TEST_CASE("GF(4) defined by x^2+x+1") {
    Field f(2, 2, {1, 1, 1});
    CHECK(f.q() == 4);
    // alpha is the class of x, index 2; alpha+1 has index 3.
    // alpha * (alpha + 1) = alpha^2 + alpha = 1 mod x^2+x+1.
    CHECK(f.mul(2, 3) == 1);
}

TEST_CASE("x^2+1 is reducible over Z_2") {
    CHECK_THROWS_AS(Field(2, 2, {1, 0, 1}), NotIrreducibleError);
}

TEST_CASE("GF(5) inverse") {
    Field f = Field::with_auto_poly(5, 1);
    CHECK(f.inv(2) == 3);
    CHECK_THROWS_AS(f.inv(0), DivisionByZeroError);
}

TEST_CASE("constructor rejections") {
    CHECK_THROWS_AS(Field::with_auto_poly(4, 1), NotPrimeError);
    CHECK_THROWS_AS(Field::with_auto_poly(2, 9), UnsupportedSizeError); // q = 512
    CHECK_THROWS_AS(Field(2, 2, {1, 1, 0}), ValidationError);           // not monic
}

TEST_CASE("element enumeration is canonical") {
    Field f3 = Field::with_auto_poly(3, 1);
    auto els = f3.elements();
    REQUIRE(els.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(els[i].index() == i);

    Field f4(2, 2, {1, 1, 1});
    auto els4 = f4.elements();
    CHECK(els4.size() == 4);
    CHECK(els4[0] == f4.zero());
    CHECK(els4[1] == f4.one());
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    std::vector<Field> fields = {Field::with_auto_poly(2, 1),  Field::with_auto_poly(3, 1),
                                 Field(2, 2, {1, 1, 1}),       Field::with_auto_poly(5, 1),
                                 Field::with_auto_poly(7, 1),  Field::with_auto_poly(2, 3),
                                 Field::with_auto_poly(3, 2),  Field::with_auto_poly(11, 1),
                                 Field::with_auto_poly(13, 1), Field::with_auto_poly(2, 4)};
    for (const Field& f : fields) {
        CAPTURE(f.spec_string());
        int q = f.q();
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) {
                CHECK(f.mul(a, f.inv(a)) == 1);
                CHECK(f.pow(a, q - 1) == 1); // Lagrange
            }
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("sampled axioms for the largest supported field") {
    Field f = Field::with_auto_poly(2, 8); // GF(256)
    CHECK(f.q() == 256);
    Rng rng(42);
    for (int trial = 0; trial < 500; ++trial) {
        int a = static_cast<int>(rng.next_below(256));
        int b = static_cast<int>(rng.next_below(256));
        int c = static_cast<int>(rng.next_below(256));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
        if (a != 0) CHECK(f.pow(a, 255) == 1);
    }
}

TEST_CASE("spec string round trip") {
    Field f(2, 2, {1, 1, 1});
    CHECK(f.spec_string() == "p=2,m=2,poly=1,1,1");
    CHECK(Field::parse(f.spec_string()) == f);
    CHECK(Field::parse("p=2,m=2,poly=auto") == f); // x^2+x+1 is the first irreducible
    CHECK_THROWS_AS(Field::parse("p=4,m=1,poly=auto"), NotPrimeError);
}

TEST_CASE("elements mismatch across fields throws") {
    Field f1(2, 2, {1, 1, 1});
    Field f2 = Field::with_auto_poly(3, 1);
    CHECK_THROWS_AS(f1.element(1) + f2.element(1), FieldMismatchError);
}

TEST_CASE("field element operators") {
    Field f(2, 2, {1, 1, 1});
    FieldElement alpha = f.element(2);
    CHECK((alpha * alpha.inverse()) == f.one());
    CHECK((alpha + alpha) == f.zero()); // characteristic 2
    CHECK(alpha.pow(3) == f.one());
}
