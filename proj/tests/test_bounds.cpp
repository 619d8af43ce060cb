#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eaq/bounds.hpp"

using namespace eaq;

TEST_CASE("quantum Singleton bound") {
    CHECK(q_singleton(5, 1) == 3);
    CHECK(q_singleton(9, 9) == 1);
    CHECK(q_singleton(9, 1) == 5);
}

TEST_CASE("EA Singleton bound") {
    CHECK(ea_singleton(5, 1, 1) == 3);
    CHECK(ea_singleton(9, 1, 1) == 5);
    for (int n = 1; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) CHECK(ea_singleton(n, k, 0) == q_singleton(n, k));
}

TEST_CASE("absolute bound") {
    CHECK(absolute_bound(5, 1) == 5);
    CHECK(absolute_bound(4, 4) == 1);
    // c = n-k saturates the EA bound at the absolute bound.
    for (int n = 1; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) CHECK(ea_singleton(n, k, n - k) == absolute_bound(n, k));
}

TEST_CASE("teleportation-scheme bound") {
    CHECK(our_bound(5, 1) == 4);
    CHECK(our_bound(6, 3) == 1);
    CHECK(our_bound(9, 1) == 8); // strict for the non-MDS [9,2,6]_2 code
    CHECK_THROWS_AS(our_bound(5, 3), KTooLargeError);
}

TEST_CASE("EA Singleton bound at k = c") {
    CHECK(ea_singleton_kc(5) == 3);
    CHECK(ea_singleton_kc(2) == 2);
    CHECK(ea_singleton_kc(10) == 6);
    // Cross-check against the general bound with k = c.
    for (int n = 1; n <= 20; ++n) {
        int best = 0;
        for (int k = 0; k <= n; ++k) best = std::max(best, ea_singleton(n, k, k));
        CHECK(ea_singleton_kc(n) == best);
    }
}

TEST_CASE("bounds are monotone") {
    for (int n = 1; n <= 10; ++n) {
        for (int k = 1; k <= n; ++k) {
            CHECK(q_singleton(n, k) <= q_singleton(n, k - 1));
            CHECK(absolute_bound(n, k) <= absolute_bound(n, k - 1));
            for (int c = 1; c <= n; ++c) {
                CHECK(ea_singleton(n, k, c) <= ea_singleton(n, k - 1, c));
                CHECK(ea_singleton(n, k, c - 1) <= ea_singleton(n, k, c));
            }
        }
    }
}

TEST_CASE("classification of the paper's schemes") {
    SUBCASE("[[5,1,4;1]]_4 violates the EA Singleton bound") {
        BoundReport rep = classify(SchemeParams{5, 1, 4, 1, 4});
        CHECK(rep.per_bound.at("eaSingleton").max_d == 3);
        CHECK(rep.per_bound.at("eaSingleton").status == BoundStatus::Violates);
        CHECK(rep.per_bound.at("ourBound").status == BoundStatus::Meets);
        CHECK(rep.per_bound.at("absolute").status == BoundStatus::Satisfies);
        CHECK(rep.params.c >= rep.params.k);
    }
    SUBCASE("[[9,1,6;1]]_2 violates the EA Singleton bound") {
        BoundReport rep = classify(SchemeParams{9, 1, 6, 1, 2});
        CHECK(rep.per_bound.at("eaSingleton").max_d == 5);
        CHECK(rep.per_bound.at("eaSingleton").status == BoundStatus::Violates);
        CHECK(rep.params.c >= rep.params.k);
    }
    SUBCASE("[[5,1,3;0]] meets the quantum Singleton bound") {
        BoundReport rep = classify(SchemeParams{5, 1, 3, 0, 2});
        CHECK(rep.per_bound.at("qSingleton").status == BoundStatus::Meets);
        CHECK(rep.per_bound.at("eaSingleton").status == BoundStatus::Meets);
    }
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(3, 4) * Rational(2, 3)) == Rational(1, 2));
    CHECK(Rational(1, -2).num == -1);
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK_THROWS_AS(Rational(1, 0), ValidationError);
}

TEST_CASE("frontier endpoints") {
    CHECK(frontier_delta(FrontierVariant::Absolute, Rational(0)) == Rational(1));
    CHECK(frontier_delta(FrontierVariant::Qecc, Rational(0)) == Rational(1, 2));
    CHECK(frontier_delta(FrontierVariant::EaHalf, Rational(0)) == Rational(3, 4));
    CHECK(frontier_delta(FrontierVariant::Ours, Rational(1, 2)) == Rational(0));
}

TEST_CASE("frontier crossings are exact") {
    // ours and eaHalf cross at (1/5, 3/5).
    CHECK(frontier_delta(FrontierVariant::Ours, Rational(1, 5)) == Rational(3, 5));
    CHECK(frontier_delta(FrontierVariant::EaHalf, Rational(1, 5)) == Rational(3, 5));
    // ours and eaKC cross at (1/4, 1/2).
    CHECK(frontier_delta(FrontierVariant::Ours, Rational(1, 4)) == Rational(1, 2));
    CHECK(frontier_delta(FrontierVariant::EaKC, Rational(1, 4)) == Rational(1, 2));
}

TEST_CASE("frontier grids") {
    auto pts = frontier(FrontierVariant::Ours, 3);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].rate == Rational(0));
    CHECK(pts[0].delta == Rational(1));
    CHECK(pts[1].rate == Rational(1, 4));
    CHECK(pts[1].delta == Rational(1, 2));
    CHECK(pts[2].rate == Rational(1, 2));
    CHECK(pts[2].delta == Rational(0));

    auto abs_pts = frontier(FrontierVariant::Absolute, 5);
    CHECK(abs_pts.back().rate == Rational(1));
    CHECK(abs_pts.back().delta == Rational(0));

    CHECK_THROWS_AS(frontier(FrontierVariant::Ours, 1), ValidationError);
    CHECK_THROWS_AS(parse_variant("nope"), UnknownVariantError);
}
