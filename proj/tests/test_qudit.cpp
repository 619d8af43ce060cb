#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "eaq/qudit.hpp"

using namespace eaq;

namespace {
constexpr double kTol = 1e-12;
}

TEST_CASE("basis state indexing is big-endian") {
    QuditState s = basis_state(4, {"s1", "s2"}, {3, 1});
    CHECK(std::abs(s.amps()(13) - Complex{1, 0}) < kTol);
    CHECK(s.norm() == doctest::Approx(1.0));

    QuditState t = basis_state(3, {"s"}, {2});
    CHECK(std::abs(t.amps()(2) - Complex{1, 0}) < kTol);

    CHECK_THROWS_AS(basis_state(2, {"s"}, {2}), OutOfRangeError);
}

TEST_CASE("maximally entangled state") {
    for (int dim : {2, 3}) {
        QuditState phi = max_entangled(dim, "s", "r");
        double expect = 1.0 / std::sqrt(static_cast<double>(dim));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                Complex a = phi.amps()(i * dim + j);
                CHECK(std::abs(a - (i == j ? Complex{expect, 0} : Complex{0, 0})) < kTol);
            }
    }
}

TEST_CASE("reduced state of either half is maximally mixed") {
    int dim = 3;
    QuditState phi = max_entangled(dim, "s", "r");
    // Schmidt coefficients: singular values of the amplitude matrix.
    Eigen::MatrixXcd m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = phi.amps()(i * dim + j);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    for (int i = 0; i < dim; ++i)
        CHECK(svd.singularValues()(i) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("generalized Pauli action") {
    SUBCASE("X on qubit") {
        QuditState s = apply_pauli(basis_state(2, {"s"}, {0}), "s", 1, 0);
        CHECK(std::abs(s.amps()(1) - Complex{1, 0}) < kTol);
    }
    SUBCASE("Z on |1>") {
        QuditState s = apply_pauli(basis_state(2, {"s"}, {1}), "s", 0, 1);
        CHECK(std::abs(s.amps()(1) - Complex{-1, 0}) < kTol);
    }
    SUBCASE("XZ on qutrit |2>") {
        QuditState s = apply_pauli(basis_state(3, {"s"}, {2}), "s", 1, 1);
        Complex omega2 = std::polar(1.0, 2.0 * 2.0 * std::numbers::pi / 3.0);
        CHECK(std::abs(s.amps()(0) - omega2) < kTol);
    }
    SUBCASE("unknown label") {
        CHECK_THROWS_AS(apply_pauli(basis_state(2, {"s"}, {0}), "t", 1, 0), UnknownLabelError);
    }
}

TEST_CASE("X^q = Z^q = I and ZX = omega XZ") {
    for (int q : {2, 3, 4, 5}) {
        Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / q);
        for (int j = 0; j < q; ++j) {
            QuditState e = basis_state(q, {"s"}, {j});
            QuditState xq = e;
            QuditState zq = e;
            for (int i = 0; i < q; ++i) {
                xq = apply_pauli(xq, "s", 1, 0);
                zq = apply_pauli(zq, "s", 0, 1);
            }
            CHECK(std::abs(xq.amps()(j) - Complex{1, 0}) < kTol);
            CHECK(std::abs(zq.amps()(j) - Complex{1, 0}) < kTol);

            QuditState zx = apply_pauli(apply_pauli(e, "s", 1, 0), "s", 0, 1);
            QuditState xz = apply_pauli(apply_pauli(e, "s", 0, 1), "s", 1, 0);
            for (int i = 0; i < q; ++i)
                CHECK(std::abs(zx.amps()(i) - omega * xz.amps()(i)) < kTol);
        }
    }
}

TEST_CASE("apply_pauli preserves norm") {
    Rng rng(7);
    for (int q : {2, 3, 5}) {
        AmpVec amps(q);
        for (int i = 0; i < q; ++i) amps(i) = Complex{rng.next_double() - 0.5, rng.next_double() - 0.5};
        amps.normalize();
        QuditState s(q, {"s"}, amps);
        QuditState t = apply_pauli(s, "s", 1, q - 1);
        CHECK(t.norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("Bell basis Gram matrix is the identity") {
    for (int q : {2, 3, 4, 5}) {
        auto basis = bell_basis(q);
        REQUIRE(static_cast<int>(basis.size()) == q * q);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) {
                Complex g = basis[i].amps().dot(basis[j].amps());
                CHECK(std::abs(g - (i == j ? Complex{1, 0} : Complex{0, 0})) < kTol);
            }
    }
}

TEST_CASE("(0,0) Bell state is |Phi> itself") {
    auto basis = bell_basis(3);
    CHECK((basis[0].amps() - max_entangled(3, "s", "r").amps()).norm() < kTol);
}

TEST_CASE("measuring a Bell state in the Bell basis is deterministic") {
    int q = 3;
    auto basis = bell_basis(q);
    Rng rng(1);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            auto [outcome, rest] = bell_measure(basis[a * q + b], "s", "r", rng);
            CHECK(outcome.a == a);
            CHECK(outcome.b == b);
            CHECK(rest.num_qudits() == 0);
        }
}

TEST_CASE("Bell measurement of a product state") {
    // |00> with q=2: outcomes (0,b) each with probability 1/2.
    QuditState s = basis_state(2, {"x", "y"}, {0, 0});
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            double pr = bell_project(s, "x", "y", a, b).first;
            CHECK(pr == doctest::Approx(a == 0 ? 0.5 : 0.0).epsilon(1e-12));
        }
}

TEST_CASE("Bell outcome probabilities sum to one") {
    Rng rng(11);
    int q = 4;
    AmpVec amps(q * q);
    for (int i = 0; i < q * q; ++i) amps(i) = Complex{rng.next_double() - 0.5, rng.next_double() - 0.5};
    amps.normalize();
    QuditState s(q, {"x", "y"}, amps);
    double total = 0;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) total += bell_project(s, "x", "y", a, b).first;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fidelity") {
    QuditState zero = basis_state(2, {"s"}, {0});
    QuditState one = basis_state(2, {"s"}, {1});
    CHECK(fidelity(zero, zero) == doctest::Approx(1.0));
    CHECK(fidelity(zero, one) == doctest::Approx(0.0));

    AmpVec rotated = zero.amps() * std::polar(1.0, 0.7);
    CHECK(fidelity(zero, QuditState(2, {"s"}, rotated)) == doctest::Approx(1.0));

    CHECK_THROWS_AS(fidelity(zero, basis_state(2, {"t"}, {0})), LabelMismatchError);
}

TEST_CASE("fidelity permutes label order") {
    QuditState a = basis_state(2, {"x", "y"}, {0, 1});
    QuditState b = basis_state(2, {"y", "x"}, {1, 0});
    CHECK(fidelity(a, b) == doctest::Approx(1.0));
}

TEST_CASE("bell transform maps Bell states to basis states") {
    for (int q : {2, 3}) {
        auto basis = bell_basis(q);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                QuditState t = bell_transform(basis[a * q + b], "s", "r", "A", "B");
                CHECK(fidelity(t, basis_state(q, {"A", "B"}, {a, b})) ==
                      doctest::Approx(1.0).epsilon(1e-12));
            }
    }
}

TEST_CASE("computational measurement of a basis state") {
    Rng rng(3);
    QuditState s = basis_state(4, {"x", "y"}, {2, 1});
    auto [sym, rest] = measure_computational(s, "x", rng);
    CHECK(sym == 2);
    CHECK(fidelity(rest, basis_state(4, {"y"}, {1})) == doctest::Approx(1.0));
}

TEST_CASE("register guard") {
    // 2^23 amplitudes exceeds the 2^22 cap.
    std::vector<std::string> labels;
    for (int i = 0; i < 23; ++i) labels.push_back("q" + std::to_string(i));
    CHECK_THROWS_AS(basis_state(2, labels, std::vector<int>(23, 0)), RegisterTooLargeError);
}
