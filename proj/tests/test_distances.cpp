#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "qpdiag/distances.hpp"
#include "support/oracles.hpp"

using namespace qpdiag;

namespace {

Matrix diag_state(double a) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = 1 - a;
    return m;
}

} // namespace

TEST_CASE("trace distance fixed values") {
    const Matrix rho = oracles::ket_projector(2, 0);
    CHECK(trace_distance(rho, rho) == 0.0);
    CHECK(trace_distance(oracles::ket_projector(2, 0), oracles::ket_projector(2, 1)) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(trace_distance(diag_state(0.8), diag_state(0.25)) ==
          doctest::Approx(0.55).epsilon(1e-13));
    CHECK_THROWS_AS(trace_distance(rho, Matrix::Identity(3, 3)), DimensionError);
}

TEST_CASE("fidelity fixed values and symmetry") {
    const Matrix rho = oracles::ket_projector(2, 0);
    CHECK(fidelity(rho, rho) == doctest::Approx(1.0));

    const double a = 0.73, b = 0.22;
    const double classical = std::sqrt(a * b) + std::sqrt((1 - a) * (1 - b));
    CHECK(fidelity(diag_state(a), diag_state(b)) == doctest::Approx(classical).epsilon(1e-13));

    std::mt19937_64 rng(3);
    for (int d : {2, 3}) {
        for (int rep = 0; rep < 30; ++rep) {
            const Matrix r1 = oracles::random_density(d, rng);
            const Matrix r2 = oracles::random_density(d, rng);
            CHECK(std::abs(fidelity(r1, r2) - fidelity(r2, r1)) < 1e-10);
        }
    }
}

TEST_CASE("bures distance fixed values") {
    const Matrix rho = oracles::ket_projector(2, 0);
    CHECK(bures_distance(rho, rho) == 0.0);
    CHECK(bures_distance(oracles::ket_projector(2, 0), oracles::ket_projector(2, 1)) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("relative entropy fixed values and the infinity sentinel") {
    const Matrix zero = oracles::ket_projector(2, 0);
    const Matrix one = oracles::ket_projector(2, 1);
    const Matrix mixed = 0.5 * Matrix::Identity(2, 2);

    CHECK(relative_entropy(mixed, mixed) == doctest::Approx(0.0));
    CHECK(relative_entropy(zero, mixed) == doctest::Approx(std::log(2.0)).epsilon(1e-13));
    CHECK(std::isinf(relative_entropy(zero, one)));
    CHECK(std::isinf(symmetric_relative_entropy(zero, one)));

    std::mt19937_64 rng(7);
    const Matrix r1 = oracles::random_density(2, rng);
    const Matrix r2 = oracles::random_density(2, rng);
    CHECK(symmetric_relative_entropy(r1, r2) ==
          doctest::Approx(relative_entropy(r1, r2) + relative_entropy(r2, r1)).epsilon(1e-12));
    CHECK(relative_entropy(r1, r2) >= 0.0);
}

TEST_CASE("hellinger distance fixed values and eigen recomputation") {
    const Matrix mixed = 0.5 * Matrix::Identity(2, 2);
    CHECK(hellinger_distance(mixed, mixed) == 0.0);

    const double a = 0.9, b = 0.4;
    const double affinity = std::sqrt(a * b) + std::sqrt((1 - a) * (1 - b));
    CHECK(hellinger_distance(diag_state(a), diag_state(b)) ==
          doctest::Approx(std::sqrt(2 * (1 - affinity))).epsilon(1e-12));

    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const Matrix r1 = oracles::random_density(3, rng);
        const Matrix r2 = oracles::random_density(3, rng);
        // independent evaluation straight from two eigendecompositions
        const Eigen::SelfAdjointEigenSolver<Matrix> e1(r1), e2(r2);
        const Matrix s1 = e1.eigenvectors() *
                          e1.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
                          e1.eigenvectors().adjoint();
        const Matrix s2 = e2.eigenvectors() *
                          e2.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
                          e2.eigenvectors().adjoint();
        const double expected = std::sqrt(2 * (1 - (s1 * s2).trace().real()));
        CHECK(hellinger_distance(r1, r2) == doctest::Approx(expected).epsilon(1e-11));
    }
}

TEST_CASE("symmetry and identity of indiscernibles on random pairs") {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 25; ++rep) {
        const Matrix r1 = oracles::random_density(2, rng);
        const Matrix r2 = oracles::random_density(2, rng);
        CHECK(std::abs(trace_distance(r1, r2) - trace_distance(r2, r1)) < 1e-12);
        CHECK(std::abs(bures_distance(r1, r2) - bures_distance(r2, r1)) < 1e-10);
        CHECK(std::abs(hellinger_distance(r1, r2) - hellinger_distance(r2, r1)) < 1e-10);
        CHECK(trace_distance(r1, r1) < 1e-14);
        CHECK(bures_distance(r1, r1) < 1e-7);
        CHECK(hellinger_distance(r1, r1) < 1e-7);
        CHECK(trace_distance(r1, r2) > 1e-6); // random pairs are distinct
    }
}

TEST_CASE("data processing: trace and Bures distances contract under CPT maps") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 100; ++rep) {
        const int d = 2 + rep % 2;
        const auto ops = oracles::random_kraus_channel(d, 1 + rep % 3, rng);
        const Matrix r1 = oracles::random_density(d, rng);
        const Matrix r2 = oracles::random_density(d, rng);
        const Matrix m1 = oracles::apply_kraus(ops, r1);
        const Matrix m2 = oracles::apply_kraus(ops, r2);
        CHECK(trace_distance(m1, m2) <= trace_distance(r1, r2) + 1e-10);
        CHECK(bures_distance(m1, m2) <= bures_distance(r1, r2) + 1e-10);
    }
}

TEST_CASE("fidelity floor: numerically indistinguishable states report F = 1") {
    Matrix a = 0.5 * Matrix::Identity(2, 2);
    Matrix b = a;
    b(0, 0) += 1e-16;
    b(1, 1) -= 1e-16;
    CHECK(fidelity(a, b) == 1.0);
    CHECK(bures_distance(a, b) == 0.0);
}
