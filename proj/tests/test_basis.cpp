#include <doctest.h>

#include <cmath>
#include <random>

#include "qpdiag/basis.hpp"
#include "support/oracles.hpp"

using namespace qpdiag;

TEST_CASE("qubit basis is the Pauli set over sqrt(2)") {
    const HermitianBasis basis(2);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK((basis.op(0) - s * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((basis.op(1) - s * oracles::pauli_x()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((basis.op(2) - s * oracles::pauli_y()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((basis.op(3) - s * oracles::pauli_z()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("basis invariants for d = 2..6") {
    for (int d = 2; d <= 6; ++d) {
        const HermitianBasis basis(d);
        REQUIRE(basis.size() == d * d);
        for (int mu = 0; mu < basis.size(); ++mu) {
            const Matrix& m = basis.op(mu);
            CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
            if (mu > 0) CHECK(std::abs(m.trace()) < 1e-14);
        }
        // brute-force Hilbert-Schmidt inner product table
        for (int mu = 0; mu < basis.size(); ++mu)
            for (int nu = 0; nu < basis.size(); ++nu) {
                const Complex ip = (basis.op(mu).adjoint() * basis.op(nu)).trace();
                const double expected = (mu == nu) ? 1.0 : 0.0;
                CHECK(std::abs(ip - expected) < 1e-12);
            }
    }
}

TEST_CASE("invalid dimension is rejected") {
    CHECK_THROWS_AS(HermitianBasis(1), DimensionError);
    CHECK_THROWS_AS(HermitianBasis(0), DimensionError);
}

TEST_CASE("expand of fixed operators") {
    const HermitianBasis basis(2);
    const RealVector r_id = expand_real(Matrix::Identity(2, 2), basis);
    CHECK(r_id[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(std::abs(r_id[1]) < 1e-14);
    CHECK(std::abs(r_id[2]) < 1e-14);
    CHECK(std::abs(r_id[3]) < 1e-14);

    const RealVector r_z = expand_real(oracles::pauli_z() / std::sqrt(2.0), basis);
    CHECK(std::abs(r_z[0]) < 1e-14);
    CHECK(r_z[3] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("expand rejects dimension mismatch") {
    const HermitianBasis basis(2);
    CHECK_THROWS_AS(expand(Matrix::Identity(3, 3), basis), DimensionError);
    ComplexVector wrong(3);
    wrong.setZero();
    CHECK_THROWS_AS(reconstruct(wrong, basis), DimensionError);
}

TEST_CASE("reconstruct of fixed coordinate vectors") {
    const HermitianBasis basis(2);
    RealVector r(4);
    r << std::sqrt(2.0), 0, 0, 0;
    CHECK((reconstruct(r, basis) - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);

    r << 1.0 / std::sqrt(2.0), 0, 0, 1.0 / std::sqrt(2.0);
    Matrix expected = Matrix::Zero(2, 2);
    expected(0, 0) = 1.0; // |0><0|
    CHECK((reconstruct(r, basis) - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("round trips: reconstruct(expand) and expand(reconstruct)") {
    std::mt19937_64 rng(3);
    for (int d : {2, 3}) {
        const HermitianBasis basis(d);
        for (int rep = 0; rep < 50; ++rep) {
            Matrix g = oracles::random_ginibre(d, d, rng);
            const Matrix h = g + g.adjoint(); // random Hermitian
            CHECK((reconstruct(expand_real(h, basis), basis) - h).cwiseAbs().maxCoeff() < 1e-12);
            // arbitrary (non-Hermitian) operators round-trip through complex coords
            CHECK((reconstruct(expand(g, basis), basis) - g).cwiseAbs().maxCoeff() < 1e-12);
        }
        for (int rep = 0; rep < 100; ++rep) {
            std::normal_distribution<double> gauss;
            ComplexVector r(d * d);
            for (Eigen::Index i = 0; i < r.size(); ++i) r[i] = Complex(gauss(rng), gauss(rng));
            const ComplexVector back = expand(reconstruct(r, basis), basis);
            CHECK((back - r).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}
