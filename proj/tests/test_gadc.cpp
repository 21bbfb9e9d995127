#include <doctest.h>

#include <cmath>
#include <random>

#include "qpdiag/distances.hpp"
#include "qpdiag/gadc.hpp"
#include "support/oracles.hpp"

using namespace qpdiag;

TEST_CASE("kraus set degenerates to the identity channel at p=1, eta=1") {
    const KrausSet k = gadc::kraus({1.0, 1.0});
    CHECK((k.ops[0] - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
    for (int i = 1; i < 4; ++i) CHECK(k.ops[i].cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("kraus set at p=1, eta=0 is amplitude damping to |0>") {
    const KrausSet k = gadc::kraus({1.0, 0.0});
    Matrix e1 = Matrix::Zero(2, 2);
    e1(0, 0) = 1.0;
    Matrix e2 = Matrix::Zero(2, 2);
    e2(0, 1) = 1.0;
    CHECK((k.ops[0] - e1).cwiseAbs().maxCoeff() == 0.0);
    CHECK((k.ops[1] - e2).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("kraus sets are trace-preserving across the parameter square") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int rep = 0; rep < 50; ++rep)
        CHECK(is_trace_preserving(gadc::kraus({u(rng), u(rng)})));
}

TEST_CASE("parameters outside the unit square are rejected") {
    CHECK_THROWS_AS(gadc::kraus({1.2, 0.5}), DomainError);
    CHECK_THROWS_AS(gadc::kraus({0.5, -0.1}), DomainError);
    CHECK_THROWS_AS(gadc::affine({-0.5, 0.1}), DomainError);
}

TEST_CASE("affine pair special cases") {
    const AffineMap half = gadc::affine({0.5, 0.77});
    CHECK(half.c.cwiseAbs().maxCoeff() == 0.0);

    const AffineMap eta1 = gadc::affine({0.9, 1.0});
    CHECK((eta1.m - RealMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);
    CHECK(eta1.c.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("two routes, one truth: affine equals the Kraus-derived transfer") {
    const HermitianBasis basis(2);
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; j <= 6; ++j) {
            const gadc::Params g{i / 6.0, j / 6.0};
            const TransferMatrix via_kraus = transfer_from_kraus(gadc::kraus(g), basis);
            const TransferMatrix via_affine = transfer_from_affine(gadc::affine(g));
            CHECK((via_kraus.t - via_affine.t).cwiseAbs().maxCoeff() < 1e-12);
        }
}

TEST_CASE("process is the identity at t=0 and CPT along a dense grid") {
    const HermitianBasis basis(2);
    const QuantumProcess p = gadc::process({5.0});
    CHECK((p.eval(0.0).t - RealMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-14);
    for (int i = 0; i <= 200; ++i) {
        const double t = 10.0 * i / 200.0;
        CHECK(is_cp(choi_from_transfer(p.eval(t), basis), 1e-10));
    }
}

TEST_CASE("trajectory of the maximally mixed state follows W_t") {
    const HermitianBasis basis(2);
    const gadc::ProcessParams gp{5.0};
    const QuantumProcess p = gadc::process(gp);
    for (double t : {0.0, 0.3, 1.7, 6.2}) {
        const BlochState out = apply_channel(p.eval(t), maximally_mixed(2));
        const double w = gadc::bloch_offset(gp, t);
        CHECK(out.r[2] == doctest::Approx(w / std::sqrt(2.0)).epsilon(1e-13));
        CHECK(std::abs(out.r[0]) < 1e-14);
        // purity of the evolved maximally mixed state is (1 + W^2)/2
        const Matrix rho = density_from_bloch(out, basis);
        CHECK(purity(rho) == doctest::Approx((1 + w * w) / 2).epsilon(1e-12));
    }
    CHECK(gadc::bloch_offset(gp, 1.0) ==
          doctest::Approx(std::cos(10.0) * (1 - std::exp(-1.0))).epsilon(1e-14));
}

TEST_CASE("closed-form trace distance against the pipeline") {
    std::mt19937_64 rng(5);
    const HermitianBasis basis(2);
    const gadc::ProcessParams gp{5.0};
    const QuantumProcess p = gadc::process(gp);

    // fixed cases first
    const BlochState s = bloch_from_density(oracles::random_density(2, rng), basis);
    CHECK(gadc::oracle_trace_distance(gp, s, s, 1.0) == 0.0);

    RealVector rx(3);
    rx << 0.3, -0.2, 0.0;
    RealVector ry(3);
    ry << -0.1, 0.25, 0.0;
    const BlochState s1{2, rx}, s2{2, ry};
    const double dx = rx[0] - ry[0], dy = rx[1] - ry[1];
    CHECK(gadc::oracle_trace_distance(gp, s1, s2, 0.0) ==
          doctest::Approx(std::sqrt(dx * dx + dy * dy) / std::sqrt(2.0)).epsilon(1e-13));

    for (int rep = 0; rep < 20; ++rep) {
        const BlochState a = bloch_from_density(oracles::random_density(2, rng), basis);
        const BlochState b = bloch_from_density(oracles::random_density(2, rng), basis);
        for (int i = 0; i <= 10; ++i) {
            const double t = i * 0.7;
            const TransferMatrix tr = p.eval(t);
            const double pipeline =
                trace_distance(density_from_bloch(apply_channel(tr, a), basis),
                               density_from_bloch(apply_channel(tr, b), basis));
            CHECK(pipeline == doctest::Approx(gadc::oracle_trace_distance(gp, a, b, t))
                                  .epsilon(1e-10));
        }
    }
}

TEST_CASE("closed-form trajectory distance against the pipeline") {
    const HermitianBasis basis(2);
    const gadc::ProcessParams gp{5.0};
    const QuantumProcess p = gadc::process(gp);

    CHECK(gadc::oracle_trajectory_distance(gp, 0.0, 1.0) == 0.0);

    // monotone decreasing in t for fixed tau
    double prev = gadc::oracle_trajectory_distance(gp, 10.0, 0.0);
    for (int i = 1; i <= 50; ++i) {
        const double cur = gadc::oracle_trajectory_distance(gp, 10.0, i * 0.2);
        CHECK(cur <= prev + 1e-15);
        prev = cur;
    }

    const BlochState mm = maximally_mixed(2);
    for (double tau : {0.5, 2.0, 10.0}) {
        const BlochState rho_tau = apply_channel(p.eval(tau), mm);
        for (double t : {0.0, 0.4, 1.3, 5.0}) {
            const TransferMatrix tr = p.eval(t);
            const double pipeline =
                trace_distance(density_from_bloch(apply_channel(tr, mm), basis),
                               density_from_bloch(apply_channel(tr, rho_tau), basis));
            CHECK(pipeline ==
                  doctest::Approx(gadc::oracle_trajectory_distance(gp, tau, t)).epsilon(1e-10));
        }
    }
}

TEST_CASE("closed-form fidelity against the pipeline") {
    const HermitianBasis basis(2);
    const gadc::ProcessParams gp{5.0};
    const QuantumProcess p = gadc::process(gp);
    const BlochState mm = maximally_mixed(2);

    CHECK(gadc::oracle_fidelity(gp, 0.0, 2.0) == doctest::Approx(1.0).epsilon(1e-14));

    for (double tau = 0.0; tau <= 10.0; tau += 0.5) {
        const BlochState rho_tau = apply_channel(p.eval(tau), mm);
        for (double t = 0.0; t <= 10.0; t += 0.5) {
            const TransferMatrix tr = p.eval(t);
            const double pipeline =
                fidelity(density_from_bloch(apply_channel(tr, mm), basis),
                         density_from_bloch(apply_channel(tr, rho_tau), basis));
            CHECK(std::abs(pipeline - gadc::oracle_fidelity(gp, tau, t)) < 1e-10);
        }
    }

    // long-time limit: the pair converges, F -> 1
    const BlochState rho_tau = apply_channel(p.eval(10.0), mm);
    const TransferMatrix late = p.eval(30.0);
    const double pipeline_late =
        fidelity(density_from_bloch(apply_channel(late, mm), basis),
                 density_from_bloch(apply_channel(late, rho_tau), basis));
    CHECK(std::abs(pipeline_late - gadc::oracle_fidelity(gp, 10.0, 30.0)) < 1e-6);
    CHECK(gadc::oracle_fidelity(gp, 10.0, 30.0) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("closed-form g(t): zeros and positivity windows") {
    CHECK(gadc::oracle_g({5.0}, 0.0) == 0.0);
    for (int i = 0; i <= 100; ++i) CHECK(gadc::oracle_g({0.0}, i * 0.1) == 0.0);

    bool some_positive = false, some_zero = false;
    for (int i = 0; i <= 1000; ++i) {
        const double g = gadc::oracle_g({5.0}, i * 0.01);
        if (g > 0.1) some_positive = true;
        if (g == 0.0) some_zero = true;
        CHECK(g >= 0.0);
    }
    CHECK(some_positive);
    CHECK(some_zero);
}
