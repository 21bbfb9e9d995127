#include <doctest.h>

#include <cmath>
#include <random>

#include "qpdiag/gadc.hpp"
#include "qpdiag/processes.hpp"
#include "support/oracles.hpp"

using namespace qpdiag;

namespace {

// unitary z-rotation process: divisible, unital
QuantumProcess rotation_process(double speed) {
    auto eval = [speed](double t) {
        RealMatrix m = RealMatrix::Identity(4, 4);
        const double a = speed * t;
        m(1, 1) = std::cos(a);
        m(1, 2) = -std::sin(a);
        m(2, 1) = std::sin(a);
        m(2, 2) = std::cos(a);
        return TransferMatrix{2, m};
    };
    return QuantumProcess(2, "rotation", std::move(eval));
}

} // namespace

TEST_CASE("time grid is uniform with exact endpoints") {
    const TimeGrid grid(20.0, 4001);
    const auto t = grid.points();
    REQUIRE(t.size() == 4001);
    CHECK(t.front() == 0.0);
    CHECK(t.back() == 20.0);
    const double h = grid.step();
    for (std::size_t i = 1; i < t.size(); ++i)
        CHECK(std::abs(t[i] - t[i - 1] - h) < 1e-12);
    CHECK_THROWS_AS(TimeGrid(0.0, 10), DomainError);
    CHECK_THROWS_AS(TimeGrid(1.0, 1), DomainError);
}

TEST_CASE("intermediate map fixed cases") {
    const QuantumProcess p = gadc::process({5.0});
    const TransferMatrix same = intermediate_map(p, 1.3, 1.3);
    CHECK((same.t - RealMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);

    const TransferMatrix from_zero = intermediate_map(p, 0.0, 2.1);
    CHECK((from_zero.t - p.eval(2.1).t).cwiseAbs().maxCoeff() < 1e-12);

    CHECK_THROWS_AS(intermediate_map(p, 2.0, 1.0), DomainError);
}

TEST_CASE("intermediate maps satisfy the composition law") {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> u(0.0, 6.0);
    const QuantumProcess p = gadc::process({5.0});
    for (int rep = 0; rep < 25; ++rep) {
        double a = u(rng), b = u(rng), c = u(rng);
        if (a > b) std::swap(a, b);
        if (b > c) std::swap(b, c);
        if (a > b) std::swap(a, b);
        const TransferMatrix left =
            compose(intermediate_map(p, b, c), intermediate_map(p, a, b));
        const TransferMatrix right = intermediate_map(p, a, c);
        CHECK((left.t - right.t).cwiseAbs().maxCoeff() < 1e-9);

        // composing the intermediate map with the first leg recovers the second
        const TransferMatrix recovered = compose(intermediate_map(p, a, b), p.eval(a));
        CHECK((recovered.t - p.eval(b).t).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("singular first legs are rejected with the condition number") {
    // channel collapses completely at t >= 1: T(E_{t,0}) becomes singular
    auto eval = [](double t) {
        RealMatrix m = RealMatrix::Identity(4, 4);
        const double s = std::max(0.0, 1.0 - t);
        m(1, 1) = s;
        m(2, 2) = s;
        m(3, 3) = s;
        return TransferMatrix{2, m};
    };
    const QuantumProcess p(2, "collapse", eval);
    try {
        intermediate_map(p, 1.0, 1.5);
        FAIL("expected NonInvertibleProcessError");
    } catch (const NonInvertibleProcessError& e) {
        CHECK(e.condition_number > 1e12);
    }
}

TEST_CASE("g vanishes identically for the divisible GADC") {
    const QuantumProcess p = gadc::process({0.0});
    for (double t : {0.0, 0.5, 1.0, 3.0, 7.5})
        CHECK(rhp_g(p, t, 1e-5) <= 1e-6);
}

TEST_CASE("g matches the closed form for omega = 5") {
    const gadc::ProcessParams gp{5.0};
    const QuantumProcess p = gadc::process(gp);
    const HermitianBasis basis(2);
    double max_err = 0;
    for (int i = 0; i <= 500; ++i) {
        const double t = 10.0 * i / 500.0;
        max_err = std::max(max_err, std::abs(rhp_g(p, basis, t, 1e-5) - gadc::oracle_g(gp, t)));
    }
    CHECK(max_err <= 1e-3);
    CHECK(rhp_g(p, 0.0, 1e-5) <= 1e-6); // f(0) = 1
}

TEST_CASE("rhp measure: unitary processes are divisible, omega=5 is not") {
    const TimeGrid grid(10.0, 801);
    CHECK(rhp_measure(rotation_process(2.0), grid).value <= 1e-6);
    CHECK(rhp_measure(gadc::process({0.0}), grid).value <= 1e-6);

    const MeasureReport report = rhp_measure(gadc::process({5.0}), grid);
    CHECK(report.value > 0.01);
    double sum = 0;
    for (const auto& seg : report.contributions) sum += seg.value;
    CHECK(sum == doctest::Approx(report.value).epsilon(1e-10));
    REQUIRE(report.trace_values.size() == 801);
}

TEST_CASE("tabulated processes validate their samples") {
    const HermitianBasis basis(2);
    std::vector<double> times{0.0, 1.0, 2.0};
    std::vector<RealMatrix> transfers;
    for (double t : times)
        transfers.push_back(gadc::process({1.0}).eval(t).t);

    CHECK_NOTHROW(tabulated_process(2, times, transfers));

    // t=0 transfer not the identity
    auto broken = transfers;
    broken[0](3, 3) = 0.5;
    CHECK_THROWS_AS(tabulated_process(2, times, broken), ValidationError);

    // non-CP sample
    auto noncp = transfers;
    noncp[1] = RealMatrix::Identity(4, 4);
    noncp[1](2, 2) = -1.0; // transpose map
    CHECK_THROWS_AS(tabulated_process(2, times, noncp), ValidationError);

    // non-ascending times
    CHECK_THROWS_AS(tabulated_process(2, {0.0, 1.0, 1.0}, transfers), ValidationError);
    // first sample away from zero
    CHECK_THROWS_AS(tabulated_process(2, {0.5, 1.0, 2.0}, transfers), ValidationError);
}

TEST_CASE("tabulated processes interpolate linearly and reject out-of-range times") {
    std::vector<double> times{0.0, 2.0};
    RealMatrix t0 = RealMatrix::Identity(4, 4);
    RealMatrix t1 = RealMatrix::Identity(4, 4);
    t1(1, 1) = 0.5;
    t1(2, 2) = 0.5;
    t1(3, 3) = 0.5; // depolarizing-ish endpoint, CP
    const QuantumProcess p = tabulated_process(2, times, {t0, t1});
    CHECK(p.eval(1.0).t(1, 1) == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(p.eval(2.0).t(3, 3) == doctest::Approx(0.5));
    CHECK_THROWS_AS(p.eval(2.5), DomainError);
}

TEST_CASE("sampled processes expose the affine pairs at the grid points") {
    const QuantumProcess p = gadc::process({2.0});
    const TimeGrid grid(4.0, 11);
    const SampledProcess sp = sample_process(p, grid);
    REQUIRE(sp.times.size() == 11);
    for (std::size_t i = 0; i < sp.times.size(); ++i) {
        const AffineMap a = affine_from_transfer(p.eval(sp.times[i]));
        CHECK((sp.m[i] - a.m).cwiseAbs().maxCoeff() == 0.0);
        CHECK((sp.c[i] - a.c).cwiseAbs().maxCoeff() == 0.0);
    }
}
