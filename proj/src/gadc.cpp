#include "qpdiag/gadc.hpp"

#include <cmath>
#include <sstream>

namespace qpdiag::gadc {

namespace {

void require_unit_interval(double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0)) {
        std::ostringstream msg;
        msg << "gadc: parameter " << name << "=" << x << " outside [0, 1]";
        throw DomainError(msg.str());
    }
}

double w_value(double omega, double t) {
    return std::cos(2.0 * omega * t) * (1.0 - std::exp(-t));
}

} // namespace

KrausSet kraus(const Params& g) {
    require_unit_interval(g.p, "p");
    require_unit_interval(g.eta, "eta");
    const double sp = std::sqrt(g.p);
    const double sq = std::sqrt(1.0 - g.p);
    const double se = std::sqrt(g.eta);
    const double sl = std::sqrt(1.0 - g.eta);
    KrausSet k;
    k.dim = 2;
    k.ops.resize(4, Matrix::Zero(2, 2));
    k.ops[0](0, 0) = sp;
    k.ops[0](1, 1) = sp * se;
    k.ops[1](0, 1) = sp * sl;
    k.ops[2](0, 0) = sq * se;
    k.ops[2](1, 1) = sq;
    k.ops[3](1, 0) = sq * sl;
    return k;
}

AffineMap affine(const Params& g) {
    require_unit_interval(g.p, "p");
    require_unit_interval(g.eta, "eta");
    AffineMap a;
    a.dim = 2;
    a.m = RealMatrix::Zero(3, 3);
    const double se = std::sqrt(g.eta);
    a.m(0, 0) = se;
    a.m(1, 1) = se;
    a.m(2, 2) = g.eta;
    a.c = RealVector::Zero(3);
    a.c[2] = (2.0 * g.p - 1.0) * (1.0 - g.eta) / std::sqrt(2.0);
    return a;
}

QuantumProcess process(const ProcessParams& gp) {
    if (!(gp.omega >= 0)) throw DomainError("gadc: omega must be nonnegative");
    const double omega = gp.omega;
    std::ostringstream label;
    label << "gadc(omega=" << omega << ")";
    auto eval = [omega](double t) {
        const double c = std::cos(omega * t);
        return transfer_from_affine(affine(Params{c * c, std::exp(-t)}));
    };
    return QuantumProcess(2, label.str(), std::move(eval));
}

double bloch_offset(const ProcessParams& gp, double t) {
    return w_value(gp.omega, t);
}

double oracle_trace_distance(const ProcessParams&, const BlochState& s1,
                             const BlochState& s2, double t) {
    if (s1.dim != 2 || s2.dim != 2)
        throw DimensionError("gadc oracle: states must be qubits");
    const double x = s1.r[0] - s2.r[0];
    const double y = s1.r[1] - s2.r[1];
    const double z = s1.r[2] - s2.r[2];
    const double et = std::exp(-t);
    return std::exp(-t / 2.0) / std::sqrt(2.0) * std::sqrt(x * x + y * y + et * z * z);
}

double oracle_trajectory_distance(const ProcessParams& gp, double tau, double t) {
    if (tau < 0 || t < 0) throw DomainError("gadc oracle: times must be nonnegative");
    return std::exp(-t) / 2.0 * std::abs(std::cos(2.0 * gp.omega * tau)) *
           (1.0 - std::exp(-tau));
}

double oracle_fidelity(const ProcessParams& gp, double tau, double t) {
    if (tau < 0 || t < 0) throw DomainError("gadc oracle: times must be nonnegative");
    const double wt = w_value(gp.omega, t);
    const double wtau = w_value(gp.omega, tau);
    const double eta_t = std::exp(-t);
    auto branch = [&](double sign) {
        const double radicand = (1.0 + sign * wt) * (1.0 + sign * (wt + eta_t * wtau));
        if (radicand < -1e-12) {
            std::ostringstream msg;
            msg << "gadc oracle_fidelity: negative radicand " << radicand;
            throw DomainError(msg.str());
        }
        return std::sqrt(radicand < 0 ? 0.0 : radicand);
    };
    return 0.5 * (branch(+1.0) + branch(-1.0));
}

double oracle_g(const ProcessParams& gp, double t) {
    if (t < 0) throw DomainError("gadc oracle: time must be nonnegative");
    const double omega = gp.omega;
    const double c = std::cos(omega * t);
    const double f = -omega * std::sin(2.0 * omega * t) * (1.0 - std::exp(-t)) + c * c;
    return 0.5 * (std::abs(1.0 - f) + std::abs(f) - 1.0);
}

} // namespace qpdiag::gadc
