// Generalized amplitude damping channel and the time-dependent process
// built from it with p_t = cos^2(omega t), eta_t = e^{-t}, together with
// the closed-form reference curves used to cross-check the numerical
// pipeline. The closed forms share no code with the pipeline on purpose.
#pragma once

#include "qpdiag/channels.hpp"
#include "qpdiag/processes.hpp"
#include "qpdiag/states.hpp"

namespace qpdiag::gadc {

struct Params {
    double p = 1.0;   // excitation balance, in [0, 1]
    double eta = 1.0; // damping survival, in [0, 1]
};

struct ProcessParams {
    double omega = 0.0; // angular frequency of p_t = cos^2(omega t), >= 0
};

/// The four Kraus operators; any (p, eta) in the unit square is a channel.
KrausSet kraus(const Params& g);

/// M = diag(sqrt(eta), sqrt(eta), eta), c = (0, 0, (2p-1)(1-eta)/sqrt(2)).
AffineMap affine(const Params& g);

/// Closed-form process t -> GADC(cos^2(omega t), e^{-t}); identity at t=0.
QuantumProcess process(const ProcessParams& gp);

/// W_t = (2 p_t - 1)(1 - eta_t) = cos(2 omega t)(1 - e^{-t}); the z-offset
/// of the evolved maximally mixed state is W_t / sqrt(2).
double bloch_offset(const ProcessParams& gp, double t);

/// Trace distance between two evolved states: with (x, y, z) the initial
/// Bloch difference, e^{-t/2}/sqrt(2) sqrt(x^2 + y^2 + e^{-t} z^2).
double oracle_trace_distance(const ProcessParams& gp, const BlochState& s1,
                             const BlochState& s2, double t);

/// Trace distance between the evolved maximally mixed state and the
/// evolved trajectory state: e^{-t}/2 |cos(2 omega tau)| (1 - e^{-tau}).
double oracle_trajectory_distance(const ProcessParams& gp, double tau, double t);

/// Fidelity between the same pair: (h+ + h-)/2 with
/// h± = sqrt((1 ± W_t)(1 ± W_t ± eta_t W_tau)).
double oracle_fidelity(const ProcessParams& gp, double tau, double t);

/// Divisibility witness: g(t) = (|1 - f| + |f| - 1)/2 with
/// f(t) = -omega sin(2 omega t)(1 - e^{-t}) + cos^2(omega t).
double oracle_g(const ProcessParams& gp, double t);

} // namespace qpdiag::gadc
