// The four scalar diagnostics: BLP non-Markovianity, RHP divisibility
// negativity (in processes.hpp), non-unitality, and the non-unital
// non-Markovianity built on trajectory states of the maximally mixed
// state. State-space maximizations are heuristic (coarse grid + simplex
// + random restarts); reported values are lower bounds and say so.
#pragma once

#include <cstdint>
#include <vector>

#include "qpdiag/distances.hpp"
#include "qpdiag/processes.hpp"
#include "qpdiag/report.hpp"
#include "qpdiag/states.hpp"

namespace qpdiag {

enum class DistanceKind {
    bures,
    bures_squared,
    one_minus_fidelity,
    hellinger,
    sym_relative_entropy,
    trace, // verification mode only: blind to the non-unital part on trajectory pairs
};

const char* distance_kind_name(DistanceKind kind);
DistanceKind distance_kind_from_name(const std::string& name);

struct OptimizerConfig {
    std::uint64_t seed = 1;
    int coarse_polar = 64;    // theta samples of the pure-state grid (d=2)
    int coarse_azimuth = 128; // phi samples
    int simplex_max_iter = 200;
    double simplex_ftol = 1e-8;
    int random_candidates = 100;
    int golden_iterations = 60; // tau refinement of the trajectory argmax
};

/// Sampled curve plus its grid derivative and the integral of the
/// derivative's positive part (sign changes located by interpolation).
struct CurveIntegral {
    std::vector<double> times;
    std::vector<double> curve;
    std::vector<double> derivative;
    double gain = 0;
    std::vector<Segment> segments;
};

/// sigma(t) = d/dt D_tr(rho1(t), rho2(t)) along the evolved pair, by
/// central differences; `curve` holds the trace distance itself.
CurveIntegral blp_sigma(const QuantumProcess& p, const BlochState& s1,
                        const BlochState& s2, const TimeGrid& grid);
CurveIntegral blp_sigma(const SampledProcess& sp, const HermitianBasis& basis,
                        const BlochState& s1, const BlochState& s2);

/// Purity of the evolved initial state and its derivative; `gain` is the
/// non-unitality objective for this candidate.
CurveIntegral purity_curve(const QuantumProcess& p, const BlochState& s0,
                           const TimeGrid& grid);
CurveIntegral purity_curve(const SampledProcess& sp, const BlochState& s0);

/// Orbit of the maximally mixed state on the grid; the first entry is
/// exactly the maximally mixed state.
std::vector<BlochState> trajectory_states(const QuantumProcess& p, const TimeGrid& grid);

/// Distance curve t -> D[E_t(mm), E_t(rho_tau)] for the trajectory state
/// at the given tau, its derivative sigma_nu, and the backflow integral.
CurveIntegral trajectory_pair_curve(const QuantumProcess& p, double tau,
                                    const TimeGrid& grid, DistanceKind kind);

/// max over state pairs of the integrated positive part of sigma.
MeasureReport blp_measure(const QuantumProcess& p, const TimeGrid& grid,
                          const OptimizerConfig& opt = {});

/// max over initial states of the integrated purity increase.
MeasureReport nonunitality_measure(const QuantumProcess& p, const TimeGrid& grid,
                                   const OptimizerConfig& opt = {});

/// max over trajectory states of the integrated positive part of
/// sigma_nu with the chosen monotone distance (Bures by default).
MeasureReport nonunital_nm_measure(const QuantumProcess& p, const TimeGrid& grid,
                                   DistanceKind kind = DistanceKind::bures,
                                   const OptimizerConfig& opt = {});

} // namespace qpdiag
