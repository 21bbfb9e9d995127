// Time-parameterized channel families, their intermediate maps, and the
// divisibility witness g(t) obtained from the trace-norm excess of the
// intermediate map's Choi matrix.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qpdiag/channels.hpp"
#include "qpdiag/report.hpp"

namespace qpdiag {

/// Family t -> T(E_{t,0}), closed-form or tabulated behind one interface.
/// eval(0) must be the identity and eval(t) CPT for every physical t;
/// factories and file loaders enforce what they can, tests probe the rest.
class QuantumProcess {
public:
    QuantumProcess(int dim, std::string label,
                   std::function<TransferMatrix(double)> eval);

    int dim() const { return dim_; }
    const std::string& label() const { return label_; }
    TransferMatrix eval(double t) const;

private:
    int dim_;
    std::string label_;
    std::function<TransferMatrix(double)> eval_;
};

/// Uniform grid 0 = t_0 < ... < t_{n-1} = t_max.
struct TimeGrid {
    double t_max = 0;
    int n = 0;

    TimeGrid(double t_max_, int n_);
    double step() const { return t_max / (n - 1); }
    std::vector<double> points() const;
};

/// Channel values of E_{t,0} sampled on a grid, split into affine pairs.
/// Shared precomputation for the measure sweeps.
struct SampledProcess {
    int dim = 0;
    std::vector<double> times;
    std::vector<RealMatrix> m;
    std::vector<RealVector> c;
};

SampledProcess sample_process(const QuantumProcess& p, const TimeGrid& grid);

/// Tabulated family with entrywise linear interpolation of the transfer
/// matrix between samples (first-order accurate). Validates t_0 = 0,
/// identity at t=0, ascending times, trace preservation and complete
/// positivity at every sample.
QuantumProcess tabulated_process(int dim, std::vector<double> times,
                                 std::vector<RealMatrix> transfers,
                                 const Tolerances& tol = Tolerances::standard());

/// T(E_{t2,t1}) = T(E_{t2,0}) T(E_{t1,0})^{-1}. Trace-preserving by
/// construction but possibly non-CP: that is exactly what g(t) probes.
/// Throws NonInvertibleProcessError when cond(T(E_{t1,0})) exceeds the
/// guard.
TransferMatrix intermediate_map(const QuantumProcess& p, double t1, double t2,
                                const Tolerances& tol = Tolerances::standard());

/// Finite-difference estimate of
///   g(t) = lim_{eps->0+} (Tr|C(E_{t+eps,t})| - 1)/eps
/// with one Richardson step (eps and eps/2); negative numerical residue
/// is clamped to 0.
double rhp_g(const QuantumProcess& p, const HermitianBasis& basis, double t,
             double eps, const Tolerances& tol = Tolerances::standard());
double rhp_g(const QuantumProcess& p, double t, double eps = 1e-5);

/// Trapezoidal integral of g over the grid (the infinite upper limit is
/// truncated at t_max; the report says so).
MeasureReport rhp_measure(const QuantumProcess& p, const TimeGrid& grid,
                          double eps = 1e-5);

} // namespace qpdiag
