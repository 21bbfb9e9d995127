// Derivative-free optimizers backing the heuristic state-space searches.
#pragma once

#include <functional>

#include "qpdiag/types.hpp"

namespace qpdiag::opt {

struct SimplexResult {
    RealVector x;
    double value = 0;
    int iterations = 0;
};

/// Nelder-Mead downhill simplex (reflection 1, expansion 2, contraction
/// 0.5, shrink 0.5). Minimizes f starting from x0 with an initial simplex
/// of the given edge step; stops when the simplex value spread falls
/// below ftol or after max_iter iterations.
SimplexResult nelder_mead(const std::function<double(const RealVector&)>& f,
                          const RealVector& x0, double step, int max_iter,
                          double ftol);

/// Golden-section search for a maximum of a unimodal-ish f on [a, b].
/// Returns the located argument.
double golden_section_max(const std::function<double(double)>& f, double a,
                          double b, int iterations);

} // namespace qpdiag::opt
