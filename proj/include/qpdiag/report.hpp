// Result record shared by all four diagnostics.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpdiag/numeric.hpp"

namespace qpdiag {

/// Scalar diagnostic value plus everything needed to plot and audit it:
/// per-interval contributions summing to the value, a description of the
/// maximizing argument, the sampled integrand, and any caveats (time
/// truncation, heuristic maximization).
struct MeasureReport {
    std::string measure;
    double value = 0;
    std::vector<Segment> contributions;
    std::string maximizer;
    std::map<std::string, double> maximizer_params;
    std::string trace_name;
    std::vector<double> trace_times;
    std::vector<double> trace_values;
    std::string aux_trace_name; // optional companion curve (e.g. the distance)
    std::vector<double> aux_trace_values;
    std::vector<std::string> caveats;
};

} // namespace qpdiag
