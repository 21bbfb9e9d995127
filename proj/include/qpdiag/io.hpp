// File formats consumed and produced by the CLI.
//
// Tabulated channel:  {"dim": d, "rows": [[..d^2 reals..] x d^2]}
//   (row-major transfer matrix; rejected unless the first row is
//    (1, 0, ..., 0) within 1e-8)
// Tabulated process:  {"dim": d, "times": [0, t_1, ...],
//                      "transfers": [[..d^4 reals, row-major..], ...]}
//   (validated: identity at t=0, CPT at every sample)
#pragma once

#include <string>
#include <vector>

#include "qpdiag/channels.hpp"
#include "qpdiag/processes.hpp"
#include "qpdiag/report.hpp"

#include <nlohmann/json_fwd.hpp>

namespace qpdiag::io {

TransferMatrix load_channel(const std::string& path,
                            const Tolerances& tol = Tolerances::standard());

QuantumProcess load_process(const std::string& path,
                            const Tolerances& tol = Tolerances::standard());

/// Serialize one report; trace arrays are included at full precision.
nlohmann::json report_to_json(const MeasureReport& report);

void write_channel(const std::string& path, const TransferMatrix& t);
void write_process(const std::string& path, int dim, const std::vector<double>& times,
                   const std::vector<RealMatrix>& transfers);

/// Render a double with 17 significant digits (round-trip exact).
std::string format_full(double x);

} // namespace qpdiag::io
