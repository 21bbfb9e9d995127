#include "qpdiag/io.hpp"

#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

namespace qpdiag::io {

namespace {

using nlohmann::json;

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

int read_dim(const json& j, const std::string& path) {
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw ParseError(path + ": missing integer field 'dim'");
    const int dim = j["dim"].get<int>();
    if (dim < 2) throw ValidationError(path + ": dim must be at least 2");
    return dim;
}

} // namespace

TransferMatrix load_channel(const std::string& path, const Tolerances& tol) {
    const json j = parse_file(path);
    const int dim = read_dim(j, path);
    const int n = dim * dim;
    if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].size() != static_cast<std::size_t>(n))
        throw ParseError(path + ": 'rows' must be an array of d^2 rows");
    RealMatrix t(n, n);
    for (int r = 0; r < n; ++r) {
        const auto& row = j["rows"][static_cast<std::size_t>(r)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
            throw ParseError(path + ": each row must hold d^2 numbers");
        for (int c = 0; c < n; ++c) {
            if (!row[static_cast<std::size_t>(c)].is_number())
                throw ParseError(path + ": transfer entries must be numbers");
            t(r, c) = row[static_cast<std::size_t>(c)].get<double>();
        }
    }
    RealVector e0 = RealVector::Zero(n);
    e0[0] = 1.0;
    if ((t.row(0).transpose() - e0).cwiseAbs().maxCoeff() > tol.first_row_loose)
        throw ValidationError(path + ": first row is not (1, 0, ..., 0) within 1e-8 "
                                     "(map is not trace-preserving)");
    return TransferMatrix{dim, std::move(t)};
}

QuantumProcess load_process(const std::string& path, const Tolerances& tol) {
    const json j = parse_file(path);
    const int dim = read_dim(j, path);
    const int n = dim * dim;
    if (!j.contains("times") || !j["times"].is_array())
        throw ParseError(path + ": missing array field 'times'");
    if (!j.contains("transfers") || !j["transfers"].is_array())
        throw ParseError(path + ": missing array field 'transfers'");
    std::vector<double> times;
    for (const auto& v : j["times"]) {
        if (!v.is_number()) throw ParseError(path + ": times must be numbers");
        times.push_back(v.get<double>());
    }
    std::vector<RealMatrix> transfers;
    for (const auto& flat : j["transfers"]) {
        if (!flat.is_array() || flat.size() != static_cast<std::size_t>(n) * n)
            throw ParseError(path + ": each transfer must hold d^4 numbers, row-major");
        RealMatrix t(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                const auto& v = flat[static_cast<std::size_t>(r * n + c)];
                if (!v.is_number()) throw ParseError(path + ": transfer entries must be numbers");
                t(r, c) = v.get<double>();
            }
        transfers.push_back(std::move(t));
    }
    try {
        return tabulated_process(dim, std::move(times), std::move(transfers), tol);
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

json report_to_json(const MeasureReport& report) {
    json j;
    j["name"] = report.measure;
    j["value"] = report.value;
    j["maximizer"] = report.maximizer;
    j["maximizer_params"] = report.maximizer_params;
    json contribs = json::array();
    for (const auto& seg : report.contributions)
        contribs.push_back({seg.t_begin, seg.t_end, seg.value});
    j["contributions"] = contribs;
    j["caveats"] = report.caveats;
    j["trace"] = {{"name", report.trace_name},
                  {"t", report.trace_times},
                  {"y", report.trace_values}};
    if (!report.aux_trace_values.empty())
        j["trace"]["aux"] = {{"name", report.aux_trace_name},
                             {"y", report.aux_trace_values}};
    return j;
}

void write_channel(const std::string& path, const TransferMatrix& t) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < t.t.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < t.t.cols(); ++c) row.push_back(t.t(r, c));
        rows.push_back(std::move(row));
    }
    json j{{"dim", t.dim}, {"rows", std::move(rows)}};
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << j.dump(2) << "\n";
}

void write_process(const std::string& path, int dim, const std::vector<double>& times,
                   const std::vector<RealMatrix>& transfers) {
    json flats = json::array();
    for (const auto& t : transfers) {
        json flat = json::array();
        for (Eigen::Index r = 0; r < t.rows(); ++r)
            for (Eigen::Index c = 0; c < t.cols(); ++c) flat.push_back(t(r, c));
        flats.push_back(std::move(flat));
    }
    json j{{"dim", dim}, {"times", times}, {"transfers", std::move(flats)}};
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << j.dump(2) << "\n";
}

std::string format_full(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace qpdiag::io
