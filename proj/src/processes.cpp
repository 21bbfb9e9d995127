#include "qpdiag/processes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <utility>

#include "qpdiag/parallel.hpp"

namespace qpdiag {

QuantumProcess::QuantumProcess(int dim, std::string label,
                               std::function<TransferMatrix(double)> eval)
    : dim_(dim), label_(std::move(label)), eval_(std::move(eval)) {
    if (dim < 2) throw DimensionError("QuantumProcess: dimension must be at least 2");
}

TransferMatrix QuantumProcess::eval(double t) const {
    if (t < 0) throw DomainError("QuantumProcess: time must be nonnegative");
    TransferMatrix out = eval_(t);
    if (out.dim != dim_ || out.t.rows() != dim_ * dim_ || out.t.cols() != dim_ * dim_)
        throw DimensionError("QuantumProcess: evaluator returned wrong shape");
    return out;
}

TimeGrid::TimeGrid(double t_max_, int n_) : t_max(t_max_), n(n_) {
    if (!(t_max > 0)) throw DomainError("TimeGrid: t_max must be positive");
    if (n < 2) throw DomainError("TimeGrid: need at least two samples");
}

std::vector<double> TimeGrid::points() const {
    std::vector<double> t(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        t[static_cast<std::size_t>(i)] = t_max * (static_cast<double>(i) / (n - 1));
    t.back() = t_max;
    return t;
}

SampledProcess sample_process(const QuantumProcess& p, const TimeGrid& grid) {
    SampledProcess sp;
    sp.dim = p.dim();
    sp.times = grid.points();
    sp.m.resize(sp.times.size());
    sp.c.resize(sp.times.size());
    numeric::parallel_for_indices(static_cast<std::int64_t>(sp.times.size()),
                                  [&](std::int64_t i) {
                                      const auto idx = static_cast<std::size_t>(i);
                                      AffineMap a = affine_from_transfer(p.eval(sp.times[idx]));
                                      sp.m[idx] = std::move(a.m);
                                      sp.c[idx] = std::move(a.c);
                                  });
    return sp;
}

QuantumProcess tabulated_process(int dim, std::vector<double> times,
                                 std::vector<RealMatrix> transfers,
                                 const Tolerances& tol) {
    if (times.size() != transfers.size() || times.size() < 2)
        throw ValidationError("tabulated process: need matching times/transfers, at least two");
    if (times.front() != 0.0)
        throw ValidationError("tabulated process: first sample must be at t=0");
    const int n = dim * dim;
    HermitianBasis basis(dim);
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (i > 0 && !(times[i] > times[i - 1]))
            throw ValidationError("tabulated process: times must be strictly ascending");
        if (transfers[i].rows() != n || transfers[i].cols() != n)
            throw ValidationError("tabulated process: transfer matrix has wrong shape");
        const TransferMatrix t{dim, transfers[i]};
        std::ostringstream at;
        at << "sample at t=" << times[i];
        RealVector e0 = RealVector::Zero(n);
        e0[0] = 1.0;
        if ((transfers[i].row(0).transpose() - e0).cwiseAbs().maxCoeff() > tol.first_row_loose)
            throw ValidationError("tabulated process: " + at.str() + " is not trace-preserving");
        if (!is_cp(choi_from_transfer(t, basis), tol.psd_slack))
            throw ValidationError("tabulated process: " + at.str() + " is not completely positive");
    }
    if ((transfers.front() - RealMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > tol.first_row)
        throw ValidationError("tabulated process: transfer at t=0 is not the identity");

    auto eval = [dim, times = std::move(times), transfers = std::move(transfers)](double t) {
        if (t > times.back()) {
            std::ostringstream msg;
            msg << "tabulated process: time " << t << " beyond the tabulated range "
                << times.back();
            throw DomainError(msg.str());
        }
        const auto upper = std::upper_bound(times.begin(), times.end(), t);
        if (upper == times.begin()) return TransferMatrix{dim, transfers.front()};
        if (upper == times.end()) return TransferMatrix{dim, transfers.back()};
        const auto hi = static_cast<std::size_t>(upper - times.begin());
        const auto lo = hi - 1;
        const double s = (t - times[lo]) / (times[hi] - times[lo]);
        return TransferMatrix{dim, (1 - s) * transfers[lo] + s * transfers[hi]};
    };
    return QuantumProcess(dim, "tabulated", std::move(eval));
}

TransferMatrix intermediate_map(const QuantumProcess& p, double t1, double t2,
                                const Tolerances& tol) {
    if (t1 < 0 || t2 < t1)
        throw DomainError("intermediate_map: need 0 <= t1 <= t2");
    const TransferMatrix start = p.eval(t1);
    const TransferMatrix end = p.eval(t2);

    // X = T2 T1^{-1}, via the transposed system T1^T X^T = T2^T.
    const Eigen::JacobiSVD<RealMatrix> svd(start.t.transpose(),
                                           Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double smin = svd.singularValues().minCoeff();
    const double smax = svd.singularValues().maxCoeff();
    const double cond = smin > 0 ? smax / smin : std::numeric_limits<double>::infinity();
    if (!(cond <= tol.condition_limit)) {
        std::ostringstream msg;
        msg << "intermediate_map: T(E_{t1,0}) at t1=" << t1
            << " is not invertible within the guard (condition number " << cond << ")";
        throw NonInvertibleProcessError(msg.str(), cond);
    }
    const RealMatrix x = svd.solve(end.t.transpose()).transpose();
    return TransferMatrix{p.dim(), x};
}

double rhp_g(const QuantumProcess& p, const HermitianBasis& basis, double t,
             double eps, const Tolerances& tol) {
    if (!(eps > 0)) throw DomainError("rhp_g: eps must be positive");
    auto estimate = [&](double e) {
        const TransferMatrix mid = intermediate_map(p, t, t + e, tol);
        const ChoiMatrix c = choi_from_transfer(mid, basis);
        return (trace_norm(c.c, tol) - 1.0) / e;
    };
    const double g = 2.0 * estimate(eps / 2) - estimate(eps);
    return g > 0 ? g : 0.0;
}

double rhp_g(const QuantumProcess& p, double t, double eps) {
    const HermitianBasis basis(p.dim());
    return rhp_g(p, basis, t, eps);
}

MeasureReport rhp_measure(const QuantumProcess& p, const TimeGrid& grid, double eps) {
    const HermitianBasis basis(p.dim());
    const std::vector<double> times = grid.points();
    std::vector<double> g(times.size());
    numeric::parallel_for_indices(static_cast<std::int64_t>(times.size()),
                                  [&](std::int64_t i) {
                                      const auto idx = static_cast<std::size_t>(i);
                                      g[idx] = rhp_g(p, basis, times[idx], eps);
                                  });

    MeasureReport report;
    report.measure = "rhp";
    report.value = numeric::trapezoid(times, g);
    report.trace_name = "g";
    report.trace_times = times;
    report.trace_values = g;
    report.maximizer = "none (integral of the divisibility witness)";
    // contributions: maximal runs of positive g; cells with both ends 0 add nothing
    numeric::SegmentedIntegral seg = numeric::positive_part_integral(times, g);
    report.contributions = std::move(seg.segments);
    std::ostringstream trunc;
    trunc << "infinite upper limit truncated at t_max=" << grid.t_max;
    report.caveats.push_back(trunc.str());
    std::ostringstream epsnote;
    epsnote << "g(t) limit approximated by finite difference with eps=" << eps
            << " plus one Richardson step";
    report.caveats.push_back(epsnote.str());
    return report;
}

} // namespace qpdiag
