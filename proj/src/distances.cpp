#include "qpdiag/distances.hpp"

#include <cmath>
#include <limits>

#include "qpdiag/channels.hpp"

namespace qpdiag {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* where) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
        throw DimensionError(std::string(where) + ": dimension mismatch");
}

// Fixed-size qubit path: same eigen-square-root route, no heap traffic.
// The measure sweeps evaluate this millions of times.
double fidelity_2x2(const Eigen::Matrix2cd& rho1, const Eigen::Matrix2cd& rho2,
                    const Tolerances& tol) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es;
    es.compute(rho1);
    Eigen::Vector2d roots;
    roots[0] = std::sqrt(numeric::clamp_nonnegative(es.eigenvalues()[0], tol));
    roots[1] = std::sqrt(numeric::clamp_nonnegative(es.eigenvalues()[1], tol));
    const Eigen::Matrix2cd s1 =
        es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
    Eigen::Matrix2cd inner = s1 * rho2 * s1;
    inner = 0.5 * (inner + inner.adjoint()).eval();
    es.compute(inner);
    const double f = std::sqrt(numeric::clamp_nonnegative(es.eigenvalues()[0], tol)) +
                     std::sqrt(numeric::clamp_nonnegative(es.eigenvalues()[1], tol));
    if (f >= 1.0 - tol.fidelity_resolution) return 1.0;
    return f;
}

} // namespace

double trace_distance(const Matrix& rho1, const Matrix& rho2, const Tolerances& tol) {
    require_same_shape(rho1, rho2, "trace_distance");
    return 0.5 * trace_norm(rho1 - rho2, tol);
}

double fidelity(const Matrix& rho1, const Matrix& rho2, const Tolerances& tol) {
    require_same_shape(rho1, rho2, "fidelity");
    if (rho1.rows() == 2)
        return fidelity_2x2(rho1, rho2, tol);
    const Matrix s1 = numeric::matrix_sqrt(rho1, tol);
    Matrix inner = s1 * rho2 * s1;
    inner = 0.5 * (inner + inner.adjoint().eval()); // scrub rounding asymmetry
    const RealVector ev = numeric::eigvalsh(inner);
    double f = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        f += std::sqrt(numeric::clamp_nonnegative(ev[i], tol));
    if (f >= 1.0 - tol.fidelity_resolution) return 1.0;
    return f;
}

double bures_distance(const Matrix& rho1, const Matrix& rho2, const Tolerances& tol) {
    const double f = fidelity(rho1, rho2, tol);
    return std::sqrt(2.0 * std::max(0.0, 1.0 - f));
}

double relative_entropy(const Matrix& rho1, const Matrix& rho2, const Tolerances& tol) {
    require_same_shape(rho1, rho2, "relative_entropy");
    const auto [p, u] = numeric::eigh(rho1);
    const auto [q, v] = numeric::eigh(rho2);

    double entropy1 = 0; // Tr(rho1 ln rho1)
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        const double pi = numeric::clamp_nonnegative(p[i], tol);
        if (pi > 0) entropy1 += pi * std::log(pi);
    }

    double cross = 0; // Tr(rho1 ln rho2)
    for (Eigen::Index j = 0; j < q.size(); ++j) {
        const double qj = numeric::clamp_nonnegative(q[j], tol);
        const double overlap = (v.col(j).adjoint() * rho1 * v.col(j))(0, 0).real();
        if (qj < tol.support_eigenvalue) {
            if (overlap > tol.support_overlap)
                return std::numeric_limits<double>::infinity();
            continue; // 0 ln 0
        }
        cross += overlap * std::log(qj);
    }
    return std::max(0.0, entropy1 - cross);
}

double symmetric_relative_entropy(const Matrix& rho1, const Matrix& rho2,
                                  const Tolerances& tol) {
    const double a = relative_entropy(rho1, rho2, tol);
    if (std::isinf(a)) return a;
    const double b = relative_entropy(rho2, rho1, tol);
    return a + b;
}

double hellinger_distance(const Matrix& rho1, const Matrix& rho2, const Tolerances& tol) {
    require_same_shape(rho1, rho2, "hellinger_distance");
    const Matrix s1 = numeric::matrix_sqrt(rho1, tol);
    const Matrix s2 = numeric::matrix_sqrt(rho2, tol);
    double affinity = (s1 * s2).trace().real();
    if (affinity >= 1.0 - tol.fidelity_resolution) affinity = 1.0;
    return std::sqrt(2.0 * std::max(0.0, 1.0 - affinity));
}

} // namespace qpdiag
