#include "qpdiag/numeric.hpp"

#include <cmath>
#include <sstream>

namespace qpdiag {

const Tolerances& Tolerances::standard() {
    static const Tolerances tol{};
    return tol;
}

namespace numeric {

bool is_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

namespace {

// Closed-form eigenvalues for a 2x2 Hermitian matrix, ascending.
RealVector eigvalsh_2x2(const Matrix& h) {
    const double a = h(0, 0).real();
    const double d = h(1, 1).real();
    const double mean = 0.5 * (a + d);
    const double off = std::abs(h(1, 0));
    const double half = 0.5 * (a - d);
    const double disc = std::sqrt(half * half + off * off);
    RealVector ev(2);
    ev << mean - disc, mean + disc;
    return ev;
}

} // namespace

RealVector eigvalsh(const Matrix& h) {
    const auto n = h.rows();
    if (n != h.cols()) throw DimensionError("eigvalsh: matrix is not square");
    if (n == 2) return eigvalsh_2x2(h);
    if (n == 3) {
        const Eigen::Matrix3cd fixed = h;
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> s3(fixed, Eigen::EigenvaluesOnly);
        if (s3.info() != Eigen::Success)
            throw NumericalError("eigvalsh: eigensolver failed to converge");
        return s3.eigenvalues();
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver;
    solver.compute(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalError("eigvalsh: eigensolver failed to converge");
    return solver.eigenvalues();
}

double abs_eigenvalue_sum(const Matrix& h) {
    if (h.rows() == 2 && h.cols() == 2) {
        const double a = h(0, 0).real();
        const double d = h(1, 1).real();
        const double mean = 0.5 * (a + d);
        const double half = 0.5 * (a - d);
        const double disc = std::sqrt(half * half + std::norm(h(1, 0)));
        return std::abs(mean - disc) + std::abs(mean + disc);
    }
    return eigvalsh(h).cwiseAbs().sum();
}

std::pair<RealVector, Matrix> eigh(const Matrix& h) {
    const auto n = h.rows();
    if (n != h.cols()) throw DimensionError("eigh: matrix is not square");
    if (n == 2) {
        const Eigen::Matrix2cd fixed = h;
        const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> s2(fixed);
        if (s2.info() != Eigen::Success)
            throw NumericalError("eigh: eigensolver failed to converge");
        return {s2.eigenvalues(), s2.eigenvectors()};
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success)
        throw NumericalError("eigh: eigensolver failed to converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

double clamp_nonnegative(double x, const Tolerances& tol) {
    if (x >= 0) return x;
    if (x >= tol.clamp_floor) return 0.0;
    std::ostringstream msg;
    msg << "eigenvalue " << x << " below the clamp floor " << tol.clamp_floor;
    throw NumericalError(msg.str());
}

Matrix matrix_sqrt(const Matrix& psd, const Tolerances& tol) {
    auto [values, vectors] = eigh(psd);
    RealVector roots(values.size());
    for (Eigen::Index i = 0; i < values.size(); ++i)
        roots[i] = std::sqrt(clamp_nonnegative(values[i], tol));
    return vectors * roots.asDiagonal() * vectors.adjoint();
}

Matrix matrix_abs(const Matrix& herm) {
    auto [values, vectors] = eigh(herm);
    return vectors * values.cwiseAbs().asDiagonal() * vectors.adjoint();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

double trapezoid(const std::vector<double>& t, const std::vector<double>& y) {
    if (t.size() != y.size()) throw DimensionError("trapezoid: length mismatch");
    double total = 0;
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        total += 0.5 * (t[i + 1] - t[i]) * (y[i] + y[i + 1]);
    return total;
}

SegmentedIntegral positive_part_integral(const std::vector<double>& t,
                                         const std::vector<double>& y) {
    if (t.size() != y.size()) throw DimensionError("positive_part_integral: length mismatch");
    SegmentedIntegral out;
    bool open = false;
    Segment current;
    auto close = [&]() {
        if (open && current.value > 0) out.segments.push_back(current);
        open = false;
    };
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        const double a = y[i], b = y[i + 1];
        const double h = t[i + 1] - t[i];
        double cell = 0, cell_begin = t[i], cell_end = t[i + 1];
        if (a >= 0 && b >= 0) {
            cell = 0.5 * h * (a + b);
        } else if (a > 0 && b < 0) {
            const double s = a / (a - b); // zero crossing, fraction of the cell
            cell = 0.5 * h * s * a;
            cell_end = t[i] + s * h;
        } else if (a < 0 && b > 0) {
            const double s = a / (a - b);
            cell = 0.5 * h * (1 - s) * b;
            cell_begin = t[i] + s * h;
        }
        if (cell > 0) {
            if (!open) {
                current = Segment{cell_begin, cell_end, 0.0};
                open = true;
            }
            current.t_end = cell_end;
            current.value += cell;
            out.value += cell;
        } else {
            close();
        }
    }
    close();
    return out;
}

std::vector<double> central_differences(const std::vector<double>& y, double h) {
    const std::size_t n = y.size();
    if (n < 2) throw DimensionError("central_differences: need at least two samples");
    std::vector<double> d(n);
    d[0] = (y[1] - y[0]) / h;
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (y[i + 1] - y[i - 1]) / (2 * h);
    d[n - 1] = (y[n - 1] - y[n - 2]) / h;
    return d;
}

} // namespace numeric
} // namespace qpdiag
