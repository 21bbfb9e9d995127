// Numerical kernel shared by every module: the Hermitian eigendecomposition
// all matrix functions route through, eigenvalue clamping, quadrature on
// uniform grids, and the centralized tolerance record.
#pragma once

#include <utility>
#include <vector>

#include "qpdiag/errors.hpp"
#include "qpdiag/types.hpp"

namespace qpdiag {

/// All tolerances used anywhere in the library. Defaults: 1e-12 for
/// structural identities (Hermiticity, orthonormality, round trips),
/// 1e-10 of slack for positive-semidefiniteness checks.
struct Tolerances {
    double structural = 1e-12;
    double psd_slack = 1e-10;
    double trace_one = 1e-10;
    double trace_preserving = 1e-10;
    double first_row = 1e-10;        // transfer matrices built from channels
    double first_row_loose = 1e-8;   // intermediate maps and file input
    double condition_limit = 1e12;   // invertibility guard for T(E_{t1,0})
    double clamp_floor = -1e-10;     // eigenvalues in [floor, 0) clamp to 0
    double fidelity_resolution = 1e-12; // 1-F below this is numerically zero
    double support_eigenvalue = 1e-12;  // relative-entropy support test
    double support_overlap = 1e-10;

    static const Tolerances& standard();
};

// One contiguous interval's share of an integral.
struct Segment {
    double t_begin = 0;
    double t_end = 0;
    double value = 0;
};

namespace numeric {

bool is_hermitian(const Matrix& m, double tol);

/// Eigenvalues of a Hermitian matrix, ascending. The 2x2 case is the
/// closed form; 3x3 runs on fixed-size storage, larger sizes on the
/// dynamic iterative path.
RealVector eigvalsh(const Matrix& h);

/// Sum of |eigenvalue| of a Hermitian matrix. Allocation-free for 2x2;
/// the trace-norm primitive behind channels and the measure sweeps.
double abs_eigenvalue_sum(const Matrix& h);

/// Full eigendecomposition (values ascending, matching eigenvector columns).
std::pair<RealVector, Matrix> eigh(const Matrix& h);

/// Clamp a would-be-nonnegative eigenvalue: values in [clamp_floor, 0)
/// become 0, anything below throws NumericalError.
double clamp_nonnegative(double x, const Tolerances& tol);

/// Matrix square root of a PSD Hermitian matrix via eigh + clamping.
Matrix matrix_sqrt(const Matrix& psd, const Tolerances& tol = Tolerances::standard());

/// Entrywise |.| of a Hermitian matrix: V |diag| V^dagger.
Matrix matrix_abs(const Matrix& herm);

Matrix kron(const Matrix& a, const Matrix& b);

/// Composite trapezoid over explicit sample points.
double trapezoid(const std::vector<double>& t, const std::vector<double>& y);

struct SegmentedIntegral {
    double value = 0;
    std::vector<Segment> segments; // one per maximal positive run
};

/// Integral of max(y, 0) with sign changes located by linear interpolation
/// inside each cell, so the result is second-order accurate rather than
/// cell-quantized. Segments cover maximal runs of positive contribution.
SegmentedIntegral positive_part_integral(const std::vector<double>& t,
                                         const std::vector<double>& y);

/// Central differences on a uniform grid, one-sided at both ends.
std::vector<double> central_differences(const std::vector<double>& y, double h);

} // namespace numeric
} // namespace qpdiag
