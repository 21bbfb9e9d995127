// Quantum channels in Kraus, transfer-matrix, affine, and Choi forms,
// with conversions between them and the structural predicates (unitality,
// complete positivity) the measures are built on.
#pragma once

#include <vector>

#include "qpdiag/basis.hpp"
#include "qpdiag/states.hpp"
#include "qpdiag/types.hpp"

namespace qpdiag {

struct KrausSet {
    int dim = 0;
    std::vector<Matrix> ops;
};

/// d^2 x d^2 real matrix acting on operator-basis coordinates; first row
/// (1, 0, ..., 0) expresses trace preservation in the lambda_0-first basis.
struct TransferMatrix {
    int dim = 0;
    RealMatrix t;
};

/// Bloch-vector action r -> M r + c; embeds into a TransferMatrix as
/// [[1, 0], [sqrt(d) c, M]].
struct AffineMap {
    int dim = 0;
    RealMatrix m;
    RealVector c;
};

/// Choi-Jamiolkowski matrix with the maximally-entangled normalization,
/// so Tr C = 1 for trace-preserving maps.
struct ChoiMatrix {
    int dim = 0;
    Matrix c;
};

/// Checks sum_i E_i^dagger E_i = 1 within tolerance.
bool is_trace_preserving(const KrausSet& k, const Tolerances& tol = Tolerances::standard());

/// T_mu_nu = Tr(lambda_mu sum_i E_i lambda_nu E_i^dagger). Rejects
/// non-trace-preserving Kraus sets.
TransferMatrix transfer_from_kraus(const KrausSet& k, const HermitianBasis& basis,
                                   const Tolerances& tol = Tolerances::standard());

/// Splits off the affine pair; rejects transfer matrices whose first row
/// is not (1, 0, ..., 0) within tolerance.
AffineMap affine_from_transfer(const TransferMatrix& t,
                               const Tolerances& tol = Tolerances::standard());

TransferMatrix transfer_from_affine(const AffineMap& a);

/// Bloch action r -> M r + c. Performs no positivity check: feeding a
/// non-CP transfer matrix (an intermediate-map probe) simply yields the
/// affine image, which may leave the state space.
BlochState apply_channel(const TransferMatrix& t, const BlochState& s);

/// Transfer matrix of the composition: t1 applied after t2.
TransferMatrix compose(const TransferMatrix& t1, const TransferMatrix& t2);

/// C = (1/d) sum_{mu,nu} T_mu_nu lambda_mu (x) lambda_nu^T.
ChoiMatrix choi_from_transfer(const TransferMatrix& t, const HermitianBasis& basis);

/// True iff the non-unital part vanishes: |c|_inf <= tol.
bool is_unital(const AffineMap& a, double tol);

/// True iff the smallest Choi eigenvalue is >= -tol * max(1, ||C||_2).
bool is_cp(const ChoiMatrix& c, double tol);

/// Sum of absolute eigenvalues of a Hermitian matrix; rejects
/// non-Hermitian input.
double trace_norm(const Matrix& h, const Tolerances& tol = Tolerances::standard());

} // namespace qpdiag
