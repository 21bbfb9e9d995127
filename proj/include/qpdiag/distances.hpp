// Monotone distances and fidelity between density operators. All matrix
// functions route through the Hermitian eigendecomposition kernel with
// eigenvalue clamping.
#pragma once

#include "qpdiag/numeric.hpp"
#include "qpdiag/types.hpp"

namespace qpdiag {

/// (1/2) sum |eig(rho1 - rho2)|.
double trace_distance(const Matrix& rho1, const Matrix& rho2,
                      const Tolerances& tol = Tolerances::standard());

/// Uhlmann fidelity Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)). Values within
/// fidelity_resolution of 1 are reported as exactly 1: below that the
/// 1-F cancellation is eigensolver noise, and downstream square roots
/// would amplify it.
double fidelity(const Matrix& rho1, const Matrix& rho2,
                const Tolerances& tol = Tolerances::standard());

/// sqrt(2 (1 - F)).
double bures_distance(const Matrix& rho1, const Matrix& rho2,
                      const Tolerances& tol = Tolerances::standard());

/// Tr[rho1 (ln rho1 - ln rho2)] in nats, with 0 ln 0 = 0. Returns +inf
/// when supp(rho1) is not within supp(rho2): eigenvalues of rho2 below
/// support_eigenvalue carrying rho1-overlap above support_overlap.
double relative_entropy(const Matrix& rho1, const Matrix& rho2,
                        const Tolerances& tol = Tolerances::standard());

/// S(rho1 || rho2) + S(rho2 || rho1); infinite if either side is.
double symmetric_relative_entropy(const Matrix& rho1, const Matrix& rho2,
                                  const Tolerances& tol = Tolerances::standard());

/// Affinity form sqrt(2 (1 - Tr(sqrt(rho1) sqrt(rho2)))).
double hellinger_distance(const Matrix& rho1, const Matrix& rho2,
                          const Tolerances& tol = Tolerances::standard());

} // namespace qpdiag
