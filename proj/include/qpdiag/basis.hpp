// Complete orthonormal Hermitian operator basis used by every coordinate
// representation in the library.
//
// Fixed ordering, so transfer matrices are reproducible across runs:
//   index 0                              identity / sqrt(d)
//   1 .. d(d-1)/2                        symmetric off-diagonal pairs (j<k),
//                                        (|j><k| + |k><j|) / sqrt(2)
//   .. d(d-1)                            antisymmetric pairs (j<k),
//                                        -i (|j><k| - |k><j|) / sqrt(2)
//   .. d^2-1                             diagonal, l = 1..d-1,
//                                        (sum_{j<l} |j><j| - l |l><l|) / sqrt(l(l+1))
// Pairs are ordered lexicographically. For d=2 this is {1, sx, sy, sz}/sqrt(2).
#pragma once

#include <vector>

#include "qpdiag/numeric.hpp"
#include "qpdiag/types.hpp"

namespace qpdiag {

class HermitianBasis {
public:
    explicit HermitianBasis(int dim);

    int dim() const { return dim_; }
    int size() const { return dim_ * dim_; }
    const Matrix& op(int mu) const { return ops_[static_cast<std::size_t>(mu)]; }
    const std::vector<Matrix>& ops() const { return ops_; }

    /// Sum of r[k] * op(k+1) over the traceless elements; `out` must be d x d.
    void accumulate_traceless(const RealVector& r, Matrix& out) const;

private:
    int dim_;
    std::vector<Matrix> ops_;
};

/// Coordinates r_mu = Tr(lambda_mu^dagger O) of an arbitrary operator.
ComplexVector expand(const Matrix& o, const HermitianBasis& basis);

/// Coordinates of a Hermitian operator; throws NumericalError if any
/// imaginary part exceeds the structural tolerance.
RealVector expand_real(const Matrix& o, const HermitianBasis& basis,
                       const Tolerances& tol = Tolerances::standard());

Matrix reconstruct(const ComplexVector& r, const HermitianBasis& basis);
Matrix reconstruct(const RealVector& r, const HermitianBasis& basis);

} // namespace qpdiag
