#include "qpdiag/basis.hpp"

#include <cmath>

namespace qpdiag {

HermitianBasis::HermitianBasis(int dim) : dim_(dim) {
    if (dim < 2) throw DimensionError("HermitianBasis: dimension must be at least 2");
    const auto d = static_cast<Eigen::Index>(dim);
    ops_.reserve(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));

    ops_.push_back(Matrix::Identity(d, d) / std::sqrt(static_cast<double>(dim)));

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (Eigen::Index j = 0; j < d; ++j)
        for (Eigen::Index k = j + 1; k < d; ++k) {
            Matrix m = Matrix::Zero(d, d);
            m(j, k) = inv_sqrt2;
            m(k, j) = inv_sqrt2;
            ops_.push_back(std::move(m));
        }
    for (Eigen::Index j = 0; j < d; ++j)
        for (Eigen::Index k = j + 1; k < d; ++k) {
            Matrix m = Matrix::Zero(d, d);
            m(j, k) = Complex(0, -inv_sqrt2);
            m(k, j) = Complex(0, inv_sqrt2);
            ops_.push_back(std::move(m));
        }
    for (Eigen::Index l = 1; l < d; ++l) {
        Matrix m = Matrix::Zero(d, d);
        const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
        for (Eigen::Index j = 0; j < l; ++j) m(j, j) = norm;
        m(l, l) = -static_cast<double>(l) * norm;
        ops_.push_back(std::move(m));
    }
}

void HermitianBasis::accumulate_traceless(const RealVector& r, Matrix& out) const {
    if (r.size() != size() - 1)
        throw DimensionError("accumulate_traceless: coordinate length mismatch");
    for (Eigen::Index k = 0; k < r.size(); ++k)
        out.noalias() += r[k] * ops_[static_cast<std::size_t>(k) + 1];
}

ComplexVector expand(const Matrix& o, const HermitianBasis& basis) {
    if (o.rows() != basis.dim() || o.cols() != basis.dim())
        throw DimensionError("expand: operator dimension does not match basis");
    ComplexVector r(basis.size());
    for (int mu = 0; mu < basis.size(); ++mu)
        r[mu] = (basis.op(mu).adjoint() * o).trace();
    return r;
}

RealVector expand_real(const Matrix& o, const HermitianBasis& basis, const Tolerances& tol) {
    ComplexVector r = expand(o, basis);
    if (r.imag().cwiseAbs().maxCoeff() > tol.structural)
        throw NumericalError("expand_real: coordinates have non-negligible imaginary parts");
    return r.real();
}

Matrix reconstruct(const ComplexVector& r, const HermitianBasis& basis) {
    if (r.size() != basis.size())
        throw DimensionError("reconstruct: coordinate length does not match basis");
    Matrix out = Matrix::Zero(basis.dim(), basis.dim());
    for (Eigen::Index mu = 0; mu < r.size(); ++mu)
        out.noalias() += r[mu] * basis.op(static_cast<int>(mu));
    return out;
}

Matrix reconstruct(const RealVector& r, const HermitianBasis& basis) {
    ComplexVector c = r.cast<Complex>();
    return reconstruct(c, basis);
}

} // namespace qpdiag
