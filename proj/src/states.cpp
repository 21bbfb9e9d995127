#include "qpdiag/states.hpp"

#include <cmath>
#include <sstream>

namespace qpdiag {

BlochState maximally_mixed(int dim) {
    if (dim < 2) throw DimensionError("maximally_mixed: dimension must be at least 2");
    return BlochState{dim, RealVector::Zero(dim * dim - 1)};
}

BlochState bloch_from_density(const Matrix& rho, const HermitianBasis& basis,
                              const Tolerances& tol) {
    if (rho.rows() != basis.dim() || rho.cols() != basis.dim())
        throw DimensionError("bloch_from_density: dimension mismatch");
    if (!numeric::is_hermitian(rho, tol.structural * std::max(1.0, rho.cwiseAbs().maxCoeff())))
        throw NotAStateError("bloch_from_density: matrix is not Hermitian");
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > tol.trace_one) {
        std::ostringstream msg;
        msg << "bloch_from_density: trace " << tr << " is not 1";
        throw NotAStateError(msg.str());
    }
    const double min_eig = numeric::eigvalsh(rho).minCoeff();
    if (min_eig < -tol.psd_slack) {
        std::ostringstream msg;
        msg << "bloch_from_density: eigenvalue " << min_eig << " below PSD tolerance";
        throw NotAStateError(msg.str());
    }
    RealVector r(basis.size() - 1);
    for (int mu = 1; mu < basis.size(); ++mu)
        r[mu - 1] = (basis.op(mu) * rho).trace().real();
    return BlochState{basis.dim(), std::move(r)};
}

Matrix density_from_bloch(const BlochState& s, const HermitianBasis& basis,
                          const Tolerances& tol) {
    if (s.dim != basis.dim())
        throw DimensionError("density_from_bloch: dimension mismatch");
    Matrix rho = Matrix::Identity(s.dim, s.dim) / static_cast<double>(s.dim);
    basis.accumulate_traceless(s.r, rho);
    const double min_eig = numeric::eigvalsh(rho).minCoeff();
    if (min_eig < -tol.psd_slack) {
        std::ostringstream msg;
        msg << "density_from_bloch: eigenvalue " << min_eig
            << " below PSD tolerance (Bloch vector outside the state space)";
        throw NotAStateError(msg.str());
    }
    return rho;
}

double purity(const Matrix& rho) {
    return (rho * rho).trace().real();
}

double purity(const BlochState& s) {
    return 1.0 / s.dim + s.r.squaredNorm();
}

bool is_valid_state(const Matrix& rho, const Tolerances& tol) {
    if (rho.rows() != rho.cols()) return false;
    if (!numeric::is_hermitian(rho, tol.structural * std::max(1.0, rho.cwiseAbs().maxCoeff())))
        return false;
    if (std::abs(rho.trace().real() - 1.0) > tol.trace_one) return false;
    return numeric::eigvalsh(rho).minCoeff() >= -tol.psd_slack;
}

Matrix random_density(int dim, std::mt19937_64& rng) {
    if (dim < 2) throw DimensionError("random_density: dimension must be at least 2");
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g(dim, dim);
    for (Eigen::Index i = 0; i < g.rows(); ++i)
        for (Eigen::Index j = 0; j < g.cols(); ++j)
            g(i, j) = Complex(gauss(rng), gauss(rng));
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return rho;
}

Matrix random_pure(int dim, std::mt19937_64& rng) {
    if (dim < 2) throw DimensionError("random_pure: dimension must be at least 2");
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexVector psi(dim);
    for (Eigen::Index i = 0; i < psi.size(); ++i)
        psi[i] = Complex(gauss(rng), gauss(rng));
    psi.normalize();
    return psi * psi.adjoint();
}

} // namespace qpdiag
