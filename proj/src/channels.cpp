#include "qpdiag/channels.hpp"

#include <cmath>
#include <sstream>

namespace qpdiag {

namespace {

void require_first_row_identity(const RealMatrix& t, double tol, const char* where) {
    const auto n = t.rows();
    RealVector e0 = RealVector::Zero(n);
    e0[0] = 1.0;
    if ((t.row(0).transpose() - e0).cwiseAbs().maxCoeff() > tol) {
        std::ostringstream msg;
        msg << where << ": first row deviates from (1, 0, ..., 0) beyond " << tol
            << " (map is not trace-preserving)";
        throw NotTracePreservingError(msg.str());
    }
}

} // namespace

bool is_trace_preserving(const KrausSet& k, const Tolerances& tol) {
    Matrix sum = Matrix::Zero(k.dim, k.dim);
    for (const auto& e : k.ops) sum.noalias() += e.adjoint() * e;
    return (sum - Matrix::Identity(k.dim, k.dim)).cwiseAbs().maxCoeff() <= tol.trace_preserving;
}

TransferMatrix transfer_from_kraus(const KrausSet& k, const HermitianBasis& basis,
                                   const Tolerances& tol) {
    if (k.dim != basis.dim())
        throw DimensionError("transfer_from_kraus: Kraus/basis dimension mismatch");
    for (const auto& e : k.ops)
        if (e.rows() != k.dim || e.cols() != k.dim)
            throw DimensionError("transfer_from_kraus: Kraus operator has wrong shape");
    if (!is_trace_preserving(k, tol))
        throw NotTracePreservingError("transfer_from_kraus: Kraus set is not trace-preserving");

    const int n = basis.size();
    RealMatrix t(n, n);
    for (int nu = 0; nu < n; ++nu) {
        Matrix image = Matrix::Zero(k.dim, k.dim);
        for (const auto& e : k.ops) image.noalias() += e * basis.op(nu) * e.adjoint();
        for (int mu = 0; mu < n; ++mu) {
            const Complex entry = (basis.op(mu) * image).trace();
            if (std::abs(entry.imag()) > tol.structural)
                throw NumericalError("transfer_from_kraus: transfer entry is not real");
            t(mu, nu) = entry.real();
        }
    }
    require_first_row_identity(t, tol.first_row, "transfer_from_kraus");
    return TransferMatrix{k.dim, std::move(t)};
}

AffineMap affine_from_transfer(const TransferMatrix& t, const Tolerances& tol) {
    require_first_row_identity(t.t, tol.first_row_loose, "affine_from_transfer");
    const auto n = t.t.rows() - 1;
    AffineMap a;
    a.dim = t.dim;
    a.m = t.t.bottomRightCorner(n, n);
    a.c = t.t.col(0).tail(n) / std::sqrt(static_cast<double>(t.dim));
    return a;
}

TransferMatrix transfer_from_affine(const AffineMap& a) {
    const auto n = a.m.rows();
    RealMatrix t = RealMatrix::Zero(n + 1, n + 1);
    t(0, 0) = 1.0;
    t.col(0).tail(n) = std::sqrt(static_cast<double>(a.dim)) * a.c;
    t.bottomRightCorner(n, n) = a.m;
    return TransferMatrix{a.dim, std::move(t)};
}

BlochState apply_channel(const TransferMatrix& t, const BlochState& s) {
    if (t.dim != s.dim)
        throw DimensionError("apply_channel: dimension mismatch");
    const auto n = t.t.rows() - 1;
    const double r0 = 1.0 / std::sqrt(static_cast<double>(t.dim));
    BlochState out{s.dim, RealVector(n)};
    out.r.noalias() = t.t.bottomRightCorner(n, n) * s.r;
    out.r.noalias() += t.t.col(0).tail(n) * r0;
    return out;
}

TransferMatrix compose(const TransferMatrix& t1, const TransferMatrix& t2) {
    if (t1.dim != t2.dim)
        throw DimensionError("compose: dimension mismatch");
    return TransferMatrix{t1.dim, t1.t * t2.t};
}

ChoiMatrix choi_from_transfer(const TransferMatrix& t, const HermitianBasis& basis) {
    if (t.dim != basis.dim())
        throw DimensionError("choi_from_transfer: dimension mismatch");
    const int n = basis.size();
    Matrix c = Matrix::Zero(n, n);
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu) {
            if (t.t(mu, nu) == 0.0) continue;
            c.noalias() +=
                (t.t(mu, nu) / t.dim) * numeric::kron(basis.op(mu), basis.op(nu).transpose());
        }
    return ChoiMatrix{t.dim, std::move(c)};
}

bool is_unital(const AffineMap& a, double tol) {
    return a.c.cwiseAbs().maxCoeff() <= tol;
}

bool is_cp(const ChoiMatrix& c, double tol) {
    const RealVector ev = numeric::eigvalsh(c.c);
    const double scale = std::max(1.0, std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff())));
    return ev.minCoeff() >= -tol * scale;
}

double trace_norm(const Matrix& h, const Tolerances& tol) {
    if (h.rows() != h.cols())
        throw DimensionError("trace_norm: matrix is not square");
    if (!numeric::is_hermitian(h, tol.structural * std::max(1.0, h.cwiseAbs().maxCoeff())))
        throw DomainError("trace_norm: input is not Hermitian");
    return numeric::abs_eigenvalue_sum(h);
}

} // namespace qpdiag
