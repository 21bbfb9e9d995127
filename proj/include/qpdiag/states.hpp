// Density operators and their Bloch-vector coordinates.
#pragma once

#include <random>

#include "qpdiag/basis.hpp"
#include "qpdiag/numeric.hpp"
#include "qpdiag/types.hpp"

namespace qpdiag {

/// Density operator as a generalized Bloch vector: the lambda_0 coordinate
/// is pinned to 1/sqrt(d) by normalization and not stored. Factories
/// validate positivity; the struct itself is a plain value.
struct BlochState {
    int dim = 0;
    RealVector r; // length d^2 - 1
};

BlochState maximally_mixed(int dim);

/// Bloch coordinates of a density matrix. Rejects non-Hermitian input,
/// trace away from 1 beyond tolerance, or eigenvalues below the PSD slack.
BlochState bloch_from_density(const Matrix& rho, const HermitianBasis& basis,
                              const Tolerances& tol = Tolerances::standard());

/// 1/d + r . lambda; throws NotAStateError if the result is not PSD
/// within tolerance.
Matrix density_from_bloch(const BlochState& s, const HermitianBasis& basis,
                          const Tolerances& tol = Tolerances::standard());

/// Tr(rho^2).
double purity(const Matrix& rho);

/// Coordinate form of the same quantity: 1/d + |r|^2.
double purity(const BlochState& s);

bool is_valid_state(const Matrix& rho, const Tolerances& tol = Tolerances::standard());

/// Full-rank random density matrix: complex Ginibre G, then G G^dagger
/// normalized to unit trace.
Matrix random_density(int dim, std::mt19937_64& rng);

/// Projector onto a Haar-like random unit vector (normalized complex
/// Gaussian entries).
Matrix random_pure(int dim, std::mt19937_64& rng);

} // namespace qpdiag
