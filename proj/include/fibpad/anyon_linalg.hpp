#pragma once

#include "fibpad/fusion_spaces.hpp"
#include "fibpad/sector_ops.hpp"

namespace fibpad {

enum class Side { A, B };

/// Sector-blocked anyonic density operator. Blocks are Hermitian PSD and the
/// state is normalized under the quantum trace: sum_a d_a tr(rho^a) = 1.
struct AnyonicDensity {
  int n = 0;
  std::array<Eigen::MatrixXcd, 2> blocks;

  Eigen::MatrixXcd& block(Charge a) { return blocks[static_cast<int>(a)]; }
  const Eigen::MatrixXcd& block(Charge a) const { return blocks[static_cast<int>(a)]; }

  SectorOperator as_sector_operator() const;

  /// Hermiticity / PSD / normalization residuals; throws std::invalid_argument
  /// when they exceed the stated tolerances (1e-10, 1e-10, 1e-12).
  void validate() const;
};

/// Quantum trace of the density, sum_a d_a tr(rho^a); 1 when normalized.
double quantum_trace(const AnyonicDensity& rho);

/// Reduced state of one side of a bipartite pure state. The 1/d_a weight
/// convention lives here and in the d_a weights of the quantum trace; all
/// modules share it. Side A: (1/d_a) C^a C^a+; side B: (1/d_a) (C^a+ C^a)^T.
AnyonicDensity reduced_density(const BipartiteDecomposition& state, Side side);

/// Anyonic von Neumann entropy in bits,
///   -sum_a d_a sum_k lambda_{a,k} log2 lambda_{a,k},
/// over the eigenvalues of each sector block, with 0 log 0 := 0. Eigenvalues
/// below 1e-14 are clamped to zero; an eigenvalue under -1e-10 throws.
double anyonic_entropy(const AnyonicDensity& rho);

/// S(rho^A) + S(rho^B) for a normalized pure state of trivial total charge
/// (whose joint entropy vanishes); equals twice the one-sided entropy.
double mutual_information(const BipartiteDecomposition& state);

}  // namespace fibpad
