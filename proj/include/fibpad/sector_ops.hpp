#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "fibpad/anyon_model.hpp"

namespace fibpad {

using Complex = std::complex<double>;

/// Block-diagonal operator over the total-charge sectors of n tau anyons.
/// Superselection forbids coherence between sectors, so an operator is the
/// direct sum M = M^1 (+) M^tau with block sizes fusion_dim(n, a).
struct SectorOperator {
  int n = 0;
  std::array<Eigen::MatrixXcd, 2> blocks;  // indexed by Charge

  Eigen::MatrixXcd& block(Charge a) { return blocks[static_cast<int>(a)]; }
  const Eigen::MatrixXcd& block(Charge a) const { return blocks[static_cast<int>(a)]; }

  static SectorOperator identity(int n);
  static SectorOperator zero(int n);

  /// Largest deviation of any block from unitarity, max-entry norm of U U^dag - I.
  double unitarity_residual() const;
  bool is_unitary(double tol = 1e-12) const { return unitarity_residual() <= tol; }

  /// Throws std::invalid_argument unless block shapes match fusion_dim(n, a).
  void check_shapes() const;
};

SectorOperator multiply(const SectorOperator& lhs, const SectorOperator& rhs);
SectorOperator adjoint(const SectorOperator& op);

/// Quantum trace Tr[M^1] + d_tau Tr[M^tau].
Complex quantum_trace(const SectorOperator& op);

/// The model constants together with the braid generators on three tau anyons.
/// b1 exchanges strands 1,2 and acts by the R phase of the first fusion
/// channel; b2 exchanges strands 2,3 and is the F-conjugate F^-1 R F. Both are
/// sector-blocked unitaries on the 1 (+) 2 dimensional space, basis ordered by
/// enumerate_basis (vacuum channel before tau).
struct ElementarySymbols {
  ModelConstants constants;
  SectorOperator b1;
  SectorOperator b2;
};

ElementarySymbols elementary_symbols();

}  // namespace fibpad
