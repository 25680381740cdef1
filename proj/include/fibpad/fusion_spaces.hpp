#pragma once

#include <vector>

#include <Eigen/Dense>

#include "fibpad/sector_ops.hpp"

namespace fibpad {

/// One fusion path of n tau anyons in the fixed left-to-right order:
/// intermediates[k] is the total charge after fusing anyon k+2, so the list
/// has length n-1 and ends at the path's total charge.
struct FusionPath {
  std::vector<Charge> intermediates;
  Charge total = Charge::tau;

  bool operator==(const FusionPath&) const = default;
};

/// All fusion paths of n >= 1 tau anyons with the given total charge, in
/// lexicographic order (vacuum < tau at every step). The result length equals
/// fusion_dim(n, total) and the ordering fixes every sector basis in the
/// library.
std::vector<FusionPath> enumerate_basis(int n, Charge total);

/// Sector-indexed coefficient matrices C^a of a bipartite pure state of
/// 2 * n_per_side tau anyons with trivial total charge:
///   |psi> = sum_a sum_{ij} C^a_{ij} |i; n taus; a>_A (x) |j; n taus; a>_B
/// with Alice's and Bob's bases mirror images of each other (same
/// enumeration), and all diagrammatic normalization folded into C^a so that
/// sum_a tr(C^a+ C^a) = 1.
struct BipartiteDecomposition {
  int n_per_side = 0;
  std::array<Eigen::MatrixXcd, 2> blocks;

  Eigen::MatrixXcd& block(Charge a) { return blocks[static_cast<int>(a)]; }
  const Eigen::MatrixXcd& block(Charge a) const { return blocks[static_cast<int>(a)]; }

  /// sum_a tr(C^a+ C^a); 1 for a normalized state.
  double norm_squared() const;
};

/// n-th tensor power of the anyonic Bell pair |tau,tau;1> in sector-Schmidt
/// form: C^1 = d^{-n/2} I_{F(n-1)}, C^tau = d^{-(n-1)/2} I_{F(n)} (the
/// attached unit-norm |tau,tau;1> pair ket is implicit).
BipartiteDecomposition bell_power_state(int n);

/// The one-parameter family of six-anyon trivial-charge states:
/// C^1 = [sqrt(p)], C^tau = sqrt((1-p)/2) I_2. Throws std::domain_error
/// outside p in [0,1]. Equals bell_power_state(3) at p = 1/d^3.
BipartiteDecomposition gp_state(double p);

/// Change a three-anyon state vector from the left-fused to the right-fused
/// basis: multiplies by F in the tau sector (length 2), identity in the
/// vacuum sector (length 1). Throws std::invalid_argument on a shape mismatch.
Eigen::VectorXcd apply_f_move_3(const Eigen::VectorXcd& vec, Charge total);

/// <psi| (U+ V (x) I) |psi> = sum_a tr(C^a+ U^a+ V^a C^a), the inner product
/// of two Alice-side encodings of the same key state.
Complex state_overlap(const BipartiteDecomposition& state, const SectorOperator& u,
                      const SectorOperator& v);

}  // namespace fibpad
