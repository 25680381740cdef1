#include "fibpad/fusion_spaces.hpp"

#include <cmath>
#include <stdexcept>

namespace fibpad {

namespace {

void extend_paths(std::vector<FusionPath>& out, std::vector<Charge>& prefix, Charge current,
                  int remaining, Charge total) {
  if (remaining == 0) {
    if (current == total) out.push_back({prefix, total});
    return;
  }
  for (Charge next : fuse(current, Charge::tau)) {  // vacuum first: lex order
    prefix.push_back(next);
    extend_paths(out, prefix, next, remaining - 1, total);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<FusionPath> enumerate_basis(int n, Charge total) {
  if (n < 1) throw std::invalid_argument("enumerate_basis: n must be >= 1");
  std::vector<FusionPath> out;
  std::vector<Charge> prefix;
  extend_paths(out, prefix, Charge::tau, n - 1, total);
  return out;
}

double BipartiteDecomposition::norm_squared() const {
  double total = 0.0;
  for (Charge a : kCharges) total += (block(a).adjoint() * block(a)).trace().real();
  return total;
}

BipartiteDecomposition bell_power_state(int n) {
  if (n < 1) throw std::invalid_argument("bell_power_state: n must be >= 1");
  BipartiteDecomposition state;
  state.n_per_side = n;
  const auto dim_vac = fusion_dim(n, Charge::vacuum);
  const auto dim_tau = fusion_dim(n, Charge::tau);
  state.block(Charge::vacuum) =
      std::pow(kDTau, -0.5 * n) * Eigen::MatrixXcd::Identity(dim_vac, dim_vac);
  state.block(Charge::tau) =
      std::pow(kDTau, -0.5 * (n - 1)) * Eigen::MatrixXcd::Identity(dim_tau, dim_tau);
  return state;
}

BipartiteDecomposition gp_state(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("gp_state: p must lie in [0, 1]");
  BipartiteDecomposition state;
  state.n_per_side = 3;
  state.block(Charge::vacuum) = Eigen::MatrixXcd::Constant(1, 1, std::sqrt(p));
  state.block(Charge::tau) =
      std::sqrt((1.0 - p) / 2.0) * Eigen::MatrixXcd::Identity(2, 2);
  return state;
}

Eigen::VectorXcd apply_f_move_3(const Eigen::VectorXcd& vec, Charge total) {
  if (vec.size() != fusion_dim(3, total)) {
    throw std::invalid_argument("apply_f_move_3: vector length does not match the sector");
  }
  if (total == Charge::vacuum) return vec;
  return model_constants().f_matrix.cast<Complex>() * vec;
}

Complex state_overlap(const BipartiteDecomposition& state, const SectorOperator& u,
                      const SectorOperator& v) {
  if (u.n != state.n_per_side || v.n != state.n_per_side) {
    throw std::invalid_argument("state_overlap: operator anyon count does not match the state");
  }
  Complex total = 0.0;
  for (Charge a : kCharges) {
    const auto& c = state.block(a);
    if (u.block(a).rows() != c.rows() || v.block(a).rows() != c.rows()) {
      throw std::invalid_argument("state_overlap: sector block shape mismatch");
    }
    if (c.rows() == 0) continue;
    total += (c.adjoint() * u.block(a).adjoint() * v.block(a) * c).trace();
  }
  return total;
}

}  // namespace fibpad
