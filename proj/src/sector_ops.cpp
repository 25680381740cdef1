#include "fibpad/sector_ops.hpp"

#include <stdexcept>

namespace fibpad {

SectorOperator SectorOperator::identity(int n) {
  SectorOperator op;
  op.n = n;
  for (Charge a : kCharges) {
    const auto d = fusion_dim(n, a);
    op.block(a) = Eigen::MatrixXcd::Identity(d, d);
  }
  return op;
}

SectorOperator SectorOperator::zero(int n) {
  SectorOperator op;
  op.n = n;
  for (Charge a : kCharges) {
    const auto d = fusion_dim(n, a);
    op.block(a) = Eigen::MatrixXcd::Zero(d, d);
  }
  return op;
}

double SectorOperator::unitarity_residual() const {
  double residual = 0.0;
  for (Charge a : kCharges) {
    const auto& m = block(a);
    if (m.rows() == 0) continue;
    Eigen::MatrixXcd delta = m * m.adjoint() - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    residual = std::max(residual, delta.cwiseAbs().maxCoeff());
  }
  return residual;
}

void SectorOperator::check_shapes() const {
  for (Charge a : kCharges) {
    const auto d = fusion_dim(n, a);
    if (block(a).rows() != d || block(a).cols() != d) {
      throw std::invalid_argument("SectorOperator: block shape does not match fusion_dim");
    }
  }
}

SectorOperator multiply(const SectorOperator& lhs, const SectorOperator& rhs) {
  if (lhs.n != rhs.n) throw std::invalid_argument("sector operator product: anyon counts differ");
  SectorOperator out;
  out.n = lhs.n;
  for (Charge a : kCharges) out.block(a) = lhs.block(a) * rhs.block(a);
  return out;
}

SectorOperator adjoint(const SectorOperator& op) {
  SectorOperator out;
  out.n = op.n;
  for (Charge a : kCharges) out.block(a) = op.block(a).adjoint();
  return out;
}

Complex quantum_trace(const SectorOperator& op) {
  return op.block(Charge::vacuum).trace() + kDTau * op.block(Charge::tau).trace();
}

ElementarySymbols elementary_symbols() {
  ElementarySymbols sym;
  sym.constants = model_constants();
  const auto& r = sym.constants.r_matrix;
  const Eigen::Matrix2d& f = sym.constants.f_matrix;

  // Total charge vacuum: the single path fuses the first pair through the tau
  // channel, so both generators reduce to the R_tautau phase of that channel.
  sym.b1.n = 3;
  sym.b1.block(Charge::vacuum) = Eigen::MatrixXcd::Constant(1, 1, r(1, 1));
  sym.b1.block(Charge::tau) = r;

  sym.b2.n = 3;
  sym.b2.block(Charge::vacuum) = Eigen::MatrixXcd::Constant(1, 1, r(1, 1));
  // F is involutive, so F^-1 R F = F R F.
  sym.b2.block(Charge::tau) = f.cast<Complex>() * r * f.cast<Complex>();
  return sym;
}

}  // namespace fibpad
