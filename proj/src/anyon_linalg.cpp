#include "fibpad/anyon_linalg.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace fibpad {

SectorOperator AnyonicDensity::as_sector_operator() const {
  SectorOperator op;
  op.n = n;
  op.blocks = blocks;
  return op;
}

void AnyonicDensity::validate() const {
  double herm = 0.0;
  for (Charge a : kCharges) {
    const auto& m = block(a);
    if (m.rows() != m.cols()) {
      throw std::invalid_argument("density block is not square");
    }
    if (m.size() > 0) {
      herm = std::max(herm, (m - m.adjoint()).cwiseAbs().maxCoeff());
    }
  }
  if (herm > 1e-10) {
    throw std::invalid_argument(
        fmt::format("density is not Hermitian (residual {:.3e})", herm));
  }
  for (Charge a : kCharges) {
    const auto& m = block(a);
    if (m.size() == 0) continue;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10) {
      throw std::invalid_argument(
          fmt::format("density block has negative eigenvalue {:.3e}",
                      es.eigenvalues().minCoeff()));
    }
  }
  double qt = quantum_trace(*this);
  if (std::abs(qt - 1.0) > 1e-12) {
    throw std::invalid_argument(
        fmt::format("density quantum trace is {:.15g}, expected 1", qt));
  }
}

double quantum_trace(const AnyonicDensity& rho) {
  double total = 0.0;
  for (Charge a : kCharges) {
    const auto& m = rho.block(a);
    if (m.size() == 0) continue;
    total += quantum_dimension(a) * m.trace().real();
  }
  return total;
}

AnyonicDensity reduced_density(const BipartiteDecomposition& state, Side side) {
  AnyonicDensity rho;
  rho.n = state.n_per_side;
  for (Charge a : kCharges) {
    const auto& c = state.block(a);
    double w = 1.0 / quantum_dimension(a);
    if (side == Side::A) {
      rho.block(a) = w * (c * c.adjoint());
    } else {
      rho.block(a) = w * (c.adjoint() * c).transpose();
    }
  }
  return rho;
}

double anyonic_entropy(const AnyonicDensity& rho) {
  double s = 0.0;
  for (Charge a : kCharges) {
    const auto& m = rho.block(a);
    if (m.size() == 0) continue;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    for (double lam : es.eigenvalues()) {
      if (lam < -1e-10) {
        throw std::invalid_argument(
            fmt::format("entropy of non-PSD operator (eigenvalue {:.3e})", lam));
      }
      if (lam < 1e-14) continue;
      s -= quantum_dimension(a) * lam * std::log2(lam);
    }
  }
  return s;
}

double mutual_information(const BipartiteDecomposition& state) {
  return anyonic_entropy(reduced_density(state, Side::A)) +
         anyonic_entropy(reduced_density(state, Side::B));
}

}  // namespace fibpad
