#include <cmath>
#include <random>

#include <doctest.h>

#include "fibpad/anyon_linalg.hpp"

using namespace fibpad;

namespace {

BipartiteDecomposition random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  BipartiteDecomposition s;
  s.n_per_side = n;
  double norm2 = 0.0;
  for (Charge a : kCharges) {
    auto d = fusion_dim(n, a);
    Eigen::MatrixXcd c(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        c(i, j) = Complex(gauss(rng), gauss(rng));
      }
    }
    s.block(a) = c;
    norm2 += (c.adjoint() * c).trace().real();
  }
  double scale = 1.0 / std::sqrt(norm2);
  for (Charge a : kCharges) s.block(a) *= scale;
  return s;
}

SectorOperator random_sector_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  SectorOperator op;
  op.n = n;
  for (Charge a : kCharges) {
    auto d = fusion_dim(n, a);
    Eigen::MatrixXcd g(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        g(i, j) = Complex(gauss(rng), gauss(rng));
      }
    }
    if (d == 0) {
      op.block(a) = g;
      continue;
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < d; ++j) {
      Complex rj = r(j, j);
      q.col(j) *= rj / std::abs(rj);
    }
    op.block(a) = q;
  }
  return op;
}

}  // namespace

TEST_CASE("reduced bell powers are maximally mixed under the quantum trace") {
  for (int n = 1; n <= 8; ++n) {
    auto rho = reduced_density(bell_power_state(n), Side::A);
    CHECK_NOTHROW(rho.validate());
    CHECK(quantum_trace(rho) == doctest::Approx(1.0).epsilon(1e-13));
    double w = std::pow(kDTau, -double(n));
    for (Charge a : kCharges) {
      const auto& m = rho.block(a);
      if (m.size() == 0) continue;
      Eigen::MatrixXcd expected =
          w * Eigen::MatrixXcd::Identity(m.rows(), m.cols());
      CHECK((m - expected).cwiseAbs().maxCoeff() < 1e-14);
    }
  }
}

TEST_CASE("random pure states reduce to unit-quantum-trace densities") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 10; ++rep) {
    auto state = random_state(3 + rep % 3, rng);
    for (Side side : {Side::A, Side::B}) {
      auto rho = reduced_density(state, side);
      CHECK_NOTHROW(rho.validate());
      CHECK(quantum_trace(rho) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("density validation rejects bad inputs") {
  AnyonicDensity bad;
  bad.n = 3;
  bad.block(Charge::vacuum) = Eigen::MatrixXcd::Identity(1, 1);
  bad.block(Charge::tau) = Eigen::MatrixXcd::Identity(2, 2);
  // quantum trace is 1 + 2 d, not 1
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  AnyonicDensity nonherm;
  nonherm.n = 3;
  nonherm.block(Charge::vacuum) = Eigen::MatrixXcd::Zero(1, 1);
  Eigen::MatrixXcd t(2, 2);
  t << 0.2, Complex(0.1, 0.05), 0.0, 0.2;
  nonherm.block(Charge::tau) = t;
  CHECK_THROWS_AS(nonherm.validate(), std::invalid_argument);
}

TEST_CASE("anyonic entropy of the single Bell pair is 2 log2 d") {
  auto state = bell_power_state(1);
  double sa = anyonic_entropy(reduced_density(state, Side::A));
  CHECK(sa == doctest::Approx(std::log2(kDTau)).epsilon(1e-12));
  CHECK(mutual_information(state) ==
        doctest::Approx(2.0 * std::log2(kDTau)).epsilon(1e-12));
}

TEST_CASE("gp entropies match the closed form") {
  // S = -p log2 p - (1-p) log2((1-p)/(2d)): one vacuum eigenvalue p and two
  // tau eigenvalues (1-p)/(2d) entering with weight d each
  for (double p : {0.0, 0.05, 0.2, 0.25, 0.4, 0.7, 1.0}) {
    double expected = 0.0;
    if (p > 0.0) expected -= p * std::log2(p);
    if (p < 1.0) {
      expected -= (1.0 - p) * std::log2((1.0 - p) / (2.0 * kDTau));
    }
    auto rho = reduced_density(gp_state(p), Side::A);
    CHECK(anyonic_entropy(rho) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("entropy is invariant under sector-unitary conjugation") {
  std::mt19937_64 rng(37);
  auto state = random_state(4, rng);
  auto rho = reduced_density(state, Side::A);
  double s0 = anyonic_entropy(rho);
  for (int rep = 0; rep < 5; ++rep) {
    auto u = random_sector_unitary(4, rng);
    AnyonicDensity conj;
    conj.n = rho.n;
    for (Charge a : kCharges) {
      conj.block(a) = u.block(a) * rho.block(a) * u.block(a).adjoint();
    }
    CHECK(anyonic_entropy(conj) == doctest::Approx(s0).epsilon(1e-10));
  }
}

TEST_CASE("mutual information is twice the one-sided entropy") {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 6; ++rep) {
    auto state = random_state(3, rng);
    double sa = anyonic_entropy(reduced_density(state, Side::A));
    double sb = anyonic_entropy(reduced_density(state, Side::B));
    CHECK(sa == doctest::Approx(sb).epsilon(1e-11));
    CHECK(mutual_information(state) == doctest::Approx(sa + sb).epsilon(1e-12));
  }
}

TEST_CASE("entropy rejects operators with negative eigenvalues") {
  AnyonicDensity rho;
  rho.n = 3;
  rho.block(Charge::vacuum) = -0.5 * Eigen::MatrixXcd::Identity(1, 1);
  rho.block(Charge::tau) = 0.75 * Eigen::MatrixXcd::Identity(2, 2);
  CHECK_THROWS_AS((void)anyonic_entropy(rho), std::invalid_argument);
}
