#include "fibpad/dqotp.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

#include "fibpad/parallel.hpp"

namespace fibpad {

bool check_security(const SectorOperator& u, const AnyonicDensity& rho,
                    double tol) {
  if (u.n != rho.n) {
    throw std::invalid_argument(
        fmt::format("security check: operator on {} anyons vs density on {}",
                    u.n, rho.n));
  }
  for (Charge a : kCharges) {
    const auto& ub = u.block(a);
    const auto& rb = rho.block(a);
    if (ub.rows() != rb.rows() || ub.cols() != rb.cols()) {
      throw std::invalid_argument("security check: sector shape mismatch");
    }
    if (ub.size() == 0) continue;
    double res = (ub * rb * ub.adjoint() - rb).cwiseAbs().maxCoeff();
    if (res > tol) return false;
  }
  return true;
}

Eigen::MatrixXcd gram_matrix(const MessageSet& ms) {
  int n = ms.size();
  Eigen::MatrixXcd g(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      g(a, b) = state_overlap(ms.state, ms.unitaries[a], ms.unitaries[b]);
    }
  }
  return g;
}

std::vector<Eigen::MatrixXcd> sector_superdense_set(int d) {
  if (d < 1) throw std::invalid_argument("superdense set needs dimension >= 1");
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(d, d);
  for (int j = 0; j < d; ++j) x((j + 1) % d, j) = 1.0;
  Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    z(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * k / d);
  }
  std::vector<Eigen::MatrixXcd> xp(d), zp(d);
  xp[0] = Eigen::MatrixXcd::Identity(d, d);
  zp[0] = Eigen::MatrixXcd::Identity(d, d);
  for (int k = 1; k < d; ++k) {
    xp[k] = x * xp[k - 1];
    zp[k] = z * zp[k - 1];
  }
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(static_cast<std::size_t>(d) * d);
  for (int r = 0; r < d; ++r) {
    for (int s = 0; s < d; ++s) out.push_back(xp[r] * zp[s]);
  }
  return out;
}

MessageSet bell_message_set(int n) {
  if (n < 2) throw std::invalid_argument("bell message set needs n >= 2");
  auto dv = fusion_dim(n, Charge::vacuum);
  auto dt = fusion_dim(n, Charge::tau);
  auto sv = sector_superdense_set(static_cast<int>(dv));
  auto st = sector_superdense_set(static_cast<int>(dt));
  MessageSet ms;
  ms.state = bell_power_state(n);
  ms.tolerance = 1e-9;
  ms.unitaries.reserve(sv.size());
  for (std::size_t k = 0; k < sv.size(); ++k) {
    SectorOperator op;
    op.n = n;
    op.block(Charge::vacuum) = sv[k];
    op.block(Charge::tau) = st[k];
    ms.unitaries.push_back(std::move(op));
  }
  return ms;
}

CapacityBounds bell_capacity_bounds(int n) {
  if (n < 1) throw std::invalid_argument("capacity bounds need n >= 1");
  if (n > 46) {
    throw std::overflow_error("capacity bounds exceed 64-bit range for n > 46");
  }
  CapacityBounds b;
  b.n = n;
  std::int64_t fv = fibonacci(n - 1);
  std::int64_t ft = fibonacci(n);
  b.lower = fv * fv;
  b.upper = fv * fv + ft * ft;
  return b;
}

namespace {

// Hermitian m x m matrix from m^2 packed reals: diagonal first, then
// (re, im) per strict upper-triangle entry in row-major order.
Eigen::MatrixXcd hermitian_from_params(const double* p, int m) {
  Eigen::MatrixXcd h(m, m);
  int off = m;
  for (int i = 0; i < m; ++i) h(i, i) = p[i];
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      Complex v(p[off], p[off + 1]);
      off += 2;
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

Eigen::MatrixXcd unitary_exp_i(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  Eigen::VectorXcd phases(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k) {
    phases[k] = std::polar(1.0, es.eigenvalues()[k]);
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

// Unitaries commuting with a density are block-unitaries per degenerate
// eigenspace of each sector block, conjugated back by the eigenbasis.
struct SecurityManifold {
  struct Sector {
    Eigen::MatrixXcd q;
    std::vector<int> clusters;
  };
  int n = 0;
  std::array<Sector, 2> sectors;
  int params_per_unitary = 0;

  static SecurityManifold build(const AnyonicDensity& rho) {
    SecurityManifold m;
    m.n = rho.n;
    for (Charge a : kCharges) {
      auto& sec = m.sectors[static_cast<int>(a)];
      const auto& block = rho.block(a);
      if (block.size() == 0) continue;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(block);
      sec.q = es.eigenvectors();
      const auto& ev = es.eigenvalues();
      int start = 0;
      for (Eigen::Index k = 1; k <= ev.size(); ++k) {
        if (k == ev.size() || ev[k] - ev[k - 1] > 1e-10) {
          sec.clusters.push_back(static_cast<int>(k) - start);
          start = static_cast<int>(k);
        }
      }
      for (int s : sec.clusters) m.params_per_unitary += s * s;
    }
    return m;
  }

  SectorOperator unitary(const double* theta) const {
    SectorOperator op;
    op.n = n;
    int off = 0;
    for (Charge a : kCharges) {
      const auto& sec = sectors[static_cast<int>(a)];
      if (sec.clusters.empty()) {
        op.block(a) = Eigen::MatrixXcd(0, 0);
        continue;
      }
      Eigen::Index dim = sec.q.rows();
      Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(dim, dim);
      int pos = 0;
      for (int s : sec.clusters) {
        b.block(pos, pos, s, s) =
            unitary_exp_i(hermitian_from_params(theta + off, s));
        off += s * s;
        pos += s;
      }
      op.block(a) = sec.q * b * sec.q.adjoint();
    }
    return op;
  }
};

using ResidualFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

struct LmOutcome {
  Eigen::VectorXd theta;
  double max_abs = 0.0;
};

double max_abs(const Eigen::VectorXd& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

// Levenberg-Marquardt on r(theta) -> 0 with a central-difference Jacobian.
LmOutcome levenberg_marquardt(const ResidualFn& f, Eigen::VectorXd theta,
                              double target, int max_iter) {
  const double h = 1e-6;
  Eigen::VectorXd r = f(theta);
  double cost = r.squaredNorm();
  double mu = 1e-3;
  for (int iter = 0; iter < max_iter && max_abs(r) > target; ++iter) {
    Eigen::MatrixXd jac(r.size(), theta.size());
    for (Eigen::Index j = 0; j < theta.size(); ++j) {
      Eigen::VectorXd tp = theta, tm = theta;
      tp[j] += h;
      tm[j] -= h;
      jac.col(j) = (f(tp) - f(tm)) / (2.0 * h);
    }
    Eigen::MatrixXd a = jac.transpose() * jac;
    Eigen::VectorXd g = jac.transpose() * r;
    Eigen::VectorXd damp = a.diagonal().cwiseMax(1e-12);
    bool improved = false;
    Eigen::VectorXd delta;
    while (mu < 1e12) {
      Eigen::MatrixXd asolve = a;
      asolve.diagonal() += mu * damp;
      delta = -asolve.ldlt().solve(g);
      Eigen::VectorXd theta_new = theta + delta;
      Eigen::VectorXd r_new = f(theta_new);
      double cost_new = r_new.squaredNorm();
      if (cost_new < cost) {
        theta = std::move(theta_new);
        r = std::move(r_new);
        cost = cost_new;
        mu = std::max(mu / 3.0, 1e-10);
        improved = true;
        break;
      }
      mu *= 4.0;
    }
    if (!improved || delta.norm() < 1e-13) break;
  }
  return {std::move(theta), max_abs(r)};
}

struct TrialResult {
  int size = 1;
  std::vector<Eigen::VectorXd> members;  // params of the non-identity messages
};

TrialResult run_search_trial(const BipartiteDecomposition& state,
                             const SecurityManifold& manifold,
                             const SearchOptions& options, int trial,
                             std::int64_t cap) {
  const int np = manifold.params_per_unitary;
  TrialResult result;
  if (np == 0) return result;
  std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(trial));
  std::uniform_real_distribution<double> unif(-std::numbers::pi,
                                              std::numbers::pi);

  SectorOperator identity = SectorOperator::identity(state.n_per_side);
  // Residuals: Re and Im of every off-diagonal Gram entry among the identity
  // plus the k unitaries encoded in theta.
  auto make_residual = [&](int k) {
    return [&, k](const Eigen::VectorXd& theta) {
      std::vector<SectorOperator> us;
      us.reserve(k + 1);
      us.push_back(identity);
      for (int i = 0; i < k; ++i) {
        us.push_back(manifold.unitary(theta.data() + i * np));
      }
      Eigen::VectorXd r(k * (k + 1));
      int idx = 0;
      for (int a = 0; a < static_cast<int>(us.size()); ++a) {
        for (int b = a + 1; b < static_cast<int>(us.size()); ++b) {
          Complex g = state_overlap(state, us[a], us[b]);
          r[idx++] = g.real();
          r[idx++] = g.imag();
        }
      }
      return r;
    };
  };

  while (result.size < cap) {
    int k = static_cast<int>(result.members.size()) + 1;
    bool extended = false;
    for (int attempt = 0; attempt < options.attempts_per_extend; ++attempt) {
      Eigen::VectorXd theta(k * np);
      for (int i = 0; i + 1 < k; ++i) {
        theta.segment(i * np, np) = result.members[i];
      }
      for (int j = 0; j < np; ++j) theta[(k - 1) * np + j] = unif(rng);
      LmOutcome out = levenberg_marquardt(make_residual(k), std::move(theta),
                                          options.tol_orth / 4.0, 160);
      // max component residual t gives |overlap| <= sqrt(2) t per pair
      if (out.max_abs * std::numbers::sqrt2 <= options.tol_orth) {
        result.members.clear();
        for (int i = 0; i < k; ++i) {
          result.members.push_back(out.theta.segment(i * np, np));
        }
        result.size = k + 1;
        extended = true;
        break;
      }
    }
    if (!extended) break;
  }
  return result;
}

}  // namespace

MessageSet search_max_message_set(const BipartiteDecomposition& state,
                                  const SearchOptions& options) {
  double norm = state.norm_squared();
  if (std::abs(norm - 1.0) > 1e-9) {
    throw std::invalid_argument(
        fmt::format("search needs a normalized state (norm^2 = {:.12g})", norm));
  }
  AnyonicDensity rho = reduced_density(state, Side::A);
  SecurityManifold manifold = SecurityManifold::build(rho);
  std::int64_t cap = fusion_dim(2 * state.n_per_side, Charge::vacuum);

  std::vector<TrialResult> trials(std::max(options.max_trials, 1));
  parallel_for(static_cast<int>(trials.size()), options.threads, [&](int t) {
    trials[t] = run_search_trial(state, manifold, options, t, cap);
  });

  int best = 0;
  for (int t = 1; t < static_cast<int>(trials.size()); ++t) {
    if (trials[t].size > trials[best].size) best = t;
  }

  MessageSet ms;
  ms.state = state;
  ms.tolerance = options.tol_orth;
  ms.unitaries.push_back(SectorOperator::identity(state.n_per_side));
  for (const auto& theta : trials[best].members) {
    ms.unitaries.push_back(manifold.unitary(theta.data()));
  }
  for (const auto& u : ms.unitaries) {
    if (!check_security(u, rho, options.tol_security)) {
      throw std::runtime_error("search produced a security-violating unitary");
    }
  }
  return ms;
}

MessageSet search_max_message_set(const BipartiteDecomposition& state,
                                  int max_trials, double tol) {
  SearchOptions options;
  options.max_trials = max_trials;
  options.tol_orth = tol;
  return search_max_message_set(state, options);
}

}  // namespace fibpad
