#include "fibpad/holevo.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "fibpad/parallel.hpp"

namespace fibpad {

double average_state_entropy(const BipartiteDecomposition& state,
                             const MessageSet& ms) {
  if (ms.size() == 0) {
    throw std::invalid_argument("average state entropy of an empty set");
  }
  MessageSet on_state = ms;
  on_state.state = state;
  Eigen::MatrixXcd g = gram_matrix(on_state);
  double offdiag = 0.0;
  for (Eigen::Index a = 0; a < g.rows(); ++a) {
    for (Eigen::Index b = 0; b < g.cols(); ++b) {
      if (a != b) offdiag = std::max(offdiag, std::abs(g(a, b)));
    }
  }
  if (offdiag > ms.tolerance) {
    fmt::print(stderr,
               "warning: Gram off-diagonal {:.3e} exceeds tolerance {:.3e}; "
               "states are not mutually orthogonal\n",
               offdiag, ms.tolerance);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g / double(ms.size()),
                                                     Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (double lam : es.eigenvalues()) {
    if (lam < -1e-10) {
      throw std::runtime_error(
          fmt::format("Gram mixture has negative eigenvalue {:.3e}", lam));
    }
    if (lam < 1e-14) continue;
    s -= lam * std::log2(lam);
  }
  return s;
}

double holevo_chi(double p) { return std::log2(double(max_messages(p))); }

std::vector<SweepRow> sweep(const std::vector<double>& grid, int threads) {
  std::vector<SweepRow> rows(grid.size());
  parallel_for(static_cast<int>(grid.size()), threads, [&](int i) {
    double p = grid[i];
    SweepRow& row = rows[i];
    row.p = p;
    row.n_messages = max_messages(p);
    row.mutual_info_initial = mutual_information(gp_state(p));
    row.holevo_chi = std::log2(double(row.n_messages));
    row.mutual_info_final = row.mutual_info_initial - row.holevo_chi;
  });
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SweepRow& a, const SweepRow& b) { return a.p < b.p; });
  return rows;
}

std::vector<double> default_sweep_grid(int points) {
  if (points < 2) throw std::invalid_argument("sweep grid needs >= 2 points");
  std::vector<double> grid;
  grid.reserve(points + 5);
  for (int k = 0; k < points; ++k) {
    grid.push_back(double(k) / double(points - 1));
  }
  for (double b : {0.2, 0.25, 1.0 / 3.0, 0.5, 1.0 / (kDTau * kDTau * kDTau)}) {
    grid.push_back(b);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace fibpad
