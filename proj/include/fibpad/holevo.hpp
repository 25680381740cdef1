#pragma once

#include <cstdint>
#include <vector>

#include "fibpad/gp_simplex.hpp"

namespace fibpad {

/// One row of the capacity sweep over p. Self-consistency:
/// holevo_chi = mutual_info_initial - mutual_info_final = log2(n_messages).
struct SweepRow {
  double p = 0.0;
  std::int64_t n_messages = 0;
  double mutual_info_initial = 0.0;
  double mutual_info_final = 0.0;
  double holevo_chi = 0.0;
};

/// Entropy in bits of the equiprobable mixture of the encoded joint states,
/// computed from the eigenvalues of gram_matrix(ms) / |ms| rather than
/// assumed. Warns on stderr when a Gram off-diagonal exceeds ms.tolerance.
double average_state_entropy(const BipartiteDecomposition& state,
                             const MessageSet& ms);

/// log2(max_messages(p)).
double holevo_chi(double p);

/// Sweep rows for the given p grid, ordered by p. threads <= 0 defers to
/// FIBPAD_THREADS / hardware concurrency.
std::vector<SweepRow> sweep(const std::vector<double>& grid, int threads = 0);

/// `points` uniform values on [0, 1] plus the exact breakpoints
/// {1/5, 1/4, 1/3, 1/2, 1/d_tau^3}, sorted and deduplicated.
std::vector<double> default_sweep_grid(int points);

}  // namespace fibpad
