#pragma once

#include <cstdint>
#include <vector>

#include "fibpad/anyon_linalg.hpp"

namespace fibpad {

/// A set of encoding unitaries for a fixed shared state. Valid sets satisfy
/// the protocol's two conditions:
///   security:      U rho^A U+ = rho^A for every U (within tolerance),
///   orthogonality: |state_overlap(state, U_a, U_b)| <= tolerance for a != b.
struct MessageSet {
  std::vector<SectorOperator> unitaries;
  BipartiteDecomposition state;
  double tolerance = 1e-9;

  int size() const { return static_cast<int>(unitaries.size()); }
};

/// Message-count bounds for n copies of the two-anyon Bell state:
/// lower = F(n-1)^2 (explicit construction), upper = F(n-1)^2 + F(n)^2
/// (trivial-sector dimension of the doubled system).
struct CapacityBounds {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  int n = 0;
};

/// True iff max-entry |U rho U+ - rho| <= tol in every sector.
/// Throws std::invalid_argument on shape mismatch.
bool check_security(const SectorOperator& u, const AnyonicDensity& rho,
                    double tol = 1e-12);

/// Gram matrix of the encoded joint states: entry (a, b) =
/// state_overlap(ms.state, U_a, U_b). Diagonal is 1 for unitary encodings
/// on a normalized state.
Eigen::MatrixXcd gram_matrix(const MessageSet& ms);

/// The d^2 clock-and-shift products X^r Z^s (r, s in 0..d-1), with X the
/// cyclic shift and Z = diag(w^k), w = exp(2 pi i / d). Pairwise
/// trace-orthogonal. Ordered r-major.
std::vector<Eigen::MatrixXcd> sector_superdense_set(int d);

/// The explicit F(n-1)^2-message set on bell_power_state(n), n >= 2:
/// message k pairs element k of sector_superdense_set(F(n-1)) in the vacuum
/// sector with element k of sector_superdense_set(F(n)) in the tau sector.
MessageSet bell_message_set(int n);

/// (F(n-1)^2, F(n-1)^2 + F(n)^2) in exact integer arithmetic, n >= 1.
CapacityBounds bell_capacity_bounds(int n);

struct SearchOptions {
  int max_trials = 8;
  int attempts_per_extend = 24;
  double tol_orth = 1e-9;
  double tol_security = 1e-12;
  std::uint64_t seed = 1;
  int threads = 0;  // 0: FIBPAD_THREADS env var, else hardware concurrency
};

/// Best-effort numerical witness for the maximal message count on `state`.
/// Greedy growth from the identity with random restarts; each extension runs
/// a joint Levenberg-Marquardt refinement of the Gram off-diagonals over the
/// manifold of unitaries commuting with the reduced state (so security holds
/// by construction). Deterministic for fixed options: trial t uses seed
/// options.seed + t and ties are broken by lowest trial index. The returned
/// size never exceeds fusion_dim(2n, vacuum) and is a lower-bound witness.
MessageSet search_max_message_set(const BipartiteDecomposition& state,
                                  const SearchOptions& options = {});

/// Convenience overload: default options with the given trial budget and
/// orthogonality tolerance.
MessageSet search_max_message_set(const BipartiteDecomposition& state,
                                  int max_trials, double tol);

}  // namespace fibpad
