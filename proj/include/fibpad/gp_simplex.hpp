#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fibpad/dqotp.hpp"

namespace fibpad {

/// Unit vector (a, b, c, d) in R^4 parameterizing a special-unitary tau-sector
/// block [[a+ib, c+id], [-c+id, a-ib]].
struct QuaternionVector {
  std::array<double, 4> v{};

  double norm() const;
  double dot(const QuaternionVector& other) const;
};

/// The frames of the recursive dimensional reduction used to build the
/// simplex: the residual unit vectors after splitting off one shared
/// coordinate per stage (4d -> 3d -> 2d -> 1d), with the pairwise
/// inner-product target at each stage. Targets are -p/(1-p), -p/(1-2p),
/// -p/(1-3p), -p/(1-4p); NaN where the denominator vanishes or the stage
/// is empty.
struct ReductionFrames {
  std::vector<Eigen::Vector3d> w;
  std::vector<Eigen::Vector2d> x;
  std::vector<double> y;
  std::array<double, 4> stage_targets{};
};

/// Pairwise inner product -p/(1-p) that encodings of distinct messages must
/// realize. Domain [0, 1/2]; above 1/2 no second vector exists and the
/// function throws std::domain_error.
double required_inner_product(double p);

/// Maximal message count on gp_state(p): 5 at p = 1/5, 4 on [0,1/5) and
/// (1/5,1/4], 3 on (1/4,1/3], 2 on (1/3,1/2], 1 on (1/2,1]. Floating-point
/// inputs are classified by interval membership with no snapping; use the
/// rational overload for exact breakpoints. Throws std::domain_error
/// outside [0,1].
int max_messages(double p);

/// Exact-rational step function for p = num/den (den > 0, 0 <= p <= 1).
int max_messages(std::int64_t num, std::int64_t den);

/// max_messages(p) unit vectors with all pairwise inner products -p/(1-p),
/// built by the recursive reduction. First vector (1,0,0,0); each stage's new
/// coordinate is nonnegative except in the final antipodal vector.
std::vector<QuaternionVector> build_simplex_vectors(double p);

/// The reduction frames behind build_simplex_vectors(p).
ReductionFrames reduction_frames(double p);

/// Maps quaternion vectors to sector unitaries on three anyons (vacuum entry
/// 1) and packages them as a MessageSet over gp_state(p). Throws
/// std::invalid_argument if the vectors are not unit length or their Gram
/// is inconsistent with p.
MessageSet vectors_to_unitaries(const std::vector<QuaternionVector>& vs,
                                double p);

/// Independent feasibility oracle: true iff n unit vectors with all pairwise
/// inner products c exist in the given dimension, i.e. (1-c) I + c J is PSD
/// with rank <= dim. Eigenvalues within eps of zero count as zero.
bool gram_feasibility(int n, double c, int dim, double eps = 1e-9);

}  // namespace fibpad
