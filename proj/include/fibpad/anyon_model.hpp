#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace fibpad {

/// Topological charges of the Fibonacci model. The vacuum is the fusion identity.
enum class Charge : int { vacuum = 0, tau = 1 };

inline constexpr std::array<Charge, 2> kCharges{Charge::vacuum, Charge::tau};

std::string_view charge_name(Charge a);
Charge charge_from_name(std::string_view name);

/// Quantum dimension of tau, the golden ratio (1+sqrt(5))/2. Satisfies d^2 = d+1.
extern const double kDTau;

/// 1 for the vacuum, d_tau for tau.
double quantum_dimension(Charge a);

/// Admissible fusion outcomes of a x b, vacuum first.
std::vector<Charge> fuse(Charge a, Charge b);

/// Model constants in the basis ordered (vacuum channel, tau channel).
struct ModelConstants {
  double d_tau;
  Eigen::Matrix2d f_matrix;   // F^tau_{tau tau tau}; real, symmetric, involutive
  Eigen::Matrix2cd r_matrix;  // R_{tau tau} = diag(e^{i4pi/5}, -e^{i2pi/5})
};

ModelConstants model_constants();

/// Exact Fibonacci number by integer recurrence, F(0)=0, F(1)=1.
/// Throws std::overflow_error once the value leaves the int64 range (n > 92).
std::int64_t fibonacci(int n);

/// Number of fusion paths of n tau anyons (left-to-right order) with the given
/// total charge: F(n-1) for the vacuum, F(n) for tau. Counted by walking the
/// fusion steps, not by the closed form.
std::int64_t fusion_dim(int n, Charge total);

/// Binet's closed form (d^n - (-d)^{-n}) / (2d - 1), evaluated in floating
/// point and rounded. Guarded at n <= 70, where double rounding is still
/// provably exact; throws std::overflow_error beyond.
std::int64_t binet(int n);

}  // namespace fibpad
