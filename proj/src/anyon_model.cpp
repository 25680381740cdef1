#include "fibpad/anyon_model.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace fibpad {

const double kDTau = (1.0 + std::sqrt(5.0)) / 2.0;

std::string_view charge_name(Charge a) {
  return a == Charge::vacuum ? "vacuum" : "tau";
}

Charge charge_from_name(std::string_view name) {
  if (name == "vacuum" || name == "1") return Charge::vacuum;
  if (name == "tau" || name == "t") return Charge::tau;
  throw std::invalid_argument("unknown charge name: " + std::string(name));
}

double quantum_dimension(Charge a) {
  return a == Charge::vacuum ? 1.0 : kDTau;
}

std::vector<Charge> fuse(Charge a, Charge b) {
  if (a == Charge::vacuum && b == Charge::vacuum) return {Charge::vacuum};
  if (a == Charge::vacuum || b == Charge::vacuum) return {Charge::tau};
  return {Charge::vacuum, Charge::tau};  // tau x tau = 1 + tau
}

ModelConstants model_constants() {
  ModelConstants mc;
  mc.d_tau = kDTau;
  const double sd = std::sqrt(kDTau);
  mc.f_matrix << 1.0 / kDTau, 1.0 / sd, 1.0 / sd, -1.0 / kDTau;
  const std::complex<double> r1 = std::polar(1.0, 4.0 * M_PI / 5.0);
  const std::complex<double> rt = -std::polar(1.0, 2.0 * M_PI / 5.0);
  mc.r_matrix << r1, 0.0, 0.0, rt;
  return mc;
}

std::int64_t fibonacci(int n) {
  if (n < 0) throw std::invalid_argument("fibonacci: n must be >= 0");
  if (n > 92) throw std::overflow_error("fibonacci: F(n) exceeds int64 for n > 92");
  std::int64_t a = 0, b = 1;  // F(0), F(1)
  for (int i = 0; i < n; ++i) {
    std::int64_t next = a + b;
    a = b;
    b = next;
  }
  return a;
}

std::int64_t fusion_dim(int n, Charge total) {
  if (n < 0) throw std::invalid_argument("fusion_dim: n must be >= 0");
  if (n == 0) return total == Charge::vacuum ? 1 : 0;
  if (n > 91) throw std::overflow_error("fusion_dim: path count exceeds int64");
  // Walk the fusion ladder: after the first anyon the charge is tau; each
  // further tau maps (vacuum count v, tau count t) -> (t, v + t).
  std::int64_t v = 0, t = 1;
  for (int i = 1; i < n; ++i) {
    std::int64_t v_next = t;
    std::int64_t t_next = v + t;
    v = v_next;
    t = t_next;
  }
  return total == Charge::vacuum ? v : t;
}

std::int64_t binet(int n) {
  if (n < 0) throw std::invalid_argument("binet: n must be >= 0");
  if (n > 70) throw std::overflow_error("binet: floating evaluation not exact beyond n = 70");
  const double d = kDTau;
  const double value = (std::pow(d, n) - std::pow(-d, -n)) / (2.0 * d - 1.0);
  return static_cast<std::int64_t>(std::llround(value));
}

}  // namespace fibpad
