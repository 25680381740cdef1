#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "fibpad/anyon_model.hpp"

using namespace fibpad;

TEST_CASE("golden ratio constants") {
  CHECK(kDTau == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-15));
  CHECK(kDTau * kDTau == doctest::Approx(kDTau + 1.0).epsilon(1e-15));
  CHECK(kDTau == doctest::Approx(2.0 * std::cos(std::numbers::pi / 5.0)));
  CHECK(quantum_dimension(Charge::vacuum) == 1.0);
  CHECK(quantum_dimension(Charge::tau) == kDTau);
}

TEST_CASE("charge names round-trip") {
  CHECK(charge_name(Charge::vacuum) == "vacuum");
  CHECK(charge_name(Charge::tau) == "tau");
  CHECK(charge_from_name("vacuum") == Charge::vacuum);
  CHECK(charge_from_name("tau") == Charge::tau);
  CHECK_THROWS_AS((void)charge_from_name("sigma"), std::invalid_argument);
}

TEST_CASE("fusion rules") {
  CHECK(fuse(Charge::vacuum, Charge::vacuum) ==
        std::vector<Charge>{Charge::vacuum});
  CHECK(fuse(Charge::vacuum, Charge::tau) == std::vector<Charge>{Charge::tau});
  CHECK(fuse(Charge::tau, Charge::vacuum) == std::vector<Charge>{Charge::tau});
  CHECK(fuse(Charge::tau, Charge::tau) ==
        std::vector<Charge>{Charge::vacuum, Charge::tau});
}

TEST_CASE("F matrix is the golden-ratio involution") {
  auto c = model_constants();
  double d = c.d_tau;
  CHECK(c.f_matrix(0, 0) == doctest::Approx(1.0 / d).epsilon(1e-15));
  CHECK(c.f_matrix(0, 1) == doctest::Approx(1.0 / std::sqrt(d)).epsilon(1e-15));
  CHECK(c.f_matrix(1, 0) == doctest::Approx(1.0 / std::sqrt(d)).epsilon(1e-15));
  CHECK(c.f_matrix(1, 1) == doctest::Approx(-1.0 / d).epsilon(1e-15));
  Eigen::Matrix2d f2 = c.f_matrix * c.f_matrix;
  CHECK((f2 - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() < 1e-15);
  Eigen::Matrix2d ftf = c.f_matrix.transpose() * c.f_matrix;
  CHECK((ftf - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("R matrix phases") {
  auto c = model_constants();
  CHECK(std::abs(c.r_matrix(0, 0) -
                 std::polar(1.0, 4.0 * std::numbers::pi / 5.0)) < 1e-15);
  CHECK(std::abs(c.r_matrix(1, 1) +
                 std::polar(1.0, 2.0 * std::numbers::pi / 5.0)) < 1e-15);
  CHECK(std::abs(c.r_matrix(0, 1)) == 0.0);
  CHECK(std::abs(c.r_matrix(1, 0)) == 0.0);
  Eigen::Matrix2cd rr = c.r_matrix.adjoint() * c.r_matrix;
  CHECK((rr - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("fibonacci exact values and overflow guard") {
  CHECK(fibonacci(0) == 0);
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(2) == 1);
  CHECK(fibonacci(10) == 55);
  CHECK(fibonacci(30) == 832040);
  CHECK(fibonacci(92) == 7540113804746346429LL);
  CHECK_THROWS_AS((void)fibonacci(93), std::overflow_error);
  CHECK_THROWS_AS((void)fibonacci(-1), std::invalid_argument);
}

namespace {

// independent oracle: enumerate every intermediate-charge sequence and count
// the admissible ones ending at the requested total
std::int64_t count_paths_brute(int n, Charge total) {
  if (n == 1) return total == Charge::tau ? 1 : 0;
  std::int64_t count = 0;
  int steps = n - 1;
  for (int mask = 0; mask < (1 << steps); ++mask) {
    Charge current = Charge::tau;
    bool ok = true;
    for (int s = 0; s < steps && ok; ++s) {
      Charge next = (mask >> s) & 1 ? Charge::tau : Charge::vacuum;
      bool admissible = false;
      for (Charge c : fuse(current, Charge::tau)) {
        if (c == next) admissible = true;
      }
      ok = admissible;
      current = next;
    }
    if (ok && current == total) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("fusion_dim agrees with brute-force path counting") {
  for (int n = 1; n <= 14; ++n) {
    CHECK(fusion_dim(n, Charge::vacuum) == count_paths_brute(n, Charge::vacuum));
    CHECK(fusion_dim(n, Charge::tau) == count_paths_brute(n, Charge::tau));
  }
}

TEST_CASE("fusion_dim equals shifted Fibonacci numbers") {
  for (int n = 1; n <= 40; ++n) {
    CHECK(fusion_dim(n, Charge::vacuum) == fibonacci(n - 1));
    CHECK(fusion_dim(n, Charge::tau) == fibonacci(n));
  }
}

TEST_CASE("binet matches the recurrence and guards its range") {
  for (int n = 0; n <= 70; ++n) {
    CHECK(binet(n) == fibonacci(n));
  }
  CHECK_THROWS_AS((void)binet(71), std::overflow_error);
}
