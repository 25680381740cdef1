#include "fibpad/gp_simplex.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

namespace fibpad {

double QuaternionVector::norm() const {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
}

double QuaternionVector::dot(const QuaternionVector& other) const {
  return v[0] * other.v[0] + v[1] * other.v[1] + v[2] * other.v[2] +
         v[3] * other.v[3];
}

double required_inner_product(double p) {
  if (!(p >= 0.0 && p <= 0.5)) {
    throw std::domain_error(
        fmt::format("required inner product defined for p in [0, 1/2], got {}", p));
  }
  return -p / (1.0 - p);
}

int max_messages(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error(fmt::format("p must lie in [0, 1], got {}", p));
  }
  if (p == 0.2) return 5;
  if (p <= 0.25) return 4;
  if (p <= 1.0 / 3.0) return 3;
  if (p <= 0.5) return 2;
  return 1;
}

int max_messages(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0 || num > den) {
    throw std::domain_error(
        fmt::format("p = {}/{} must be a rational in [0, 1]", num, den));
  }
  if (5 * num == den) return 5;
  if (4 * num <= den) return 4;
  if (3 * num <= den) return 3;
  if (2 * num <= den) return 2;
  return 1;
}

namespace {

// n unit vectors in R^dim with all pairwise inner products c, assembled
// recursively: the first vector is e1, the rest share first coordinate c and
// continue with target c/(1+c) one dimension down. The last two vectors of
// each stage are an antipodal pair in the final coordinate.
std::vector<Eigen::VectorXd> simplex(int n, double c, int dim) {
  std::vector<Eigen::VectorXd> out;
  out.push_back(Eigen::VectorXd::Unit(dim, 0));
  if (n == 1) return out;
  double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  if (n == 2) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
    v[0] = c;
    if (dim > 1) v[1] = s;
    out.push_back(v);
    return out;
  }
  for (const auto& u : simplex(n - 1, c / (1.0 + c), dim - 1)) {
    Eigen::VectorXd v(dim);
    v[0] = c;
    v.tail(dim - 1) = s * u;
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<QuaternionVector> build_simplex_vectors(double p) {
  int n = max_messages(p);
  double c = n >= 2 ? required_inner_product(p) : 0.0;
  auto vs = simplex(n, c, 4);
  std::vector<QuaternionVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) {
    out.push_back(QuaternionVector{{v[0], v[1], v[2], v[3]}});
  }
  return out;
}

ReductionFrames reduction_frames(double p) {
  int n = max_messages(p);
  ReductionFrames frames;
  for (int stage = 0; stage < 4; ++stage) {
    double den = 1.0 - (stage + 1) * p;
    frames.stage_targets[stage] =
        den > 0.0 && n - stage >= 2 ? -p / den
                                    : std::numeric_limits<double>::quiet_NaN();
  }
  auto target = [&](int stage) { return frames.stage_targets[stage]; };
  if (n - 1 >= 1) {
    for (const auto& u : simplex(n - 1, n - 1 >= 2 ? target(1) : 0.0, 3)) {
      frames.w.push_back(u);
    }
  }
  if (n - 2 >= 1) {
    for (const auto& u : simplex(n - 2, n - 2 >= 2 ? target(2) : 0.0, 2)) {
      frames.x.push_back(u);
    }
  }
  if (n - 3 >= 1) {
    for (const auto& u : simplex(n - 3, n - 3 >= 2 ? target(3) : 0.0, 1)) {
      frames.y.push_back(u[0]);
    }
  }
  return frames;
}

MessageSet vectors_to_unitaries(const std::vector<QuaternionVector>& vs,
                                double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error(fmt::format("p must lie in [0, 1], got {}", p));
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (std::abs(vs[i].norm() - 1.0) > 1e-12) {
      throw std::invalid_argument(
          fmt::format("vector {} is not unit length (norm {:.15g})", i,
                      vs[i].norm()));
    }
  }
  if (vs.size() >= 2) {
    if (p > 0.5) {
      throw std::invalid_argument(
          "no two unit vectors satisfy the inner-product condition for p > 1/2");
    }
    double c = required_inner_product(p);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        double g = vs[i].dot(vs[j]);
        if (std::abs(g - c) > 1e-9) {
          throw std::invalid_argument(fmt::format(
              "vectors {} and {} have inner product {:.12g}, need {:.12g}", i,
              j, g, c));
        }
      }
    }
  }
  MessageSet ms;
  ms.state = gp_state(p);
  ms.tolerance = 1e-10;
  ms.unitaries.reserve(vs.size());
  for (const auto& q : vs) {
    const auto& [a, b, c2, d2] = q.v;
    SectorOperator op;
    op.n = 3;
    op.block(Charge::vacuum) = Eigen::MatrixXcd::Constant(1, 1, 1.0);
    Eigen::MatrixXcd tau(2, 2);
    tau << Complex(a, b), Complex(c2, d2), Complex(-c2, d2), Complex(a, -b);
    op.block(Charge::tau) = tau;
    ms.unitaries.push_back(std::move(op));
  }
  return ms;
}

bool gram_feasibility(int n, double c, int dim, double eps) {
  if (n < 1 || dim < 1) {
    throw std::invalid_argument("gram feasibility needs n >= 1 and dim >= 1");
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(n, n, c);
  m.diagonal().setConstant(1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  int rank = 0;
  for (double lam : es.eigenvalues()) {
    if (lam < -eps) return false;
    if (lam > eps) ++rank;
  }
  return rank <= dim;
}

}  // namespace fibpad
