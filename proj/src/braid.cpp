#include "fibpad/braid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace fibpad {

BraidLetter inverse_letter(BraidLetter l) {
  return static_cast<BraidLetter>(static_cast<int>(l) ^ 1);
}

BraidWord BraidWord::from_letters(std::vector<BraidLetter> ls) {
  BraidWord w;
  for (BraidLetter l : ls) {
    if (!w.letters.empty() && w.letters.back() == inverse_letter(l)) {
      w.letters.pop_back();
    } else {
      w.letters.push_back(l);
    }
  }
  return w;
}

namespace {

constexpr const char* kLetterNames[4] = {"g1", "g1^-1", "g2", "g2^-1"};

}  // namespace

std::string to_string(const BraidWord& w) {
  if (w.letters.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i > 0) out += ' ';
    out += kLetterNames[static_cast<int>(w.letters[i])];
  }
  return out;
}

BraidWord parse_braid_word(std::string_view text) {
  std::vector<BraidLetter> letters;
  std::size_t i = 0;
  auto is_sep = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',';
  };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    std::string_view tok = text.substr(i, j - i);
    i = j;
    if (tok == "e") continue;
    bool found = false;
    for (int k = 0; k < 4; ++k) {
      if (tok == kLetterNames[k]) {
        letters.push_back(static_cast<BraidLetter>(k));
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument(fmt::format(
          "unknown braid letter '{}' (expected g1, g2, g1^-1, g2^-1 or e)",
          std::string(tok)));
    }
  }
  return BraidWord::from_letters(std::move(letters));
}

SectorOperator evaluate_word(const BraidWord& w) {
  const auto& sym = elementary_symbols();
  const SectorOperator gens[4] = {sym.b1, adjoint(sym.b1), sym.b2,
                                  adjoint(sym.b2)};
  SectorOperator u = SectorOperator::identity(3);
  for (BraidLetter l : w.letters) {
    u = multiply(gens[static_cast<int>(l)], u);
  }
  return u;
}

double phase_distance(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix2cd m = a.adjoint() * b;
  Complex t = m(0, 0) + m(1, 1);
  // t^2 - 4 det, written as (m00 - m11)^2 + 4 m01 m10: for a (near-)unitary m
  // every term scales with the eigenvalue gap, so nearly coincident
  // eigenvalues lose no precision to cancellation
  Complex diff = m(0, 0) - m(1, 1);
  Complex disc = std::sqrt(diff * diff + 4.0 * m(0, 1) * m(1, 0));
  double th1 = std::arg(0.5 * (t + disc));
  double th2 = std::arg(0.5 * (t - disc));
  double gap = std::abs(th1 - th2);
  if (gap > std::numbers::pi) gap = 2.0 * std::numbers::pi - gap;
  return 2.0 * std::sin(gap / 4.0);
}

namespace {

// Letters packed two bits each, first letter in the low bits.
struct HalfEntry {
  Eigen::Matrix2cd m;
  std::uint32_t packed = 0;
  std::uint8_t len = 0;
  double vp_dist = 0.0;
};

std::vector<BraidLetter> unpack_word(std::uint32_t packed, int len) {
  std::vector<BraidLetter> out;
  out.reserve(len);
  for (int i = 0; i < len; ++i) {
    out.push_back(static_cast<BraidLetter>((packed >> (2 * i)) & 3u));
  }
  return out;
}

// Shorter first, then letters in enum order.
bool word_less(const BraidWord& a, const BraidWord& b) {
  if (a.letters.size() != b.letters.size()) {
    return a.letters.size() < b.letters.size();
  }
  return a.letters < b.letters;
}

// All free-reduced words of length <= max_len with their tau-sector matrices,
// first letter acting first.
std::vector<HalfEntry> enumerate_half_words(
    const std::array<Eigen::Matrix2cd, 4>& gens, int max_len) {
  std::vector<HalfEntry> out;
  HalfEntry root;
  root.m = Eigen::Matrix2cd::Identity();
  out.push_back(root);
  auto dfs = [&](auto&& self, const Eigen::Matrix2cd& m, std::uint32_t packed,
                 int len, int last) -> void {
    if (len == max_len) return;
    for (int l = 0; l < 4; ++l) {
      if (last >= 0 && (last ^ 1) == l) continue;
      HalfEntry e;
      e.m = gens[l] * m;
      e.packed = packed | (std::uint32_t(l) << (2 * len));
      e.len = static_cast<std::uint8_t>(len + 1);
      out.push_back(e);
      self(self, e.m, e.packed, len + 1, l);
    }
  };
  dfs(dfs, root.m, 0, 0, -1);
  return out;
}

}  // namespace

CompileResult compile_unitary(const Eigen::Matrix2cd& target, int max_len) {
  if (max_len < 0) throw std::invalid_argument("max_len must be >= 0");
  if (max_len > 24) {
    throw std::length_error(
        "compile guard: max_len > 24 exceeds the search budget");
  }
  double unit_res =
      (target.adjoint() * target - Eigen::Matrix2cd::Identity())
          .cwiseAbs()
          .maxCoeff();
  if (unit_res > 1e-10) {
    throw std::invalid_argument(fmt::format(
        "compile target is not unitary (residual {:.3e})", unit_res));
  }

  const auto& sym = elementary_symbols();
  const std::array<Eigen::Matrix2cd, 4> gens = {
      sym.b1.block(Charge::tau), sym.b1.block(Charge::tau).adjoint(),
      sym.b2.block(Charge::tau), sym.b2.block(Charge::tau).adjoint()};

  const int left_len = (max_len + 1) / 2;
  const int right_len = max_len / 2;
  const double tie_eps = 1e-12;
  const double prune_slack = 1e-9;

  std::vector<HalfEntry> table = enumerate_half_words(gens, left_len);
  const Eigen::Matrix2cd vp = Eigen::Matrix2cd::Identity();
  for (auto& e : table) e.vp_dist = phase_distance(e.m, vp);
  std::sort(table.begin(), table.end(),
            [](const HalfEntry& a, const HalfEntry& b) {
              return a.vp_dist < b.vp_dist;
            });

  CompileResult best;
  best.target = target;
  best.distance = std::numeric_limits<double>::infinity();

  auto offer = [&](double dist, const HalfEntry& a, const HalfEntry& b) {
    if (dist > best.distance + tie_eps) return;
    auto letters = unpack_word(a.packed, a.len);
    auto rhs = unpack_word(b.packed, b.len);
    letters.insert(letters.end(), rhs.begin(), rhs.end());
    BraidWord w = BraidWord::from_letters(std::move(letters));
    if (dist < best.distance - tie_eps ||
        (std::abs(dist - best.distance) <= tie_eps &&
         word_less(w, best.word))) {
      best.word = std::move(w);
      best.distance = dist;
    }
  };

  std::vector<HalfEntry> rights = enumerate_half_words(gens, right_len);
  for (const HalfEntry& b : rights) {
    Eigen::Matrix2cd q = b.m.adjoint() * target;
    double dq = phase_distance(q, vp);
    auto cmp = [](const HalfEntry& e, double v) { return e.vp_dist < v; };
    std::size_t pos =
        std::lower_bound(table.begin(), table.end(), dq, cmp) - table.begin();
    // walk outward from the closest vantage distance; the triangle
    // inequality bounds |vp_dist - dq| by the pair distance
    std::size_t lo = pos;
    std::size_t hi = pos;
    bool lo_open = pos > 0;
    bool hi_open = pos < table.size();
    while (lo_open || hi_open) {
      double bound = best.distance + prune_slack;
      bool take_lo;
      if (lo_open && hi_open) {
        take_lo = dq - table[lo - 1].vp_dist <= table[hi].vp_dist - dq;
      } else {
        take_lo = lo_open;
      }
      if (take_lo) {
        const HalfEntry& a = table[lo - 1];
        if (dq - a.vp_dist > bound) {
          lo_open = false;
        } else {
          offer(phase_distance(a.m, q), a, b);
          --lo;
          lo_open = lo > 0;
        }
      } else {
        const HalfEntry& a = table[hi];
        if (a.vp_dist - dq > bound) {
          hi_open = false;
        } else {
          offer(phase_distance(a.m, q), a, b);
          ++hi;
          hi_open = hi < table.size();
        }
      }
    }
  }
  return best;
}

}  // namespace fibpad
