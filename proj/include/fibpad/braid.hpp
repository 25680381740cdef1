#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fibpad/sector_ops.hpp"

namespace fibpad {

enum class BraidLetter : int { g1 = 0, g1_inv = 1, g2 = 2, g2_inv = 3 };

BraidLetter inverse_letter(BraidLetter l);

/// Word over the two braid generators of three anyons, stored free-reduced
/// (no adjacent letter-inverse pairs).
struct BraidWord {
  std::vector<BraidLetter> letters;

  /// Builds a word, cancelling adjacent inverse pairs.
  static BraidWord from_letters(std::vector<BraidLetter> ls);

  int length() const { return static_cast<int>(letters.size()); }
  bool operator==(const BraidWord&) const = default;
};

/// "g1 g2^-1 ..." with single spaces; the empty word renders as "e".
std::string to_string(const BraidWord& w);

/// Parses whitespace- or comma-separated tokens g1, g2, g1^-1, g2^-1; "e" or
/// the empty string is the identity. Throws std::invalid_argument on unknown
/// tokens. The result is free-reduced.
BraidWord parse_braid_word(std::string_view text);

/// Product of the generator matrices with the first letter acting first:
/// evaluate(l1 .. lk) = M(lk) ... M(l1). Empty word gives the identity.
SectorOperator evaluate_word(const BraidWord& w);

/// min over a global phase of the operator-norm difference of two 2x2
/// unitaries; ranges over [0, sqrt(2)] and vanishes iff they agree up to
/// phase.
double phase_distance(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b);

struct CompileResult {
  BraidWord word;
  double distance = 0.0;
  Eigen::Matrix2cd target;
};

/// Best word of length <= max_len whose tau-sector block approximates the
/// target under phase_distance (the vacuum phase is unconstrained).
/// Meet-in-the-middle over half words; exact: agrees with exhaustive
/// enumeration, with ties (within 1e-12) broken by shorter length then
/// lexicographic letters. Throws std::invalid_argument for a non-unitary
/// target and std::length_error for max_len > 24.
CompileResult compile_unitary(const Eigen::Matrix2cd& target, int max_len);

}  // namespace fibpad
