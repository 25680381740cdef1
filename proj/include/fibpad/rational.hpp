#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fibpad {

/// A probability flag value. "num/den" strings keep their exact rational form
/// (reduced, den > 0) so breakpoint comparisons can be exact; plain decimal
/// strings carry only the parsed double.
struct ProbabilityValue {
  double value = 0.0;
  bool is_rational = false;
  std::int64_t num = 0;
  std::int64_t den = 1;
};

/// Parses "a/b", an integer, or a decimal. Throws std::invalid_argument on
/// malformed input or a value outside [0, 1].
ProbabilityValue parse_probability(std::string_view text);

}  // namespace fibpad
