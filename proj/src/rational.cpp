#include "fibpad/rational.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

namespace fibpad {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument(
        fmt::format("malformed {} '{}'", what, std::string(s)));
  }
  return v;
}

}  // namespace

ProbabilityValue parse_probability(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty probability value");
  ProbabilityValue out;
  std::size_t slash = s.find('/');
  if (slash != std::string_view::npos) {
    std::int64_t num = parse_int(trim(s.substr(0, slash)), "numerator");
    std::int64_t den = parse_int(trim(s.substr(slash + 1)), "denominator");
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      den = -den;
      num = -num;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    out.is_rational = true;
    out.num = num;
    out.den = den;
    out.value = double(num) / double(den);
  } else {
    try {
      std::size_t used = 0;
      out.value = std::stod(std::string(s), &used);
      if (used != s.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw std::invalid_argument(
          fmt::format("malformed probability '{}'", std::string(s)));
    }
    // integers given without a slash are still exact
    double integral = 0.0;
    if (std::modf(out.value, &integral) == 0.0 && s.find('.') == std::string_view::npos &&
        s.find('e') == std::string_view::npos && s.find('E') == std::string_view::npos) {
      out.is_rational = true;
      out.num = static_cast<std::int64_t>(integral);
      out.den = 1;
    }
  }
  if (!(out.value >= 0.0 && out.value <= 1.0)) {
    throw std::invalid_argument(
        fmt::format("probability {} outside [0, 1]", std::string(s)));
  }
  return out;
}

}  // namespace fibpad
