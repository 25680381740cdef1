#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace fibpad {

/// Column-ordered tabular payload for CLI emission.
struct Table {
  using Cell = std::variant<std::int64_t, double, std::string>;

  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> cells);
};

/// Shortest decimal string that round-trips the double. Throws
/// std::runtime_error on non-finite input.
std::string format_double(double v);

/// Header plus one line per row, comma-separated, LF line endings. Cells
/// containing commas, quotes, or newlines are quoted.
std::string emit_csv(const Table& t);

/// JSON array of objects in column order, two-space indent, trailing newline.
std::string emit_json(const Table& t);

/// Column-aligned plain text.
std::string emit_text(const Table& t);

}  // namespace fibpad
