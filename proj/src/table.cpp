#include "fibpad/table.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace fibpad {

void Table::add_row(std::vector<Cell> cells) {
  if (cells.size() != columns.size()) {
    throw std::logic_error(fmt::format("row with {} cells in a {}-column table",
                                       cells.size(), columns.size()));
  }
  rows.push_back(std::move(cells));
}

std::string format_double(double v) {
  if (!std::isfinite(v)) {
    throw std::runtime_error("cannot serialize non-finite value");
  }
  return fmt::format("{}", v);
}

namespace {

std::string cell_text(const Table::Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return fmt::format("{}", *i);
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  return std::get<std::string>(c);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string emit_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_escape(t.columns[i]);
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += csv_escape(cell_text(row[i]));
    }
    out += '\n';
  }
  return out;
}

std::string emit_json(const Table& t) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (const auto* iv = std::get_if<std::int64_t>(&row[i])) {
        obj[t.columns[i]] = *iv;
      } else if (const auto* dv = std::get_if<double>(&row[i])) {
        if (!std::isfinite(*dv)) {
          throw std::runtime_error("cannot serialize non-finite value");
        }
        obj[t.columns[i]] = *dv;
      } else {
        obj[t.columns[i]] = std::get<std::string>(row[i]);
      }
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::string emit_text(const Table& t) {
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    width[i] = t.columns[i].size();
  }
  std::vector<std::vector<std::string>> cells;
  cells.reserve(t.rows.size());
  for (const auto& row : t.rows) {
    std::vector<std::string> line;
    line.reserve(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
      line.push_back(cell_text(row[i]));
      width[i] = std::max(width[i], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  std::string out;
  auto append_line = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i > 0) out += "  ";
      out += line[i];
      if (i + 1 < line.size()) {
        out.append(width[i] - line[i].size(), ' ');
      }
    }
    out += '\n';
  };
  append_line(t.columns);
  for (const auto& line : cells) append_line(line);
  return out;
}

}  // namespace fibpad
