#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "fibpad/rational.hpp"
#include "fibpad/table.hpp"

using namespace fibpad;

TEST_CASE("probability parsing keeps rationals exact") {
  auto p = parse_probability("1/5");
  CHECK(p.is_rational);
  CHECK(p.num == 1);
  CHECK(p.den == 5);
  CHECK(p.value == doctest::Approx(0.2).epsilon(1e-15));

  auto reduced = parse_probability("4/20");
  CHECK(reduced.is_rational);
  CHECK(reduced.num == 1);
  CHECK(reduced.den == 5);

  auto one = parse_probability("1");
  CHECK(one.is_rational);
  CHECK(one.num == 1);
  CHECK(one.den == 1);
  CHECK(one.value == 1.0);

  auto zero = parse_probability("0");
  CHECK(zero.is_rational);
  CHECK(zero.num == 0);
  CHECK(zero.value == 0.0);

  auto dec = parse_probability("0.25");
  CHECK_FALSE(dec.is_rational);
  CHECK(dec.value == 0.25);

  auto sci = parse_probability("2.5e-1");
  CHECK_FALSE(sci.is_rational);
  CHECK(sci.value == 0.25);
}

TEST_CASE("probability parsing rejects malformed or out-of-range input") {
  for (const char* bad : {"", "x", "1/0", "2/1", "-1/5", "1/-5", "1.5", "-0.1",
                          "0.2oops", "1/5/2", "1e999"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_probability(bad), std::invalid_argument);
  }
}

TEST_CASE("double formatting round-trips and rejects non-finite values") {
  for (double v : {0.0, 1.0, 0.1, 1.0 / 3.0, 0.30000000000000004, 1e-300,
                   123456789.123456789, -2.5}) {
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK_THROWS_AS(format_double(std::numeric_limits<double>::infinity()),
                  std::runtime_error);
  CHECK_THROWS_AS(format_double(std::nan("")), std::runtime_error);
}

TEST_CASE("csv emission uses LF endings and RFC quoting") {
  Table t;
  t.columns = {"a", "b"};
  CHECK(emit_csv(t) == "a,b\n");

  t.add_row({std::int64_t{3}, std::string("plain")});
  t.add_row({0.5, std::string("needs,quote")});
  t.add_row({std::int64_t{-1}, std::string("say \"hi\"")});
  std::string out = emit_csv(t);
  CHECK(out ==
        "a,b\n"
        "3,plain\n"
        "0.5,\"needs,quote\"\n"
        "-1,\"say \"\"hi\"\"\"\n");
  CHECK(out.find('\r') == std::string::npos);
}

TEST_CASE("json emission preserves types and column order") {
  Table t;
  t.columns = {"n", "x", "name"};
  t.add_row({std::int64_t{7}, 0.25, std::string("row")});
  std::string out = emit_json(t);
  CHECK(out.back() == '\n');
  auto parsed = nlohmann::json::parse(out);
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0]["n"].is_number_integer());
  CHECK(parsed[0]["n"].get<std::int64_t>() == 7);
  CHECK(parsed[0]["x"].get<double>() == 0.25);
  CHECK(parsed[0]["name"].get<std::string>() == "row");
  // Column order is preserved in the serialized object.
  CHECK(out.find("\"n\"") < out.find("\"x\""));
  CHECK(out.find("\"x\"") < out.find("\"name\""));

  Table bad;
  bad.columns = {"x"};
  bad.add_row({std::numeric_limits<double>::quiet_NaN()});
  CHECK_THROWS_AS(emit_json(bad), std::runtime_error);
}

TEST_CASE("text emission aligns columns") {
  Table t;
  t.columns = {"id", "value"};
  t.add_row({std::int64_t{1}, std::string("alpha")});
  t.add_row({std::int64_t{100}, std::string("b")});
  std::string out = emit_text(t);
  std::istringstream lines(out);
  std::string header, row1, row2;
  std::getline(lines, header);
  std::getline(lines, row1);
  std::getline(lines, row2);
  CHECK(header == "id   value");
  CHECK(row1 == "1    alpha");
  CHECK(row2 == "100  b");
}

TEST_CASE("tables reject rows with the wrong arity") {
  Table t;
  t.columns = {"a", "b"};
  CHECK_THROWS_AS(t.add_row({std::int64_t{1}}), std::logic_error);
}
