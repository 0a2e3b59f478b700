#include <doctest.h>

#include <fstream>
#include <sstream>

#include "x49/fixtures.hpp"

using namespace x49;

#ifndef X49_FIXTURE_PATH
#error "X49_FIXTURE_PATH must point at data/fixtures.jsonl"
#endif

TEST_CASE("fixture file round-trips byte for byte") {
  std::ifstream in(X49_FIXTURE_PATH);
  REQUIRE(in);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    CHECK(format_fixture_line(parse_fixture_line(line)) == line);
    ++n;
  }
  CHECK(n == static_cast<int>(builtin_fixtures().size()));
}

TEST_CASE("builtin fixtures are the data file") {
  const auto from_disk = load_fixture_file(X49_FIXTURE_PATH);
  CHECK(format_fixture_text(from_disk) == format_fixture_text(builtin_fixtures()));
  CHECK(builtin_record("g1").half_integral);
  CHECK(builtin_record("g1").level == 196);
  CHECK(builtin_record("g1").character == 28);
  CHECK(builtin_record("F_old").integer_weight == 2);
  CHECK(fixture("h1").trunc() == 42);
  CHECK_THROWS_AS(fixture("nope"), std::out_of_range);
}

TEST_CASE("relations among the stored forms") {
  const auto h = basis_h();
  REQUIRE(h.size() == 9);
  CHECK(equal_through(fixture("l1"), h[3] + h[7] - Rational(2) * h[8], 42));
  CHECK(equal_through(fixture("g1"), h[0] - Rational(2) * h[7] + h[8], 42));
  CHECK(equal_through(fixture("f1"), h[4], 42));
  CHECK(span_rank(h, 42) == 9);
}

TEST_CASE("malformed lines are rejected") {
  CHECK_THROWS_AS(parse_fixture_line("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fixture_line(R"({"name":"x","weight":"3/2","level":4,"character":1,"trunc":2,"coeffs":[]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      parse_fixture_line(R"({"name":"x","weight":2,"level":4,"character":1,"trunc":2,"coeffs":[[1,1,0]]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      parse_fixture_line(R"({"name":"x","weight":2,"level":4,"character":1,"trunc":2,"coeffs":[[3,1,1]]})"),
      std::out_of_range);
  const auto r =
      parse_fixture_line(R"({"name":"x","weight":2,"level":4,"character":1,"trunc":2,"coeffs":[[1,2,4]]})");
  CHECK(r.series.coeff(1) == Rational(1, 2));
  CHECK(parse_fixture_text("\n\n").empty());
}
