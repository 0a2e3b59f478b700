#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "x49/qseries.hpp"

namespace x49 {

/// One stored q-expansion.
///
/// Text form, one compact JSON object per line:
///   {"name":"g1","weight":"1/2-integral","level":196,"character":28,
///    "trunc":42,"zeros":"implicit","coeffs":[[1,1,1],[8,-2,1],...]}
/// `weight` is the string "1/2-integral" or an integer. Each coefficient is
/// [exponent, numerator, denominator]; exponents <= trunc that are not listed
/// are zero ("zeros":"implicit").
struct FixtureRecord {
  std::string name;
  bool half_integral = true;
  std::int64_t integer_weight = 0;
  std::int64_t level = 0;
  std::int64_t character = 1;
  QSeries series{0};
};

FixtureRecord parse_fixture_line(std::string_view line);
std::string format_fixture_line(const FixtureRecord& record);

std::vector<FixtureRecord> parse_fixture_text(std::string_view text);
std::string format_fixture_text(const std::vector<FixtureRecord>& records);

std::vector<FixtureRecord> load_fixture_file(const std::string& path);

/// Fixtures compiled into the library (data/fixtures.jsonl).
const std::vector<FixtureRecord>& builtin_fixtures();
const FixtureRecord& builtin_record(std::string_view name);
const QSeries& fixture(std::string_view name);

/// The nine basis forms h1..h9 of the weight-3/2 cusp forms of level 196.
std::vector<QSeries> basis_h();

}  // namespace x49
