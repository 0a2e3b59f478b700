#include "x49/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace x49 {

namespace detail {
extern const std::string_view kBuiltinFixtures;
}

namespace {

constexpr std::string_view kHalfIntegralTag = "1/2-integral";

}  // namespace

FixtureRecord parse_fixture_line(std::string_view line) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("fixture: malformed JSON: ") + e.what());
  }
  try {
    FixtureRecord r;
    r.name = j.at("name").get<std::string>();
    const auto& w = j.at("weight");
    if (w.is_string()) {
      if (w.get<std::string>() != kHalfIntegralTag)
        throw std::invalid_argument("fixture " + r.name + ": unknown weight tag " + w.get<std::string>());
      r.half_integral = true;
    } else {
      r.half_integral = false;
      r.integer_weight = w.get<std::int64_t>();
    }
    r.level = j.at("level").get<std::int64_t>();
    r.character = j.at("character").get<std::int64_t>();
    const auto trunc = j.at("trunc").get<std::int64_t>();
    if (j.value("zeros", std::string("implicit")) != "implicit")
      throw std::invalid_argument("fixture " + r.name + ": only implicit zeros are supported");
    r.series = QSeries(trunc);
    for (const auto& t : j.at("coeffs")) {
      if (!t.is_array() || t.size() != 3) throw std::invalid_argument("fixture " + r.name + ": bad coefficient triple");
      const auto n = t[0].get<std::int64_t>();
      const auto num = t[1].get<std::int64_t>();
      const auto den = t[2].get<std::int64_t>();
      if (den <= 0) throw std::invalid_argument("fixture " + r.name + ": denominator must be positive");
      Rational c(static_cast<long>(num), static_cast<unsigned long>(den));
      c.canonicalize();
      r.series.set(n, c);
    }
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("fixture: ") + e.what());
  }
}

std::string format_fixture_line(const FixtureRecord& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["name"] = r.name;
  if (r.half_integral)
    j["weight"] = kHalfIntegralTag;
  else
    j["weight"] = r.integer_weight;
  j["level"] = r.level;
  j["character"] = r.character;
  j["trunc"] = r.series.trunc();
  j["zeros"] = "implicit";
  ordered_json coeffs = ordered_json::array();
  for (const auto& [n, c] : r.series.nonzero()) {
    if (!c.get_num().fits_slong_p() || !c.get_den().fits_slong_p())
      throw std::overflow_error("fixture " + r.name + ": coefficient exceeds 64 bits");
    coeffs.push_back({n, c.get_num().get_si(), c.get_den().get_si()});
  }
  j["coeffs"] = std::move(coeffs);
  return j.dump();
}

std::vector<FixtureRecord> parse_fixture_text(std::string_view text) {
  std::vector<FixtureRecord> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(pos, end - pos);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) out.push_back(parse_fixture_line(line));
    pos = end + 1;
  }
  return out;
}

std::string format_fixture_text(const std::vector<FixtureRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += format_fixture_line(r);
    out += '\n';
  }
  return out;
}

std::vector<FixtureRecord> load_fixture_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_fixture_text(ss.str());
}

const std::vector<FixtureRecord>& builtin_fixtures() {
  static const std::vector<FixtureRecord> records = parse_fixture_text(detail::kBuiltinFixtures);
  return records;
}

const FixtureRecord& builtin_record(std::string_view name) {
  for (const auto& r : builtin_fixtures())
    if (r.name == name) return r;
  throw std::out_of_range("no builtin fixture named " + std::string(name));
}

const QSeries& fixture(std::string_view name) { return builtin_record(name).series; }

std::vector<QSeries> basis_h() {
  std::vector<QSeries> out;
  for (int i = 1; i <= 9; ++i) out.push_back(fixture("h" + std::to_string(i)));
  return out;
}

}  // namespace x49
