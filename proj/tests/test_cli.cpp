#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "x49/cli.hpp"

using namespace x49;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("criterion JSON") {
  const auto r = cli({"criterion", "29", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["d"] == 29);
  CHECK(j["reduced_d"] == 29);
  CHECK(j["case"] == "i");
  CHECK(j["counts"] == nlohmann::json::array({8, 0}));
  CHECK(j["positive_rank_predicted"] == false);
  CHECK(j["bsd_conditional"] == true);
  CHECK(j.size() == 6);
}

TEST_CASE("table and JSON carry the same numbers") {
  const auto t = cli({"criterion", "-21", "--explain"});
  const auto j = cli({"criterion", "-21", "--explain", "--json"});
  REQUIRE(t.code == 0);
  REQUIRE(j.code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  std::istringstream lines(t.out);
  std::string key, value;
  int seen = 0;
  while (lines >> key && std::getline(lines >> std::ws, value)) {
    CAPTURE(key);
    CHECK(parsed.at(key) == nlohmann::json::parse(value));
    ++seen;
  }
  CHECK(seen == static_cast<int>(parsed.size()));
  CHECK(parsed["reduced_d"] == 3);
  CHECK(parsed["companion"]["d2"] == 3);
}

TEST_CASE("negative discriminants parse as positionals") {
  const auto r = cli({"criterion", "-3", "--json"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["positive_rank_predicted"] == true);
}

TEST_CASE("usage errors exit 2") {
  CHECK(cli({"criterion", "0"}).code == 2);
  CHECK(cli({"criterion", "12"}).code == 2);
  CHECK(cli({"criterion", "x"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"criterion", "5", "--bogus"}).code == 2);
  CHECK(cli({"lvalue", "14"}).code == 2);
  CHECK(cli({"lvalue", "5", "--tol", "1e-12"}).code == 2);
  CHECK(cli({"theta", "--gram", "2,0,0,2,0", "--limit", "5"}).code == 2);
  CHECK(cli({"theta", "--gram", "3,0,0,2,0,2", "--limit", "5"}).code == 2);
  CHECK(cli({"verify", "--suite", "nope"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("lvalue") {
  const auto r = cli({"lvalue", "15", "--tol", "1e-5", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["value"].get<double>() - 1.9967) < 5e-3);
  CHECK(j["tail_bound"].get<double>() < 1e-5);
  CHECK(j["terms_used"].get<long>() > 0);
  const auto neg = nlohmann::json::parse(cli({"lvalue", "-5", "--json"}).out);
  CHECK(neg["declared_zero"] == true);
  const auto fixed = nlohmann::json::parse(cli({"lvalue", "5", "--terms", "10", "--json"}).out);
  CHECK(fixed["terms_used"] == 10);
}

TEST_CASE("theta") {
  const auto r = cli({"theta", "--gram", "2,0,0,2,0,2", "--limit", "4", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["coefficients"] == nlohmann::json::array({1, 6, 12, 8, 6}));
  CHECK(j["level"] == 4);
  const auto plain = cli({"theta", "--gram", "98,0,0,98,0,14", "--limit", "30"});
  CHECK(plain.out.find("1 + 2q^7 + 2q^28 + O(q^31)") != std::string::npos);
}

TEST_CASE("search-matrices") {
  const auto r = cli({"search-matrices", "--max-entry", "98", "--diagonal-only"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["matrices"].size() == 2);
  const auto t = cli({"search-matrices", "--max-entry", "34", "--target", "f1"});
  REQUIRE(t.code == 0);
  const auto jt = nlohmann::json::parse(t.out);
  CHECK(jt["target"] == "f1");
  CHECK(jt["decomposition"].is_array());
  CHECK(cli({"search-matrices", "--target", "h7"}).code == 2);
}

TEST_CASE("verify suites") {
  const auto r = cli({"verify", "--suite", "theta"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(cli({"verify", "--suite", "criterion"}).code == 0);
}
