#include "x49/verify.hpp"

#include <chrono>
#include <cmath>
#include <array>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "x49/cmform.hpp"
#include "x49/criterion.hpp"
#include "x49/fixtures.hpp"
#include "x49/halfint.hpp"
#include "x49/lfun.hpp"
#include "x49/theta.hpp"

namespace x49 {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string suite) { result_.suite = std::move(suite); }

  void check(const std::string& label, const std::function<bool(std::string&)>& body) {
    VerifyCheck c{label, false, {}};
    try {
      c.passed = body(c.detail);
    } catch (const std::exception& e) {
      c.detail = std::string("exception: ") + e.what();
    }
    result_.checks.push_back(std::move(c));
  }

  VerifySuiteResult finish(std::chrono::steady_clock::time_point start) {
    result_.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return std::move(result_);
  }

 private:
  VerifySuiteResult result_;
};

HalfIntegralForm fixture_form(const std::string& name) { return make_half_integral(fixture(name)); }

VerifySuiteResult suite_ueda() {
  const auto start = std::chrono::steady_clock::now();
  Recorder r("ueda");
  r.check("sturm bound for weight 3/2 and level 196 is 42", [](std::string& detail) {
    const auto b = sturm_bound(Rational(3, 2), 196, WeightKind::half_integral);
    detail = std::to_string(b);
    return b == 42;
  });
  r.check("plus space of h1..h9 is spanned by g1, l1, f1", [](std::string& detail) {
    std::vector<HalfIntegralForm> basis;
    for (const auto& h : basis_h()) basis.push_back(make_half_integral(h));
    const auto plus = kohnen_project(basis, -1);
    std::vector<QSeries> gens;
    for (const auto& f : plus) gens.push_back(f.series);
    detail = "dimension " + std::to_string(plus.size());
    if (plus.size() != 3) return false;
    for (const char* name : {"g1", "l1", "f1"})
      if (!solve_in_span(fixture(name), gens, 42)) return false;
    return true;
  });
  r.check("omega set of level 196 and character 28 is {((-7/.), 1)}", [](std::string& detail) {
    const auto omega = omega_set(49, Character(28, 28));
    detail = std::to_string(omega.size()) + " pair(s)";
    return omega == std::vector<OmegaPair>{{-7, 1}};
  });
  r.check("unary theta h(-7, 1) equals h and g1 + 2 l1", [](std::string&) {
    const auto h = unary_theta(-7, 1, 42).series;
    const auto sum = fixture("g1") + Rational(2) * fixture("l1");
    return equal_through(h, fixture("h"), 42) && equal_through(h, sum, 42);
  });
  r.check("T(9) h = -4 h, T(9) g1 = 0, T(9) f1 = 0", [](std::string&) {
    const auto th = hecke_Tp2(fixture_form("h"), 3).series;
    const auto tg = hecke_Tp2(fixture_form("g1"), 3).series;
    const auto tf = hecke_Tp2(fixture_form("f1"), 3).series;
    return equal_through(th, Rational(-4) * fixture("h"), 4) && tg.is_zero() && tf.is_zero();
  });
  return r.finish(start);
}

VerifySuiteResult suite_theta() {
  const auto start = std::chrono::steady_clock::now();
  Recorder r("theta");
  for (const char* name : {"f1", "f2", "f3", "g1"}) {
    r.check(std::string("theta decomposition of ") + name + " through q^42", [name](std::string&) {
      const auto& dec = theta_decomposition(name);
      std::vector<QSeries> thetas;
      for (int i : dec.matrices) thetas.push_back(lemma_theta(i, 42));
      return equal_through(linear_combination(dec.coeffs, thetas), fixture(name), 42);
    });
  }
  r.check("theta series of M1..M13 are linearly independent through q^42", [](std::string& detail) {
    std::vector<QSeries> thetas;
    for (int i = 1; i <= 13; ++i) thetas.push_back(lemma_theta(i, 42));
    const auto rank = span_rank(thetas, 42);
    detail = "rank " + std::to_string(rank);
    return rank == 13;
  });
  r.check("M1..M13 have level 196 and squarefree kernel 7", [](std::string& detail) {
    for (int i = 1; i <= 13; ++i) {
      const auto lc = level_and_character(lemma_matrix(i));
      if (lc.level != 196 || lc.squarefree_kernel != 7) {
        detail = "M" + std::to_string(i) + " has level " + std::to_string(lc.level);
        return false;
      }
    }
    return true;
  });
  r.check("diagonal forms A1, A2 have the expected theta series", [](std::string&) {
    const auto t1 = theta_series(diagonal_form_a1(), 42);
    const auto t2 = theta_series(diagonal_form_a2(), 42);
    return equal_through(t1, fixture("theta_A1"), 42) && equal_through(t2, fixture("theta_A2"), 42);
  });
  return r.finish(start);
}

VerifySuiteResult suite_shimura() {
  const auto start = std::chrono::steady_clock::now();
  Recorder r("shimura");
  const std::int64_t L = 29;
  const QSeries F = newform_F().coefficients(L);
  const QSeries Fold = old_form(L);
  auto lift = [&](const char* name, std::int64_t t) { return shimura_lift(extend_fixture(name, t * L * L), t, L); };
  auto expect = [&](const std::string& label, const char* name, std::int64_t t, const QSeries& want) {
    r.check(label, [&, name, t](std::string&) { return equal_through(lift(name, t), want, L); });
  };
  r.check("Sh1(g1) matches the stored display", [&](std::string&) {
    return equal_through(lift("g1", 1), fixture("Sh1_g1"), L);
  });
  r.check("Sh3(f1) matches the stored display", [&](std::string&) {
    return equal_through(lift("f1", 3), fixture("Sh3_f1"), L);
  });
  expect("Sh1(g1) = (F + F_old) / 2", "g1", 1, Rational(1, 2) * (F + Fold));
  expect("Sh3(f1) = F_old - F", "f1", 3, Fold - F);
  expect("Sh1(f2) = F_old", "f2", 1, Fold);
  expect("Sh3(f3) = 2F - F_old", "f3", 3, Rational(2) * F - Fold);
  expect("Sh1(f1) = 0", "f1", 1, QSeries(L));
  expect("Sh3(f2) = 0", "f2", 3, QSeries(L));
  expect("Sh1(f3) = 0", "f3", 1, QSeries(L));
  r.check("F_old fixture equals a_{2n}(F)", [&](std::string&) {
    return equal_through(Fold, fixture("F_old"), fixture("F_old").trunc());
  });
  return r.finish(start);
}

VerifySuiteResult suite_lfun() {
  const auto start = std::chrono::steady_clock::now();
  Recorder r("lfun");
  r.check("L(F, 1) = 0.9666558528 within 1e-4", [](std::string& detail) {
    const auto v = l_value(1, 1e-6);
    detail = std::to_string(v.value);
    return std::abs(v.value - 0.9666558528) < 1e-4;
  });
  for (const auto& row : companion_table()) {
    const std::string label = "L(F_" + std::to_string(row.d2) + ", 1) matches its table value";
    r.check(label, [row](std::string& detail) {
      const auto v = l_value(row.d2, 1e-5);
      std::ostringstream os;
      os << v.value << " vs " << row.expected_L;
      detail = os.str();
      return std::abs(v.value - row.expected_L) < 5e-3;
    });
  }
  r.check("Euler factor identity for p <= 20 through 400", [](std::string&) {
    for (std::int64_t p : primes_up_to(20))
      if (!euler_factor_identity(p, 400)) return false;
    return true;
  });
  for (auto [d1, d2, i] : std::vector<std::array<std::int64_t, 3>>{{15, 71, 2}, {5, 13, 1}}) {
    r.check("Waldspurger ratio for (" + std::to_string(d1) + ", " + std::to_string(d2) + ")",
            [d1, d2, i](std::string& detail) {
              const double res = waldspurger_ratio_residual(d1, d2, static_cast<int>(i), 1e-3);
              detail = std::to_string(res);
              return res < 1e-2;
            });
  }
  return r.finish(start);
}

VerifySuiteResult suite_criterion() {
  const auto start = std::chrono::steady_clock::now();
  Recorder r("criterion");
  r.check("d = 1: counts (2, 0), rank not predicted", [](std::string&) {
    const auto rep = predict(1);
    return rep.counts == std::pair<std::int64_t, std::int64_t>{2, 0} && !rep.predicted_positive_rank;
  });
  r.check("d = -3: positive rank", [](std::string&) { return predict(-3).predicted_positive_rank; });
  r.check("d = 29: counts differ by 8", [](std::string&) {
    const auto rep = predict(29);
    return rep.counts.first - rep.counts.second == 8 && !rep.predicted_positive_rank;
  });
  r.check("d = 11: equal counts", [](std::string&) { return predict(11).predicted_positive_rank; });
  for (const auto& row : companion_table()) {
    r.check("companion " + std::to_string(row.d2) + " has coefficient " + std::to_string(row.expected_c),
            [row](std::string& detail) {
              const auto rep = predict(row.d2);
              detail = "counted " + std::to_string(rep.coefficient);
              return rep.coefficient == row.expected_c;
            });
  }
  return r.finish(start);
}

}  // namespace

bool VerifySuiteResult::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"ueda", "theta", "shimura", "lfun", "criterion"};
  return names;
}

std::vector<VerifySuiteResult> run_verify(const std::string& suite) {
  static const std::map<std::string, std::function<VerifySuiteResult()>> suites = {
      {"ueda", suite_ueda}, {"theta", suite_theta}, {"shimura", suite_shimura},
      {"lfun", suite_lfun}, {"criterion", suite_criterion}};
  if (suite == "all") {
    std::vector<VerifySuiteResult> out;
    for (const auto& name : verify_suite_names()) out.push_back(suites.at(name)());
    return out;
  }
  auto it = suites.find(suite);
  if (it == suites.end()) throw std::invalid_argument("unknown verify suite: " + suite);
  return {it->second()};
}

}  // namespace x49
