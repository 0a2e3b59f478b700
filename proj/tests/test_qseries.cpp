#include <doctest.h>

#include <stdexcept>

#include "x49/qseries.hpp"

using namespace x49;

TEST_CASE("truncation is a hard boundary") {
  QSeries s(5);
  s.set(1, 1);
  CHECK(s.coeff(5) == 0);
  CHECK_THROWS_AS(s.coeff(6), std::out_of_range);
  CHECK_THROWS_AS(s.set(6, 1), std::out_of_range);
  CHECK_THROWS_AS(equal_through(s, QSeries(3), 4), std::out_of_range);
  CHECK(equal_through(s.truncated(3), s, 3));
  CHECK(equal_through_common(s, QSeries::monomial(1, 9)));
}

TEST_CASE("arithmetic keeps the smaller truncation") {
  const auto a = QSeries::from_integers({0, 1, 0, 2});
  const auto b = QSeries::monomial(2, 7, Rational(1, 2));
  const auto c = a + b;
  CHECK(c.trunc() == 3);
  CHECK(c.coeff(2) == Rational(1, 2));
  const auto lc = linear_combination({Rational(2), Rational(-1)}, {a, b});
  CHECK(lc.trunc() == 3);
  CHECK(lc.coeff(1) == 2);
  CHECK(lc.coeff(2) == Rational(-1, 2));
  CHECK((a - a).is_zero());
  CHECK((-a).coeff(3) == -2);
}

TEST_CASE("printing") {
  QSeries s(42);
  s.set(1, 1);
  s.set(8, -2);
  CHECK(s.to_string() == "q - 2q^8 + O(q^43)");
  QSeries z(3);
  CHECK(z.to_string() == "0 + O(q^4)");
}

TEST_CASE("integer coefficients") {
  const auto s = QSeries::from_integers({1, 2, -3});
  CHECK(s.integer_coefficients() == std::vector<std::int64_t>{1, 2, -3});
  CHECK_THROWS(QSeries::monomial(1, 2, Rational(1, 3)).integer_coefficients());
}

TEST_CASE("span solving") {
  const auto g1 = QSeries::from_integers({0, 1, 0, 1, 0});
  const auto g2 = QSeries::from_integers({0, 0, 1, 0, 1});
  const auto target = linear_combination({Rational(3), Rational(-1, 2)}, {g1, g2});
  auto sol = solve_in_span(target, {g1, g2}, 4);
  REQUIRE(sol);
  CHECK(sol->unique);
  CHECK(sol->coeffs == std::vector<Rational>{3, Rational(-1, 2)});

  sol = solve_in_span(target, {g1, g2, g1 + g2}, 4);
  REQUIRE(sol);
  CHECK_FALSE(sol->unique);
  CHECK(equal_through(linear_combination(sol->coeffs, {g1, g2, g1 + g2}), target, 4));

  CHECK_FALSE(solve_in_span(QSeries::monomial(0, 4), {g1, g2}, 4));
  CHECK(span_rank({g1, g2, g1 + g2}, 4) == 2);
}

TEST_CASE("constrained subspace") {
  const auto g1 = QSeries::from_integers({0, 1, 1, 0});
  const auto g2 = QSeries::from_integers({0, 0, 1, 1});
  const auto sub = constrained_subspace({g1, g2}, [](std::int64_t n) { return n == 2; }, 3);
  REQUIRE(sub.basis.size() == 1);
  CHECK(sub.basis[0].coeff(2) == 0);
  CHECK(sub.basis[0].coeff(1) == -sub.basis[0].coeff(3));
  CHECK(sub.combinations[0].size() == 2);
  const auto none = constrained_subspace({g1}, [](std::int64_t n) { return n == 1; }, 3);
  CHECK(none.basis.empty());
}
