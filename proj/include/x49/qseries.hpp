#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace x49 {

using Rational = mpq_class;

/// Exact q-expansion sum_{n <= trunc} a(n) q^n + O(q^{trunc+1}).
///
/// Coefficients beyond the truncation are unknown, not zero: reading or
/// comparing past trunc() throws std::out_of_range.
class QSeries {
 public:
  explicit QSeries(std::int64_t trunc);
  QSeries(std::int64_t trunc, const std::map<std::int64_t, Rational>& coeffs);

  static QSeries from_integers(const std::vector<std::int64_t>& coeffs);
  /// q^exponent with the given truncation.
  static QSeries monomial(std::int64_t exponent, std::int64_t trunc, const Rational& c = 1);

  std::int64_t trunc() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  const Rational& coeff(std::int64_t n) const;
  void set(std::int64_t n, const Rational& value);

  /// Nonzero coefficients, ascending exponent.
  std::map<std::int64_t, Rational> nonzero() const;
  bool is_zero() const;

  /// Drops every exponent above new_trunc (new_trunc <= trunc()).
  QSeries truncated(std::int64_t new_trunc) const;

  /// Integer coefficients; throws if any coefficient is not integral.
  std::vector<std::int64_t> integer_coefficients() const;

  std::string to_string() const;

  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries& operator*=(const Rational& c);

 private:
  std::vector<Rational> coeffs_;
};

QSeries add(const QSeries& a, const QSeries& b);
QSeries scale(const Rational& c, const QSeries& a);
QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator*(const Rational& c, const QSeries& a);
QSeries operator-(const QSeries& a);

/// sum_i c_i * series_i; truncation is the minimum over the inputs.
QSeries linear_combination(const std::vector<Rational>& coeffs, const std::vector<QSeries>& series);

/// Coefficientwise equality for exponents 0..upto; throws past either truncation.
bool equal_through(const QSeries& a, const QSeries& b, std::int64_t upto);
/// Equality through min(a.trunc(), b.trunc()).
bool equal_through_common(const QSeries& a, const QSeries& b);

std::ostream& operator<<(std::ostream& os, const QSeries& s);

struct SpanSolution {
  std::vector<Rational> coeffs;
  bool unique = true;
};

/// Rationals c_i with target = sum c_i g_i on exponents 0..upto, or nullopt
/// when inconsistent. Free variables are set to 0 when not unique.
std::optional<SpanSolution> solve_in_span(const QSeries& target, const std::vector<QSeries>& generators,
                                          std::int64_t upto);

struct Subspace {
  /// Row-reduced combination vectors over the generators (pivot entry 1).
  std::vector<std::vector<Rational>> combinations;
  /// The corresponding series, truncated like the generators.
  std::vector<QSeries> basis;
};

/// Subspace of span(generators) whose members vanish at every exponent
/// n <= upto with forbidden(n).
Subspace constrained_subspace(const std::vector<QSeries>& generators,
                              const std::function<bool(std::int64_t)>& forbidden, std::int64_t upto);

/// Rank of the generators as vectors of coefficients 0..upto.
std::size_t span_rank(const std::vector<QSeries>& generators, std::int64_t upto);

}  // namespace x49
