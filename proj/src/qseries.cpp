#include "x49/qseries.hpp"

#include <sstream>
#include <stdexcept>

namespace x49 {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// In-place reduced row echelon form over the first `cols` columns.
// Returns the pivot column of each nonzero row, in row order.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && sgn(m[sel][col]) == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

void require_upto(std::int64_t upto, const std::vector<QSeries>& series) {
  if (upto < 0) throw std::invalid_argument("upto must be nonnegative");
  for (const auto& s : series)
    if (upto > s.trunc())
      throw std::out_of_range("upto " + std::to_string(upto) + " exceeds truncation " + std::to_string(s.trunc()));
}

}  // namespace

QSeries::QSeries(std::int64_t trunc) {
  if (trunc < 0) throw std::invalid_argument("QSeries: truncation must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(trunc) + 1, Rational(0));
}

QSeries::QSeries(std::int64_t trunc, const std::map<std::int64_t, Rational>& coeffs) : QSeries(trunc) {
  for (const auto& [n, c] : coeffs) set(n, c);
}

QSeries QSeries::from_integers(const std::vector<std::int64_t>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("QSeries::from_integers: empty coefficient list");
  QSeries s(static_cast<std::int64_t>(coeffs.size()) - 1);
  for (std::size_t n = 0; n < coeffs.size(); ++n)
    if (coeffs[n] != 0) s.coeffs_[n] = Rational(static_cast<long>(coeffs[n]));
  return s;
}

QSeries QSeries::monomial(std::int64_t exponent, std::int64_t trunc, const Rational& c) {
  QSeries s(trunc);
  if (exponent <= trunc) s.set(exponent, c);
  return s;
}

const Rational& QSeries::coeff(std::int64_t n) const {
  if (n < 0 || n > trunc())
    throw std::out_of_range("coefficient " + std::to_string(n) + " is beyond truncation " + std::to_string(trunc()));
  return coeffs_[static_cast<std::size_t>(n)];
}

void QSeries::set(std::int64_t n, const Rational& value) {
  if (n < 0 || n > trunc())
    throw std::out_of_range("exponent " + std::to_string(n) + " is beyond truncation " + std::to_string(trunc()));
  coeffs_[static_cast<std::size_t>(n)] = value;
}

std::map<std::int64_t, Rational> QSeries::nonzero() const {
  std::map<std::int64_t, Rational> out;
  for (std::size_t n = 0; n < coeffs_.size(); ++n)
    if (sgn(coeffs_[n]) != 0) out.emplace(static_cast<std::int64_t>(n), coeffs_[n]);
  return out;
}

bool QSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

QSeries QSeries::truncated(std::int64_t new_trunc) const {
  if (new_trunc > trunc())
    throw std::out_of_range("cannot extend truncation " + std::to_string(trunc()) + " to " + std::to_string(new_trunc));
  QSeries s(new_trunc);
  std::copy(coeffs_.begin(), coeffs_.begin() + new_trunc + 1, s.coeffs_.begin());
  return s;
}

std::vector<std::int64_t> QSeries::integer_coefficients() const {
  std::vector<std::int64_t> out(coeffs_.size());
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    const auto& c = coeffs_[n];
    if (c.get_den() != 1 || !c.get_num().fits_slong_p())
      throw std::domain_error("coefficient " + std::to_string(n) + " is not a machine integer");
    out[n] = c.get_num().get_si();
  }
  return out;
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    const Rational& c = coeffs_[n];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (n == 0 || !unit) os << mag.get_str();
    if (n >= 1) os << "q";
    if (n >= 2) os << "^" << n;
  }
  if (first) os << "0";
  os << " + O(q^" << coeffs_.size() << ")";
  return os.str();
}

QSeries& QSeries::operator+=(const QSeries& other) {
  if (other.trunc() < trunc()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
  if (other.trunc() < trunc()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= other.coeffs_[n];
  return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QSeries add(const QSeries& a, const QSeries& b) {
  QSeries out = a;
  out += b;
  return out;
}

QSeries scale(const Rational& c, const QSeries& a) {
  QSeries out = a;
  out *= c;
  return out;
}

QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }

QSeries operator-(const QSeries& a, const QSeries& b) {
  QSeries out = a;
  out -= b;
  return out;
}

QSeries operator*(const Rational& c, const QSeries& a) { return scale(c, a); }

QSeries operator-(const QSeries& a) { return scale(-1, a); }

QSeries linear_combination(const std::vector<Rational>& coeffs, const std::vector<QSeries>& series) {
  if (coeffs.size() != series.size() || series.empty())
    throw std::invalid_argument("linear_combination: need matching, nonempty coefficient and series lists");
  std::int64_t trunc = series.front().trunc();
  for (const auto& s : series) trunc = std::min(trunc, s.trunc());
  QSeries out(trunc);
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (sgn(coeffs[i]) == 0) continue;
    QSeries term = series[i].truncated(trunc);
    term *= coeffs[i];
    out += term;
  }
  return out;
}

bool equal_through(const QSeries& a, const QSeries& b, std::int64_t upto) {
  if (upto > a.trunc() || upto > b.trunc())
    throw std::out_of_range("equal_through: comparison through q^" + std::to_string(upto) +
                            " exceeds a truncation (" + std::to_string(a.trunc()) + ", " +
                            std::to_string(b.trunc()) + ")");
  for (std::int64_t n = 0; n <= upto; ++n)
    if (a.coeff(n) != b.coeff(n)) return false;
  return true;
}

bool equal_through_common(const QSeries& a, const QSeries& b) {
  return equal_through(a, b, std::min(a.trunc(), b.trunc()));
}

std::ostream& operator<<(std::ostream& os, const QSeries& s) { return os << s.to_string(); }

std::optional<SpanSolution> solve_in_span(const QSeries& target, const std::vector<QSeries>& generators,
                                          std::int64_t upto) {
  if (generators.empty()) throw std::invalid_argument("solve_in_span: no generators");
  require_upto(upto, generators);
  require_upto(upto, {target});

  const std::size_t k = generators.size();
  Matrix m(static_cast<std::size_t>(upto) + 1, std::vector<Rational>(k + 1));
  for (std::int64_t n = 0; n <= upto; ++n) {
    for (std::size_t j = 0; j < k; ++j) m[n][j] = generators[j].coeff(n);
    m[n][k] = target.coeff(n);
  }
  const auto pivots = row_reduce(m, k);
  for (std::size_t r = pivots.size(); r < m.size(); ++r)
    if (sgn(m[r][k]) != 0) return std::nullopt;

  SpanSolution sol;
  sol.coeffs.assign(k, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) sol.coeffs[pivots[r]] = m[r][k];
  sol.unique = pivots.size() == k;
  return sol;
}

Subspace constrained_subspace(const std::vector<QSeries>& generators,
                              const std::function<bool(std::int64_t)>& forbidden, std::int64_t upto) {
  Subspace out;
  if (generators.empty()) return out;
  require_upto(upto, generators);

  const std::size_t k = generators.size();
  Matrix constraints;
  for (std::int64_t n = 0; n <= upto; ++n) {
    if (!forbidden(n)) continue;
    std::vector<Rational> row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = generators[j].coeff(n);
    constraints.push_back(std::move(row));
  }
  const auto pivots = row_reduce(constraints, k);

  std::vector<bool> is_pivot(k, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix kernel;
  for (std::size_t free = 0; free < k; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(k);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -constraints[r][free];
    kernel.push_back(std::move(v));
  }
  row_reduce(kernel, k);

  for (auto& v : kernel) {
    out.basis.push_back(linear_combination(v, generators));
    out.combinations.push_back(std::move(v));
  }
  return out;
}

std::size_t span_rank(const std::vector<QSeries>& generators, std::int64_t upto) {
  if (generators.empty()) return 0;
  require_upto(upto, generators);
  Matrix m(static_cast<std::size_t>(upto) + 1, std::vector<Rational>(generators.size()));
  for (std::int64_t n = 0; n <= upto; ++n)
    for (std::size_t j = 0; j < generators.size(); ++j) m[n][j] = generators[j].coeff(n);
  return row_reduce(m, generators.size()).size();
}

}  // namespace x49
