#include "x49/theta.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "x49/arith.hpp"

namespace x49 {

namespace {

using i128 = __int128;

std::int64_t floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return static_cast<std::int64_t>(q);
}

std::int64_t ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

std::int64_t isqrt128(i128 n) {
  if (n < 0) return -1;
  if (n <= INT64_MAX) return isqrt(static_cast<std::int64_t>(n));
  throw std::overflow_error("ellipsoid bound exceeds 64-bit range");
}

// Visits every v with Q(v) <= bound whose first coordinate lies in [x_lo, x_hi],
// passing Q(v). Bounds come from completing the square in exact integer
// arithmetic, so no lattice point on the boundary is lost.
template <class Visit>
void sweep(const std::array<std::int64_t, 6>& u, std::int64_t bound, std::int64_t x_lo, std::int64_t x_hi,
           Visit&& visit) {
  const auto [a, b, c, d, e, f] = u;
  const i128 m = i128(d) * f - i128(e) * e;
  const i128 n = i128(b) * f - i128(c) * e;
  const i128 det = i128(a) * m - i128(b) * (i128(b) * f - i128(c) * e) + i128(c) * (i128(b) * e - i128(c) * d);
  const i128 two_x = 2 * i128(bound);

  for (std::int64_t x = x_lo; x <= x_hi; ++x) {
    const i128 disc_y = m * f * two_x - i128(x) * x * f * det;
    if (disc_y < 0) continue;
    const std::int64_t sy = isqrt128(disc_y);
    const std::int64_t y_lo = ceil_div(-n * x - sy, m);
    const std::int64_t y_hi = floor_div(-n * x + sy, m);
    for (std::int64_t y = y_lo; y <= y_hi; ++y) {
      const i128 lin = i128(c) * x + i128(e) * y;
      const i128 quad = i128(a) * x * x + 2 * i128(b) * x * y + i128(d) * y * y;
      const i128 disc_z = lin * lin - i128(f) * (quad - two_x);
      if (disc_z < 0) continue;
      const std::int64_t sz = isqrt128(disc_z);
      const std::int64_t z_lo = ceil_div(-lin - sz, f);
      const std::int64_t z_hi = floor_div(-lin + sz, f);
      for (std::int64_t z = z_lo; z <= z_hi; ++z) {
        const i128 twice_q = quad + 2 * lin * z + i128(f) * z * z;
        visit(static_cast<std::int64_t>(twice_q / 2));
      }
    }
  }
}

std::int64_t x_radius(const std::array<std::int64_t, 6>& u, std::int64_t det, std::int64_t bound) {
  const i128 m = i128(u[3]) * u[5] - i128(u[4]) * u[4];
  return isqrt128((2 * m * bound) / det);
}

Gram3 gram_of(const std::array<std::int64_t, 6>& u) {
  return Gram3{{{u[0], u[1], u[2]}, {u[1], u[3], u[4]}, {u[2], u[4], u[5]}}};
}

std::array<std::int64_t, 6> adjugate_upper(const std::array<std::int64_t, 6>& u) {
  const auto [a, b, c, d, e, f] = u;
  return {d * f - e * e, c * e - b * f, b * e - c * d, a * f - c * c, b * c - a * e, a * d - b * b};
}

}  // namespace

std::string to_string(FormDefect defect) {
  switch (defect) {
    case FormDefect::asymmetric: return "matrix is not symmetric";
    case FormDefect::odd_diagonal: return "diagonal entries must be even";
    case FormDefect::not_positive_definite: return "matrix is not positive definite";
  }
  return "unknown defect";
}

InvalidForm::InvalidForm(FormDefect defect) : std::invalid_argument(x49::to_string(defect)), defect_(defect) {}

std::optional<FormDefect> check_gram(const Gram3& g) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (g[i][j] != g[j][i]) return FormDefect::asymmetric;
  for (int i = 0; i < 3; ++i)
    if (g[i][i] % 2 != 0) return FormDefect::odd_diagonal;
  const i128 a = g[0][0], b = g[0][1], c = g[0][2], d = g[1][1], e = g[1][2], f = g[2][2];
  const i128 minor2 = a * d - b * b;
  const i128 det = a * (d * f - e * e) - b * (b * f - c * e) + c * (b * e - c * d);
  if (a <= 0 || minor2 <= 0 || det <= 0) return FormDefect::not_positive_definite;
  return std::nullopt;
}

TernaryForm TernaryForm::validate(const Gram3& gram) {
  if (auto defect = check_gram(gram)) throw InvalidForm(*defect);
  return TernaryForm({gram[0][0], gram[0][1], gram[0][2], gram[1][1], gram[1][2], gram[2][2]});
}

TernaryForm TernaryForm::from_upper(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e,
                                    std::int64_t f) {
  return validate(gram_of({a, b, c, d, e, f}));
}

TernaryForm TernaryForm::from_polynomial(const std::array<std::int64_t, 6>& k) {
  return from_upper(2 * k[0], k[3], k[4], 2 * k[1], k[5], 2 * k[2]);
}

Gram3 TernaryForm::gram() const { return gram_of(upper_); }

std::int64_t TernaryForm::determinant() const {
  const auto [a, b, c, d, e, f] = upper_;
  return a * (d * f - e * e) - b * (b * f - c * e) + c * (b * e - c * d);
}

std::int64_t TernaryForm::evaluate(std::int64_t x, std::int64_t y, std::int64_t z) const {
  const auto [a, b, c, d, e, f] = upper_;
  return (a * x * x + d * y * y + f * z * z) / 2 + b * x * y + c * x * z + e * y * z;
}

std::string TernaryForm::to_string() const {
  std::ostringstream os;
  const auto g = gram();
  os << "[";
  for (int i = 0; i < 3; ++i) {
    os << (i ? ", [" : "[") << g[i][0] << ", " << g[i][1] << ", " << g[i][2] << "]";
  }
  os << "]";
  return os.str();
}

std::int64_t representation_count(const TernaryForm& form, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("representation_count: n must be nonnegative");
  const std::int64_t r = x_radius(form.upper(), form.determinant(), n);
  std::int64_t count = 0;
  sweep(form.upper(), n, -r, r, [&](std::int64_t q) { count += (q == n); });
  return count;
}

std::vector<std::int64_t> representation_numbers(const TernaryForm& form, std::int64_t limit) {
  if (limit < 0) throw std::invalid_argument("representation_numbers: limit must be nonnegative");
  const std::int64_t r = x_radius(form.upper(), form.determinant(), limit);
  const std::int64_t span = 2 * r + 1;

  // Contiguous x-slabs per worker; integer histograms sum exactly, so the
  // result does not depend on the thread count.
  const std::int64_t hw = std::max<std::int64_t>(1, std::thread::hardware_concurrency());
  const std::int64_t workers = limit < 2000 ? 1 : std::min<std::int64_t>({hw, span, 16});
  std::vector<std::vector<std::int64_t>> partial(static_cast<std::size_t>(workers),
                                                 std::vector<std::int64_t>(static_cast<std::size_t>(limit) + 1, 0));
  auto run = [&](std::int64_t w) {
    const std::int64_t lo = -r + span * w / workers;
    const std::int64_t hi = -r + span * (w + 1) / workers - 1;
    auto& hist = partial[static_cast<std::size_t>(w)];
    sweep(form.upper(), limit, lo, hi, [&](std::int64_t q) { ++hist[static_cast<std::size_t>(q)]; });
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (std::int64_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  for (std::size_t w = 1; w < partial.size(); ++w)
    for (std::size_t i = 0; i < partial[0].size(); ++i) partial[0][i] += partial[w][i];
  return std::move(partial[0]);
}

QSeries theta_series(const TernaryForm& form, std::int64_t limit) {
  if (limit < 1) throw std::invalid_argument("theta_series: limit must be positive");
  return QSeries::from_integers(representation_numbers(form, limit));
}

LevelCharacter level_and_character(const TernaryForm& form) {
  const std::int64_t det = form.determinant();
  const auto adj = adjugate_upper(form.upper());
  std::int64_t level = 1;
  for (int i : {1, 2, 4}) level = lcm(level, det / gcd(det, adj[i]));
  for (int i : {0, 3, 5}) level = lcm(level, 2 * det / gcd(2 * det, adj[i]));
  const std::int64_t label = 8 * det;
  return {level, label, squarefree_decompose(label).squarefree};
}

const std::array<TernaryForm, 13>& lemma_matrices() {
  static const std::array<TernaryForm, 13> forms = {
      TernaryForm::from_upper(26, 8, -8, 24, 4, 24),
      TernaryForm::from_upper(34, 2, 6, 10, 2, 34),
      TernaryForm::from_upper(36, 2, -6, 4, 2, 22),
      TernaryForm::from_upper(56, 0, 14, 2, 0, 28),
      TernaryForm::from_upper(70, 14, -28, 42, 14, 70),
      TernaryForm::from_upper(98, 0, 0, 2, 0, 14),
      TernaryForm::from_upper(98, 0, 0, 4, 2, 8),
      TernaryForm::from_upper(98, 0, 0, 8, 4, 16),
      TernaryForm::from_upper(98, 0, 0, 14, 7, 28),
      TernaryForm::from_upper(98, 0, 0, 14, 0, 98),
      TernaryForm::from_upper(98, 0, 0, 28, 14, 56),
      TernaryForm::from_upper(24, 2, 10, 6, 2, 24),
      TernaryForm::from_upper(34, 2, -2, 10, 4, 10),
  };
  return forms;
}

const TernaryForm& lemma_matrix(int index) {
  if (index < 1 || index > 13) throw std::out_of_range("lemma_matrix: index must be in 1..13");
  return lemma_matrices()[static_cast<std::size_t>(index - 1)];
}

const TernaryForm& diagonal_form_a1() {
  static const TernaryForm form = TernaryForm::from_upper(98, 0, 0, 98, 0, 14);
  return form;
}

const TernaryForm& diagonal_form_a2() {
  static const TernaryForm form = TernaryForm::from_upper(98, 0, 0, 2, 0, 14);
  return form;
}

}  // namespace x49
