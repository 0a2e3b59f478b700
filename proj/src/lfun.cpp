#include "x49/lfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "x49/arith.hpp"
#include "x49/cmform.hpp"
#include "x49/halfint.hpp"

namespace x49 {

namespace {

void require_twist_argument(std::int64_t d) {
  if (d == 0 || !is_squarefree(d)) throw std::invalid_argument("d must be squarefree and nonzero");
  if (d % 7 == 0) throw std::invalid_argument("7 divides d; reduce it to -d/7 first");
}

double tail(double alpha, std::int64_t M) {
  return 4 * std::exp(-alpha * static_cast<double>(M + 1)) / -std::expm1(-alpha);
}

constexpr std::int64_t kBlock = 4096;

}  // namespace

std::int64_t conductor_twist(std::int64_t d) {
  require_twist_argument(d);
  const std::int64_t D = fundamental_discriminant(d);
  return 49 * D * D;
}

int sign_twist(std::int64_t d) {
  require_twist_argument(d);
  return d > 0 ? 1 : -1;
}

LValueResult l_value(std::int64_t d, double tol, std::optional<std::int64_t> terms) {
  require_twist_argument(d);
  if (!(tol >= 1e-8)) throw std::invalid_argument("l_value: tolerance below 1e-8 is out of double precision reach");
  if (terms && *terms < 1) throw std::invalid_argument("l_value: term count must be positive");

  LValueResult r;
  if (sign_twist(d) < 0) {
    r.declared_zero = true;
    return r;
  }
  const double alpha = 2 * std::numbers::pi / std::sqrt(static_cast<double>(conductor_twist(d)));
  std::int64_t M = 1;
  if (terms) {
    M = *terms;
  } else {
    M = static_cast<std::int64_t>(std::ceil(std::log(4 / (tol * -std::expm1(-alpha))) / alpha));
    M = std::max<std::int64_t>(M, 1);
    while (M > 1 && tail(alpha, M - 1) < tol) --M;
    while (tail(alpha, M) >= tol) ++M;
  }

  const auto a = newform_F().coefficient_vector(M);
  const Character chi = Character::quadratic_field(d);

  // Fixed blocks summed in index order, so threading never changes the bits.
  const std::int64_t blocks = (M + kBlock - 1) / kBlock;
  std::vector<double> partial(static_cast<std::size_t>(blocks), 0.0);
  auto run = [&](std::int64_t b) {
    double s = 0;
    const std::int64_t hi = std::min(M, (b + 1) * kBlock);
    for (std::int64_t n = b * kBlock + 1; n <= hi; ++n) {
      const std::int64_t an = a[static_cast<std::size_t>(n)];
      if (an == 0) continue;
      const int c = chi(n);
      if (c == 0) continue;
      s += static_cast<double>(an * c) / static_cast<double>(n) * std::exp(-alpha * static_cast<double>(n));
    }
    partial[static_cast<std::size_t>(b)] = s;
  };
  if (blocks < 8) {
    for (std::int64_t b = 0; b < blocks; ++b) run(b);
  } else {
    const std::int64_t workers = std::min<std::int64_t>(blocks, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> threads;
    for (std::int64_t w = 0; w < workers; ++w)
      threads.emplace_back([&, w] {
        for (std::int64_t b = w; b < blocks; b += workers) run(b);
      });
    for (auto& t : threads) t.join();
  }
  double sum = 0;
  for (double s : partial) sum += s;

  r.value = 2 * sum;
  r.terms_used = M;
  r.tail_bound = tail(alpha, M);
  return r;
}

int c_factor(std::int64_t d) { return kronecker(d, 2) == -1 ? 2 : 1; }

bool euler_factor_identity(std::int64_t p, std::int64_t limit) {
  if (!is_prime(p)) throw std::invalid_argument("euler_factor_identity: p must be prime");
  if (limit < p * p) throw std::invalid_argument("euler_factor_identity: limit must be at least p^2");
  const auto a = newform_F().coefficient_vector(limit);
  const auto at = [&](std::int64_t n) { return a[static_cast<std::size_t>(n)]; };
  const std::int64_t chi_p = p == 7 ? 0 : 1;
  for (std::int64_t n = 1; n <= limit; ++n) {
    const std::int64_t lhs = n % p == 0 ? 0 : at(n);
    std::int64_t rhs = at(n);
    if (n % p == 0) rhs -= at(p) * at(n / p);
    if (n % (p * p) == 0) rhs += chi_p * p * at(n / (p * p));
    if (lhs != rhs) return false;
  }
  return true;
}

double waldspurger_ratio_residual(std::int64_t d1, std::int64_t d2, int i, double tol) {
  for (auto d : {d1, d2}) {
    require_twist_argument(d);
    if (d < 0) throw std::invalid_argument("waldspurger: d must be positive");
  }
  if (i < 1 || i > 3) throw std::invalid_argument("waldspurger: i must be 1, 2 or 3");
  for (std::int64_t p : {2, 7})
    if (!same_padic_square_class(d1, d2, p))
      throw std::invalid_argument("waldspurger: " + std::to_string(d1) + " and " + std::to_string(d2) +
                                  " lie in different square classes of Q_" + std::to_string(p));

  const auto f = extend_fixture("f" + std::to_string(i), std::max<std::int64_t>({d1, d2, 42}));
  const Rational c1 = f.series.coeff(d1), c2 = f.series.coeff(d2);
  const double L1 = l_value(d1, tol / 10).value, L2 = l_value(d2, tol / 10).value;
  const int chi = Character(28, 28).at_ratio(d2, d1);
  const double lhs = Rational(c1 * c1).get_d() * c_factor(d2) * L2 * chi * std::sqrt(static_cast<double>(d2));
  const double rhs = Rational(c2 * c2).get_d() * c_factor(d1) * L1 * std::sqrt(static_cast<double>(d1));
  return std::abs(lhs - rhs);
}

}  // namespace x49
