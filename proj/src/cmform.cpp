#include "x49/cmform.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

#include "x49/arith.hpp"

namespace x49 {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

// chi_table[r] = Legendre symbol (r/p).
std::vector<std::int8_t> legendre_table(std::int64_t p) {
  std::vector<std::int8_t> t(static_cast<std::size_t>(p), -1);
  t[0] = 0;
  for (std::int64_t x = 1; x <= p / 2; ++x) t[static_cast<std::size_t>(x * x % p)] = 1;
  return t;
}

}  // namespace

std::int64_t count_ap_long_model(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("ap: " + std::to_string(p) + " is not prime");
  if (p == 2) {
    std::int64_t affine = 0;
    for (std::int64_t x = 0; x < 2; ++x)
      for (std::int64_t y = 0; y < 2; ++y)
        affine += mod(y * y + x * y - (x * x * x - x * x - 2 * x - 1), 2) == 0;
    return p + 1 - (affine + 1);
  }
  // y^2 + xy - r(x) = 0 has 1 + ((x^2 + 4r)/p) solutions in y.
  const auto leg = legendre_table(p);
  std::int64_t sum = 0;
  for (std::int64_t x = 0; x < p; ++x) {
    const std::int64_t r = mod(((x * x % p) * x - x * x - 2 * x - 1) % p, p);
    sum += leg[static_cast<std::size_t>(mod(x * x + 4 * r, p))];
  }
  return -sum;
}

std::int64_t count_ap_short_model(std::int64_t d, std::int64_t p) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("short model needs an odd prime");
  if (mod(7 * d, p) == 0) throw std::invalid_argument("short model has bad reduction at p");
  const std::int64_t dp = mod(d, p);
  const std::int64_t A = mod(-35 * (dp * dp % p), p);
  const std::int64_t B = mod(-98 * (dp * dp % p * dp % p), p);
  const auto leg = legendre_table(p);
  std::int64_t sum = 0;
  for (std::int64_t x = 0; x < p; ++x) sum += leg[static_cast<std::size_t>(mod((x * x % p) * x + A * x + B, p))];
  return -sum;
}

std::int64_t CMNewform::ap(std::int64_t p) const {
  if (!is_prime(p)) throw std::invalid_argument("ap: " + std::to_string(p) + " is not prime");
  if (p == 7) return 0;
  {
    std::lock_guard lock(mutex_);
    if (p < static_cast<std::int64_t>(a_.size())) return a_[static_cast<std::size_t>(p)];
  }
  return count_ap_long_model(p);
}

std::vector<std::int64_t> CMNewform::coefficient_vector(std::int64_t limit) const {
  if (limit < 1) throw std::invalid_argument("coefficients: limit must be positive");
  {
    std::lock_guard lock(mutex_);
    if (limit < static_cast<std::int64_t>(a_.size())) return {a_.begin(), a_.begin() + limit + 1};
  }

  const auto spf = smallest_prime_factors(limit);
  const auto primes = primes_up_to(limit);
  std::vector<std::int64_t> a(static_cast<std::size_t>(limit) + 1, 0);

  // Prime coefficients: each slot is written by exactly one worker.
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = limit < 20000 ? 1 : std::min<std::size_t>(hw, 16);
  auto fill = [&](std::size_t w) {
    for (std::size_t i = w; i < primes.size(); i += workers) {
      const auto p = primes[i];
      a[static_cast<std::size_t>(p)] = p == 7 ? 0 : count_ap_long_model(p);
    }
  };
  if (workers == 1) {
    fill(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(fill, w);
    for (auto& t : threads) t.join();
  }

  a[1] = 1;
  for (std::int64_t n = 2; n <= limit; ++n) {
    const std::int64_t p = spf[static_cast<std::size_t>(n)];
    if (p == n) continue;
    std::int64_t pe = p, rest = n / p;
    while (rest % p == 0) {
      pe *= p;
      rest /= p;
    }
    if (rest > 1) {
      a[static_cast<std::size_t>(n)] = a[static_cast<std::size_t>(pe)] * a[static_cast<std::size_t>(rest)];
    } else {
      // n = p^r with r >= 2
      a[static_cast<std::size_t>(n)] =
          p == 7 ? 0 : a[static_cast<std::size_t>(p)] * a[static_cast<std::size_t>(n / p)] - p * a[static_cast<std::size_t>(n / p / p)];
    }
  }

  std::lock_guard lock(mutex_);
  if (a.size() > a_.size()) a_ = a;
  return a;
}

QSeries CMNewform::coefficients(std::int64_t limit) const {
  return QSeries::from_integers(coefficient_vector(limit));
}

std::int64_t CMNewform::an(std::int64_t n) const {
  if (n < 1) throw std::invalid_argument("an: n must be positive");
  return coefficient_vector(n)[static_cast<std::size_t>(n)];
}

const CMNewform& newform_F() {
  static const CMNewform F;
  return F;
}

QSeries twist(std::int64_t d, std::int64_t limit) {
  if (d == 0 || !is_squarefree(d)) throw std::invalid_argument("twist: d must be squarefree and nonzero");
  const auto a = newform_F().coefficient_vector(limit);
  QSeries out(limit);
  for (std::int64_t n = 1; n <= limit; ++n)
    out.set(n, Rational(static_cast<long>(a[static_cast<std::size_t>(n)] * kronecker(d, n))));
  return out;
}

QSeries old_form(std::int64_t limit) {
  const auto a = newform_F().coefficient_vector(limit);
  QSeries out(limit);
  for (std::int64_t n = 1; n <= limit; ++n) {
    std::int64_t b = a[static_cast<std::size_t>(n)];
    if (n % 2 == 0) b -= 2 * a[static_cast<std::size_t>(n / 2)];
    out.set(n, Rational(static_cast<long>(b)));
  }
  return out;
}

bool two_torsion_check(std::int64_t d) {
  if (d == 0 || !is_squarefree(d)) throw std::invalid_argument("two_torsion_check: d must be squarefree and nonzero");
  const __int128 x = 7 * static_cast<__int128>(d);
  const __int128 dd = d;
  return x * x * x - 35 * dd * dd * x - 98 * dd * dd * dd == 0;
}

}  // namespace x49
