#include "x49/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace x49 {

namespace {

// (2/n) for odd n, indexed by n mod 8.
constexpr int kTwoTable[8] = {0, 1, 0, -1, 0, -1, 0, 1};

std::int64_t mod_nonneg(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Jacobi symbol for odd n > 0 and 0 <= a < n.
int jacobi(std::int64_t a, std::int64_t n) {
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      if ((n & 7) == 3 || (n & 7) == 5) result = -result;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

}  // namespace

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if ((a & 1) == 0 && (n & 1) == 0) return 0;

  int k = 1;
  int twos = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++twos;
  }
  if (twos & 1) k = kTwoTable[a & 7];
  if (n < 0) {
    n = -n;
    if (a < 0) k = -k;
  }
  if (n == 1) return k;
  return k * jacobi(mod_nonneg(a, n), n);
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::domain_error("isqrt of a negative number");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<__int128>(r) * r > n) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  if (n < 0) n = -n;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<std::int64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t size = out.size();
    std::int64_t pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < size; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SquarefreeParts squarefree_decompose(std::int64_t n) {
  if (n == 0) throw std::invalid_argument("squarefree_decompose: n must be nonzero");
  std::int64_t s = n < 0 ? -1 : 1;
  std::int64_t f = 1;
  for (auto [p, e] : factorize(n)) {
    for (int i = 0; i < e / 2; ++i) f *= p;
    if (e & 1) s *= p;
  }
  return {s, f};
}

bool is_squarefree(std::int64_t n) {
  if (n == 0) return false;
  for (auto [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

std::int64_t fundamental_discriminant(std::int64_t d) {
  if (!is_squarefree(d))
    throw std::invalid_argument("fundamental_discriminant: " + std::to_string(d) + " is not squarefree");
  return mod_nonneg(d, 4) == 1 ? d : 4 * d;
}

bool is_fundamental_discriminant(std::int64_t D) {
  if (D == 0 || D == 1) return false;
  const std::int64_t r = mod_nonneg(D, 4);
  if (r == 1) return is_squarefree(D);
  if (r != 0) return false;
  const std::int64_t m = D / 4;
  const std::int64_t rm = mod_nonneg(m, 4);
  return (rm == 2 || rm == 3) && is_squarefree(m);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t p = 3; p * p <= n; p += 2)
    if (n % p == 0) return false;
  return true;
}

std::vector<std::int32_t> smallest_prime_factors(std::int64_t limit) {
  std::vector<std::int32_t> spf(static_cast<std::size_t>(std::max<std::int64_t>(limit, 1) + 1), 0);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (spf[i] != 0) continue;
    for (std::int64_t j = i; j <= limit; j += i)
      if (spf[j] == 0) spf[j] = static_cast<std::int32_t>(i);
  }
  return spf;
}

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> out;
  if (limit < 2) return out;
  const auto spf = smallest_prime_factors(limit);
  for (std::int64_t i = 2; i <= limit; ++i)
    if (spf[i] == i) out.push_back(i);
  return out;
}

bool same_padic_square_class(std::int64_t d1, std::int64_t d2, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("same_padic_square_class: p = " + std::to_string(p) + " is not prime");
  if (d1 == 0 || d2 == 0) throw std::invalid_argument("same_padic_square_class: arguments must be nonzero");
  auto split = [p](std::int64_t d) {
    int m = 0;
    while (d % p == 0) {
      d /= p;
      ++m;
    }
    return std::pair{m, d};
  };
  const auto [m1, u1] = split(d1);
  const auto [m2, u2] = split(d2);
  if ((m1 - m2) % 2 != 0) return false;
  if (p == 2) return mod_nonneg(u1 - u2, 8) == 0;
  const std::int64_t prod = mod_nonneg(u1, p) * mod_nonneg(u2, p) % p;
  return kronecker(prod, p) == 1;
}

Character::Character(std::int64_t label, std::int64_t modulus) : label_(label), modulus_(modulus) {
  if (modulus <= 0) throw std::invalid_argument("Character: modulus must be positive");
}

Character Character::trivial(std::int64_t modulus) { return Character(1, modulus); }

Character Character::quadratic_field(std::int64_t d) {
  const std::int64_t D = fundamental_discriminant(d);
  return Character(D, D < 0 ? -D : D);
}

int Character::operator()(std::int64_t n) const {
  if (std::gcd(n, modulus_) != 1) return 0;
  return kronecker(label_, n);
}

int Character::at_ratio(std::int64_t numerator, std::int64_t denominator) const {
  if (denominator == 0) throw std::invalid_argument("Character::at_ratio: zero denominator");
  const std::int64_t g = std::gcd(numerator, denominator);
  // Quadratic: chi(1/b) = chi(b) whenever chi(b) is nonzero.
  return (*this)(numerator / g) * (*this)(denominator / g);
}

}  // namespace x49
