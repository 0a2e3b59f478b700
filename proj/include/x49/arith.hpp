#pragma once

#include <cstdint>
#include <vector>

namespace x49 {

/// Kronecker symbol (a/n), defined for every integer pair.
int kronecker(std::int64_t a, std::int64_t n);

struct SquarefreeParts {
  std::int64_t squarefree;  ///< carries the sign of the input
  std::int64_t square_root; ///< positive; input = squarefree * square_root^2
};

/// Writes n = s * f^2 with s squarefree. Throws std::invalid_argument for n = 0.
SquarefreeParts squarefree_decompose(std::int64_t n);

bool is_squarefree(std::int64_t n);

/// Discriminant of Q(sqrt(d)) for squarefree d: d if d = 1 mod 4, else 4d.
std::int64_t fundamental_discriminant(std::int64_t d);

bool is_fundamental_discriminant(std::int64_t D);

/// True when d1/d2 is a nonzero square in Q_p.
bool same_padic_square_class(std::int64_t d1, std::int64_t d2, std::int64_t p);

bool is_prime(std::int64_t n);

/// Primes p <= limit, ascending.
std::vector<std::int64_t> primes_up_to(std::int64_t limit);

/// Smallest-prime-factor table for 0..limit (entries 0 and 1 are 0).
std::vector<std::int32_t> smallest_prime_factors(std::int64_t limit);

/// floor(sqrt(n)) for n >= 0, exact.
std::int64_t isqrt(std::int64_t n);

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// Prime factorization as (p, e) pairs with ascending p; |n| is factored.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// Positive divisors of n > 0, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

/// A real Dirichlet character n -> (label / n).
///
/// Every character used here is quadratic, so evaluation at a ratio a/b is
/// taken as chi(a') * chi(b') with a'/b' = a/b in lowest terms
/// (chi(b')^{-1} = chi(b') when chi(b') != 0).
class Character {
 public:
  Character(std::int64_t label, std::int64_t modulus);

  /// Trivial character with the given modulus (zero on non-units).
  static Character trivial(std::int64_t modulus);
  /// The character of Q(sqrt(d)), labelled by its fundamental discriminant.
  static Character quadratic_field(std::int64_t d);

  std::int64_t label() const { return label_; }
  std::int64_t modulus() const { return modulus_; }

  int operator()(std::int64_t n) const;
  int at_ratio(std::int64_t numerator, std::int64_t denominator) const;

 private:
  std::int64_t label_;
  std::int64_t modulus_;
};

}  // namespace x49
