#pragma once

#include <cstdint>
#include <optional>

namespace x49 {

struct LValueResult {
  double value = 0;
  std::int64_t terms_used = 0;
  double tail_bound = 0;
  bool declared_zero = false;  ///< sign of the functional equation is -1
};

/// 49 D^2 with D the discriminant of Q(sqrt(d)). Rejects 7 | d.
std::int64_t conductor_twist(std::int64_t d);

/// Root number of F twisted by Q(sqrt(d)): +1 for d > 0, -1 for d < 0.
int sign_twist(std::int64_t d);

/// L(F (x) chi_D, 1) for squarefree d coprime to 7, where chi_D is the
/// character of Q(sqrt(d)). Uses
///   2 sum_{n <= M} a_n chi_D(n) / n exp(-2 pi n / sqrt(N))
/// with M the least count whose tail bound 4 e^{-a(M+1)} / (1 - e^{-a}),
/// a = 2 pi / sqrt(N), is below tol. An explicit term count overrides M and
/// the tail bound is reported for it. tol below 1e-8 is rejected.
LValueResult l_value(std::int64_t d, double tol, std::optional<std::int64_t> terms = std::nullopt);

/// 2 if (d/2) = -1, else 1.
int c_factor(std::int64_t d);

/// Checks a_n [p does not divide n] = a_n - a_p a_{n/p} + chi(p) p a_{n/p^2}
/// for n <= limit, chi trivial mod 49.
bool euler_factor_identity(std::int64_t p, std::int64_t limit);

/// |c_{d1}^2 C(d2) L(d2) chi28(d2/d1) sqrt(d2) - c_{d2}^2 C(d1) L(d1) sqrt(d1)|
/// with c_d the coefficients of f_i (i in 1..3) and chi28 evaluated at d2/d1
/// in lowest terms. d1, d2 must lie in the same square classes of Q_2 and Q_7.
double waldspurger_ratio_residual(std::int64_t d1, std::int64_t d2, int i, double tol);

}  // namespace x49
