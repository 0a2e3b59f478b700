#pragma once

#include <cstdint>
#include <mutex>
#include <vector>

#include "x49/qseries.hpp"

namespace x49 {

/// The weight-2 newform F of level 49 attached to
/// E1: y^2 + xy = x^3 - x^2 - 2x - 1 (CM by Q(sqrt(-7))).
///
/// Coefficients are cached and shared between threads; the cache only grows
/// and its content does not depend on the order of requests.
class CMNewform {
 public:
  /// a_p = p + 1 - #E1(F_p). Returns 0 at the bad prime 7. Throws for composite p.
  std::int64_t ap(std::int64_t p) const;

  /// a_1 .. a_limit as integers (index 0 holds 0).
  std::vector<std::int64_t> coefficient_vector(std::int64_t limit) const;

  /// F through q^limit.
  QSeries coefficients(std::int64_t limit) const;

  /// a_n for n >= 1.
  std::int64_t an(std::int64_t n) const;

 private:
  mutable std::mutex mutex_;
  mutable std::vector<std::int64_t> a_;  // a_[n], valid for n < a_.size()
};

/// Process-wide instance.
const CMNewform& newform_F();

/// p + 1 - #E1(F_p) by enumeration of the long model.
std::int64_t count_ap_long_model(std::int64_t p);

/// a_p of E_d: y^2 = x^3 - 35 d^2 x - 98 d^3 by enumeration, for odd p not dividing 7d.
std::int64_t count_ap_short_model(std::int64_t d, std::int64_t p);

/// sum a_n (d/n) q^n through q^limit. d squarefree and nonzero.
QSeries twist(std::int64_t d, std::int64_t limit);

/// F_old = F(q) - 2 F(q^2), whose n-th coefficient is a_{2n}(F).
QSeries old_form(std::int64_t limit);

/// Whether (7d, 0) lies on y^2 = x^3 - 35 d^2 x - 98 d^3.
bool two_torsion_check(std::int64_t d);

}  // namespace x49
