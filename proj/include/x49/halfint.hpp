#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "x49/arith.hpp"
#include "x49/qseries.hpp"

namespace x49 {

/// A q-expansion of weight weight_num/2 on Gamma_0(level) with a real character.
struct HalfIntegralForm {
  QSeries series{0};
  int weight_num = 3;
  std::int64_t level = 196;
  Character character{28, 28};

  /// lambda with weight = lambda + 1/2.
  int lambda() const { return (weight_num - 1) / 2; }
};

/// Weight-3/2 form of level 196 with character (28/.), the setting of every
/// stored half-integral fixture. Throws if the level is not divisible by 4.
HalfIntegralForm make_half_integral(QSeries series, int weight_num = 3, std::int64_t level = 196,
                                    Character character = Character(28, 28));

std::int64_t index_gamma0(std::int64_t N);

enum class WeightKind { integer, half_integral, kohnen };

/// ceil(weight / 12 * [SL2(Z) : Gamma_0(N)]). For the Kohnen kind only the two
/// forbidden residue classes mod 4 need to be inspected up to this bound.
std::int64_t sturm_bound(const Rational& weight, std::int64_t N, WeightKind kind);

/// Residue classes mod 4 on which plus-space coefficients vanish: {2, (-1)^(lambda+1) eps mod 4}.
std::vector<int> kohnen_forbidden_classes(int lambda, int epsilon);

/// Basis of the plus subspace of span(basis) with the given epsilon.
std::vector<HalfIntegralForm> kohnen_project(const std::vector<HalfIntegralForm>& basis, int epsilon);

struct OmegaPair {
  std::int64_t phi_label;  ///< phi = (phi_label / .), a primitive odd real character
  std::int64_t t;

  friend bool operator==(const OmegaPair&, const OmegaPair&) = default;
};

/// Pairs (phi, t): phi primitive real mod r with phi(-1) = -1, 4 t r^2 | 4N, and
/// chi = (-t/.) phi as characters mod N.
std::vector<OmegaPair> omega_set(std::int64_t N, const Character& chi);

/// sum_{m >= 1} phi(m) m q^{t m^2} through q^limit.
HalfIntegralForm unary_theta(std::int64_t phi_label, std::int64_t t, std::int64_t limit);

/// Hecke operator T(p^2) on weight lambda + 1/2. Output truncation is floor(trunc / p^2).
HalfIntegralForm hecke_Tp2(const HalfIntegralForm& f, std::int64_t p);

/// Hecke operator T(p) on integer weight k with character chi. Truncation shrinks to floor(trunc / p).
QSeries hecke_Tp_integer(const QSeries& F, std::int64_t p, int k, const Character& chi);

/// Shimura lift Sh_t through q^limit; needs f through q^(t * limit^2).
QSeries shimura_lift(const HalfIntegralForm& f, std::int64_t t, std::int64_t limit);

struct ThetaDecomposition {
  std::vector<int> matrices;  ///< 1-based lemma matrix indices
  std::vector<Rational> coeffs;
};

/// Theta-series decomposition of f1, f2, f3 or g1.
const ThetaDecomposition& theta_decomposition(std::string_view name);

/// Evaluates the theta decomposition of f1/f2/f3/g1 through q^limit after
/// checking it against the stored fixture through q^42; a mismatch throws
/// std::logic_error.
HalfIntegralForm extend_fixture(std::string_view name, std::int64_t limit);

/// Cached theta series of lemma matrix `index` through at least q^limit.
QSeries lemma_theta(int index, std::int64_t limit);

}  // namespace x49
