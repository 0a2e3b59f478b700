#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "x49/qseries.hpp"

namespace x49 {

using Gram3 = std::array<std::array<std::int64_t, 3>, 3>;

enum class FormDefect { asymmetric, odd_diagonal, not_positive_definite };

std::string to_string(FormDefect defect);

class InvalidForm : public std::invalid_argument {
 public:
  explicit InvalidForm(FormDefect defect);
  FormDefect defect() const { return defect_; }

 private:
  FormDefect defect_;
};

/// Positive-definite ternary form Q(v) = v^T A v / 2 with A symmetric,
/// integral and even on the diagonal.
///
/// The Gram matrix is stored as its upper triangle (a, b, c, d, e, f):
///   A = [[a, b, c], [b, d, e], [c, e, f]],
///   Q(x, y, z) = a/2 x^2 + d/2 y^2 + f/2 z^2 + b xy + c xz + e yz.
class TernaryForm {
 public:
  /// Validates A; throws InvalidForm naming the first violated property.
  static TernaryForm validate(const Gram3& gram);
  static TernaryForm from_upper(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e,
                                std::int64_t f);
  /// Q = sum of the listed monomial coefficients, in the order x^2, y^2, z^2, xy, xz, yz.
  static TernaryForm from_polynomial(const std::array<std::int64_t, 6>& coeffs);

  const std::array<std::int64_t, 6>& upper() const { return upper_; }
  Gram3 gram() const;
  std::int64_t determinant() const;
  std::int64_t evaluate(std::int64_t x, std::int64_t y, std::int64_t z) const;
  std::string to_string() const;

  friend bool operator==(const TernaryForm&, const TernaryForm&) = default;

 private:
  explicit TernaryForm(const std::array<std::int64_t, 6>& upper) : upper_(upper) {}
  std::array<std::int64_t, 6> upper_;
};

/// Returns the first violated property of a candidate Gram matrix, if any.
std::optional<FormDefect> check_gram(const Gram3& gram);

/// Number of v in Z^3 with Q(v) = n, by direct enumeration of the ellipsoid Q <= n.
std::int64_t representation_count(const TernaryForm& form, std::int64_t n);

/// Representation numbers r_Q(0..limit) from a single sweep over Q(v) <= limit.
std::vector<std::int64_t> representation_numbers(const TernaryForm& form, std::int64_t limit);

/// Theta series sum r_Q(n) q^n through q^limit.
QSeries theta_series(const TernaryForm& form, std::int64_t limit);

struct LevelCharacter {
  std::int64_t level;             ///< least N with N A^{-1} integral, even diagonal
  std::int64_t character_label;   ///< det(2A) = 8 det A
  std::int64_t squarefree_kernel; ///< squarefree part of det(2A)
};

LevelCharacter level_and_character(const TernaryForm& form);

/// Gram matrices M_1..M_13 whose theta series decompose the weight-3/2
/// eigenforms (index 1-based; M_3 carries the corrected top-left entry 36).
const std::array<TernaryForm, 13>& lemma_matrices();
const TernaryForm& lemma_matrix(int index);

/// diag(98, 98, 14) and diag(98, 2, 14).
const TernaryForm& diagonal_form_a1();
const TernaryForm& diagonal_form_a2();

}  // namespace x49
