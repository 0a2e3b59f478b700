#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "x49/qseries.hpp"
#include "x49/theta.hpp"

namespace x49 {

struct SearchConstraints {
  std::int64_t max_entry = 98;  ///< bound on |entry|
  std::int64_t level_divides = 196;
  std::int64_t required_squarefree_kernel = 7;
  bool diagonal_only = false;
  /// Keep only forms whose level equals level_divides, not a proper divisor.
  bool exact_level = true;
  /// Enumerate one representative per signed-permutation orbit directly.
  /// When false every matrix is visited and orbits are merged afterwards.
  bool reduce_symmetry = true;
};

/// Lexicographically least upper triangle (a, b, c, d, e, f) over the 48
/// signed permutations of the variables.
TernaryForm canonical_form(const TernaryForm& form);

/// Canonical representatives of all candidate Gram matrices, sorted lexicographically.
std::vector<TernaryForm> enumerate_candidates(const SearchConstraints& c);

/// For each target, the rational combination of the pool's theta series equal
/// to it through q^upto, if any.
std::vector<std::optional<std::vector<Rational>>> decompose_targets(const std::vector<QSeries>& targets,
                                                                    const std::vector<TernaryForm>& pool,
                                                                    std::int64_t upto);

}  // namespace x49
