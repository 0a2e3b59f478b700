#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "x49/theta.hpp"

namespace x49 {

enum class CriterionCase { i, ii, iii, negative_d, both_ii_and_iii };

std::string to_string(CriterionCase c);

struct Reduction {
  std::int64_t d;
  std::vector<std::string> trail;
};

/// d -> -d/7 when 7 | d. Throws for d = 0 or d with a square factor (named in the message).
Reduction reduce_discriminant(std::int64_t d);

/// Case of a positive squarefree d coprime to 7.
CriterionCase classify(std::int64_t d);

/// The two ternary forms compared in a case (i, ii or iii), first and second.
const std::pair<TernaryForm, TernaryForm>& case_forms(CriterionCase c);

/// Index (1..3) of the fixture f_i whose coefficient the case reads.
int case_fixture_index(CriterionCase c);

struct CriterionReport {
  std::int64_t input_d = 0;
  std::int64_t reduced_d = 0;
  std::vector<std::string> reduction_trail;
  CriterionCase criterion_case = CriterionCase::i;
  std::pair<std::int64_t, std::int64_t> counts{0, 0};
  /// c_d(f_i); counts from the second case when both ii and iii apply.
  std::int64_t coefficient = 0;
  /// Case ii counts when both ii and iii apply (counts then holds case iii).
  std::optional<std::pair<std::int64_t, std::int64_t>> case_ii_counts;
  bool predicted_positive_rank = false;
  bool bsd_conditional = true;
};

CriterionReport predict(std::int64_t d);

struct CompanionRow {
  CriterionCase table;  ///< i, ii or iii
  std::int64_t d2;
  std::int64_t expected_c;
  double expected_L;
};

/// Companion discriminant of d in the same square classes at 2 and 7, with
/// the expected coefficient and central L-value.
CompanionRow companion(std::int64_t d);

/// Every companion row, in table order.
const std::vector<CompanionRow>& companion_table();

}  // namespace x49
