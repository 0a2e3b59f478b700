#include "x49/criterion.hpp"

#include <stdexcept>

#include "x49/arith.hpp"

namespace x49 {

namespace {

std::int64_t fixture_coefficient(std::pair<std::int64_t, std::int64_t> counts, CriterionCase c) {
  const auto diff = counts.first - counts.second;
  if (diff % 2 != 0) throw std::logic_error("representation counts have different parity");
  return c == CriterionCase::iii ? -diff / 2 : diff / 2;
}

std::pair<std::int64_t, std::int64_t> counts_for(CriterionCase c, std::int64_t d) {
  const auto& [q1, q2] = case_forms(c);
  return {representation_count(q1, d), representation_count(q2, d)};
}

}  // namespace

std::string to_string(CriterionCase c) {
  switch (c) {
    case CriterionCase::i: return "i";
    case CriterionCase::ii: return "ii";
    case CriterionCase::iii: return "iii";
    case CriterionCase::negative_d: return "negative-d";
    case CriterionCase::both_ii_and_iii: return "both-ii-and-iii";
  }
  return "unknown";
}

Reduction reduce_discriminant(std::int64_t d) {
  if (d == 0) throw std::invalid_argument("d must be nonzero");
  const auto parts = squarefree_decompose(d);
  if (parts.square_root != 1)
    throw std::invalid_argument(std::to_string(d) + " is not squarefree: divisible by " +
                                std::to_string(parts.square_root) + "^2");
  Reduction r{d, {}};
  if (d % 7 == 0) {
    r.d = -d / 7;
    r.trail.push_back("Q(sqrt(" + std::to_string(d) + ")) -> Q(sqrt(" + std::to_string(r.d) + ")) since -7 * " +
                      std::to_string(r.d) + " = " + std::to_string(d));
  }
  if (r.d < 0) r.trail.push_back("negative discriminant: the twist has root number -1");
  return r;
}

CriterionCase classify(std::int64_t d) {
  if (d <= 0 || d % 7 == 0 || !is_squarefree(d))
    throw std::invalid_argument("classify: d must be positive, squarefree and coprime to 7");
  if (kronecker(d, 7) == 1) return CriterionCase::i;
  const bool ii = d % 8 != 5;
  const bool iii = d % 4 == 1;
  if (ii && iii) return CriterionCase::both_ii_and_iii;
  return ii ? CriterionCase::ii : CriterionCase::iii;
}

const std::pair<TernaryForm, TernaryForm>& case_forms(CriterionCase c) {
  // Coefficients of x^2, y^2, z^2, xy, xz, yz.
  static const std::pair<TernaryForm, TernaryForm> forms_i{
      TernaryForm::from_polynomial({28, 1, 14, 0, 14, 0}), TernaryForm::from_polynomial({49, 2, 4, 0, 0, 2})};
  static const std::pair<TernaryForm, TernaryForm> forms_ii{
      TernaryForm::from_polynomial({12, 3, 12, 2, 10, 2}), TernaryForm::from_polynomial({17, 5, 5, 2, -2, 4})};
  // The yz coefficient is +4, as in the lemma matrix with the same theta series.
  static const std::pair<TernaryForm, TernaryForm> forms_iii{
      TernaryForm::from_polynomial({13, 12, 12, 8, -8, 4}), TernaryForm::from_polynomial({17, 5, 17, 2, 6, 2})};
  switch (c) {
    case CriterionCase::i: return forms_i;
    case CriterionCase::ii: return forms_ii;
    case CriterionCase::iii: return forms_iii;
    default: throw std::invalid_argument("case_forms: no forms for case " + to_string(c));
  }
}

int case_fixture_index(CriterionCase c) {
  switch (c) {
    case CriterionCase::i: return 2;
    case CriterionCase::ii: return 3;
    case CriterionCase::iii: return 1;
    default: throw std::invalid_argument("case_fixture_index: no fixture for case " + to_string(c));
  }
}

CriterionReport predict(std::int64_t d) {
  const Reduction red = reduce_discriminant(d);
  CriterionReport r;
  r.input_d = d;
  r.reduced_d = red.d;
  r.reduction_trail = red.trail;
  if (red.d < 0) {
    r.criterion_case = CriterionCase::negative_d;
    r.predicted_positive_rank = true;
    return r;
  }
  r.criterion_case = classify(red.d);
  if (r.criterion_case == CriterionCase::both_ii_and_iii) {
    const auto ii = counts_for(CriterionCase::ii, red.d);
    const auto iii = counts_for(CriterionCase::iii, red.d);
    if ((ii.first == ii.second) != (iii.first == iii.second))
      throw std::logic_error("cases ii and iii disagree for d = " + std::to_string(red.d));
    r.case_ii_counts = ii;
    r.counts = iii;
    r.coefficient = fixture_coefficient(iii, CriterionCase::iii);
  } else {
    r.counts = counts_for(r.criterion_case, red.d);
    r.coefficient = fixture_coefficient(r.counts, r.criterion_case);
  }
  r.predicted_positive_rank = r.counts.first == r.counts.second;
  return r;
}

const std::vector<CompanionRow>& companion_table() {
  using C = CriterionCase;
  static const std::vector<CompanionRow> rows = {
      {C::i, 1, 1, 0.9666},   {C::i, 51, -2, 1.0828},  {C::i, 29, 4, 0.7180},   {C::i, 15, 2, 1.9967},
      {C::i, 2, -1, 1.3670},  {C::i, 22, -2, 1.6487},  {C::i, 58, -2, 1.0154},  {C::i, 30, 2, 1.4118},
      {C::ii, 3, 1, 2.2323},  {C::ii, 31, -2, 2.777},  {C::ii, 34, 1, 0.6631},  {C::ii, 6, -1, 1.5785},
      {C::ii, 26, 2, 3.0332}, {C::ii, 94, 2, 1.5952},  {C::iii, 17, -1, 0.4688}, {C::iii, 5, 1, 0.8646},
  };
  return rows;
}

CompanionRow companion(std::int64_t d) {
  auto c = classify(d);
  if (c == CriterionCase::both_ii_and_iii) c = CriterionCase::iii;
  // Rows match d when d2 has the same parity and the same residue of d (or d/2) mod 8.
  const auto key = [](std::int64_t x) { return x % 2 == 0 ? 8 + (x / 2) % 8 : x % 8; };
  for (const auto& row : companion_table())
    if (row.table == c && key(row.d2) == key(d)) return row;
  throw std::logic_error("no companion row for d = " + std::to_string(d));
}

}  // namespace x49
