#include <doctest.h>

#include "x49/arith.hpp"
#include "x49/criterion.hpp"
#include "x49/fixtures.hpp"
#include "x49/halfint.hpp"
#include "x49/theta.hpp"

using namespace x49;

TEST_CASE("reduction") {
  CHECK(reduce_discriminant(14).d == -2);
  CHECK(reduce_discriminant(5).d == 5);
  CHECK(reduce_discriminant(5).trail.empty());
  CHECK(reduce_discriminant(-21).d == 3);
  CHECK(reduce_discriminant(-21).trail.size() == 1);
  CHECK_THROWS_AS(reduce_discriminant(0), std::invalid_argument);
  try {
    reduce_discriminant(45);
    FAIL("expected rejection");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("3^2") != std::string::npos);
  }
}

TEST_CASE("classification") {
  CHECK(classify(29) == CriterionCase::i);
  CHECK(classify(3) == CriterionCase::ii);
  CHECK(classify(5) == CriterionCase::iii);
  CHECK(classify(17) == CriterionCase::both_ii_and_iii);
  CHECK(classify(6) == CriterionCase::ii);
  CHECK_THROWS_AS(classify(7), std::invalid_argument);
  CHECK_THROWS_AS(classify(-1), std::invalid_argument);
}

TEST_CASE("predictions") {
  const auto one = predict(1);
  CHECK(one.counts == std::pair<std::int64_t, std::int64_t>{2, 0});
  CHECK_FALSE(one.predicted_positive_rank);
  CHECK(one.bsd_conditional);
  const auto neg = predict(-3);
  CHECK(neg.criterion_case == CriterionCase::negative_d);
  CHECK(neg.predicted_positive_rank);
  const auto r29 = predict(29);
  CHECK(r29.counts.first - r29.counts.second == 8);
  CHECK(r29.coefficient == 4);
  CHECK_FALSE(r29.predicted_positive_rank);
  const auto r11 = predict(11);
  CHECK(r11.predicted_positive_rank);
  CHECK(fixture("f2").coeff(11) == 0);
  CHECK(predict(14).reduced_d == -2);
  CHECK(predict(14).predicted_positive_rank);
  CHECK(predict(-21).reduced_d == 3);
  CHECK_THROWS_AS(predict(0), std::invalid_argument);
  CHECK_THROWS_AS(predict(18), std::invalid_argument);
}

TEST_CASE("literal forms are the lemma matrices") {
  CHECK(case_forms(CriterionCase::i).first == lemma_matrix(4));
  CHECK(case_forms(CriterionCase::i).second == lemma_matrix(7));
  CHECK(case_forms(CriterionCase::ii).first == lemma_matrix(12));
  CHECK(case_forms(CriterionCase::ii).second == lemma_matrix(13));
  CHECK(case_forms(CriterionCase::iii).first == lemma_matrix(1));
  CHECK(case_forms(CriterionCase::iii).second == lemma_matrix(2));
}

TEST_CASE("the -4yz variant of the first case iii form is a different lattice") {
  const auto variant = TernaryForm::from_polynomial({13, 12, 12, 8, -8, -4});
  CHECK(variant.determinant() == 12000);
  CHECK(lemma_matrix(1).determinant() == 10976);
  CHECK_FALSE(equal_through(theta_series(variant, 42), theta_series(lemma_matrix(1), 42), 42));
}

TEST_CASE("count parity and case overlap up to 500") {
  for (std::int64_t d = 1; d <= 500; ++d) {
    if (d % 7 == 0 || !is_squarefree(d)) continue;
    CAPTURE(d);
    const auto r = predict(d);  // throws if ii and iii disagree
    CHECK((r.counts.first - r.counts.second) % 2 == 0);
    if (r.case_ii_counts) CHECK((r.case_ii_counts->first - r.case_ii_counts->second) % 2 == 0);
  }
}

TEST_CASE("coefficients match the stored forms up to 42") {
  for (std::int64_t d = 1; d <= 42; ++d) {
    if (d % 7 == 0 || !is_squarefree(d)) continue;
    auto c = classify(d);
    const auto r = predict(d);
    if (c == CriterionCase::both_ii_and_iii) {
      const auto ii = r.case_ii_counts.value();
      CHECK((ii.first - ii.second) / 2 == fixture("f3").coeff(d));
      c = CriterionCase::iii;
    }
    CAPTURE(d);
    CHECK(r.coefficient == fixture("f" + std::to_string(case_fixture_index(c))).coeff(d));
  }
}

TEST_CASE("-7d gives the same prediction") {
  for (std::int64_t d = 1; d <= 100; ++d) {
    if (d % 7 == 0 || !is_squarefree(d)) continue;
    CAPTURE(d);
    const auto a = predict(d), b = predict(-7 * d);
    CHECK(b.reduced_d == d);
    CHECK(a.predicted_positive_rank == b.predicted_positive_rank);
    CHECK(a.counts == b.counts);
  }
}

TEST_CASE("companion rows") {
  CHECK(companion_table().size() == 16);
  auto row = companion(3 + 8 * 6);  // 51
  CHECK(row.d2 == 51);
  CHECK(row.expected_c == -2);
  CHECK(companion(17).d2 == 17);
  CHECK(companion(17).expected_L == 0.4688);
  CHECK(companion(26).d2 == 26);
  CHECK(companion(26).expected_c == 2);
  for (const auto& r : companion_table()) {
    CAPTURE(r.d2);
    CHECK(companion(r.d2).d2 == r.d2);
    CHECK(same_padic_square_class(companion(r.d2).d2, r.d2, 2));
    CHECK(predict(r.d2).coefficient == r.expected_c);
  }
  for (std::int64_t d = 1; d <= 300; ++d) {
    if (d % 7 == 0 || !is_squarefree(d)) continue;
    const auto r = companion(d);
    CAPTURE(d);
    CHECK(same_padic_square_class(d, r.d2, 2));
    CHECK(same_padic_square_class(d, r.d2, 7));
  }
}
