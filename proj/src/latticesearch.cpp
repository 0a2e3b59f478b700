#include "x49/latticesearch.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

#include "x49/arith.hpp"

namespace x49 {

namespace {

using Upper = std::array<std::int64_t, 6>;

Upper transform(const Gram3& g, const std::array<int, 3>& perm, const std::array<int, 3>& sign) {
  auto at = [&](int i, int j) { return sign[i] * sign[j] * g[perm[i]][perm[j]]; };
  return {at(0, 0), at(0, 1), at(0, 2), at(1, 1), at(1, 2), at(2, 2)};
}

// Determinants T dividing level^3 with squarefree(8T) = kernel.
std::vector<std::int64_t> admissible_determinants(const SearchConstraints& c) {
  const std::int64_t cube = c.level_divides * c.level_divides * c.level_divides;
  std::vector<std::int64_t> out;
  for (auto T : divisors(cube))
    if (squarefree_decompose(8 * T).squarefree == c.required_squarefree_kernel) out.push_back(T);
  return out;
}

bool accept(const SearchConstraints& c, const TernaryForm& f) {
  const auto lc = level_and_character(f);
  if (c.level_divides % lc.level != 0) return false;
  if (c.exact_level && lc.level != c.level_divides) return false;
  return lc.squarefree_kernel == c.required_squarefree_kernel;
}

// Visits (a, b, c, d, e, f) with fixed a, given ranges for b and c, solving the
// determinant equation a e^2 - 2bc e + (T - adf + b^2 f + c^2 d) = 0 for e.
template <class Emit>
void scan_a(const SearchConstraints& sc, const std::vector<std::int64_t>& dets, std::int64_t a, Emit&& emit) {
  const std::int64_t M = sc.max_entry;
  const bool sym = sc.reduce_symmetry;
  for (std::int64_t d = sym ? a : 2; d <= M; d += 2) {
    for (std::int64_t f = sym ? d : 2; f <= M; f += 2) {
      if (sc.diagonal_only) {
        const auto T = a * d * f;
        if (std::binary_search(dets.begin(), dets.end(), T)) emit(Upper{a, 0, 0, d, 0, f});
        continue;
      }
      const std::int64_t bmax = std::min(M, isqrt(a * d - 1));
      const std::int64_t cmax = std::min(M, isqrt(a * f - 1));
      for (std::int64_t b = sym ? 0 : -bmax; b <= bmax; ++b) {
        for (std::int64_t c = sym ? 0 : -cmax; c <= cmax; ++c) {
          const std::int64_t base = a * d * f - b * b * f - c * c * d;
          for (auto T : dets) {
            // a e^2 - 2 b c e + (T - base) = 0
            const std::int64_t k = T - base;
            const std::int64_t disc = b * b * c * c - a * k;  // quarter discriminant
            if (disc < 0) continue;
            const std::int64_t s = isqrt(disc);
            if (s * s != disc) continue;
            for (std::int64_t num : {b * c - s, b * c + s}) {
              if (num % a != 0) continue;
              const std::int64_t e = num / a;
              if (e < -M || e > M || d * f - e * e <= 0) continue;
              emit(Upper{a, b, c, d, e, f});
              if (s == 0) break;
            }
          }
        }
      }
    }
  }
}

}  // namespace

TernaryForm canonical_form(const TernaryForm& form) {
  const Gram3 g = form.gram();
  std::array<int, 3> perm{0, 1, 2};
  Upper best = form.upper();
  do {
    for (int s = 0; s < 8; ++s) {
      const std::array<int, 3> sign{s & 1 ? -1 : 1, s & 2 ? -1 : 1, s & 4 ? -1 : 1};
      best = std::min(best, transform(g, perm, sign));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return TernaryForm::from_upper(best[0], best[1], best[2], best[3], best[4], best[5]);
}

std::vector<TernaryForm> enumerate_candidates(const SearchConstraints& c) {
  if (c.max_entry < 2) throw std::invalid_argument("search: max_entry must be at least 2");
  if (c.level_divides <= 0 || c.level_divides % 4 != 0) throw std::invalid_argument("search: level must be divisible by 4");
  const auto dets = admissible_determinants(c);

  std::vector<std::int64_t> leading;
  for (std::int64_t a = 2; a <= c.max_entry; a += 2) leading.push_back(a);
  std::vector<std::set<Upper>> found(leading.size());

  // One task per leading diagonal entry, pulled from a shared counter.
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < leading.size();) {
      scan_a(c, dets, leading[i], [&](const Upper& u) {
        const auto f = TernaryForm::from_upper(u[0], u[1], u[2], u[3], u[4], u[5]);
        if (accept(c, f)) found[i].insert(canonical_form(f).upper());
      });
    }
  };
  const std::size_t workers = std::min<std::size_t>(leading.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work);
  for (auto& t : threads) t.join();

  std::set<Upper> all;
  for (auto& s : found) all.insert(s.begin(), s.end());
  std::vector<TernaryForm> out;
  for (const auto& u : all) out.push_back(TernaryForm::from_upper(u[0], u[1], u[2], u[3], u[4], u[5]));
  return out;
}

std::vector<std::optional<std::vector<Rational>>> decompose_targets(const std::vector<QSeries>& targets,
                                                                    const std::vector<TernaryForm>& pool,
                                                                    std::int64_t upto) {
  std::vector<QSeries> thetas;
  for (const auto& f : pool) thetas.push_back(theta_series(f, upto));
  std::vector<std::optional<std::vector<Rational>>> out;
  for (const auto& t : targets) {
    auto sol = solve_in_span(t, thetas, upto);
    if (sol)
      out.emplace_back(sol->coeffs);
    else
      out.emplace_back(std::nullopt);
  }
  return out;
}

}  // namespace x49
