#include "x49/halfint.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "x49/fixtures.hpp"
#include "x49/theta.hpp"

namespace x49 {

namespace {

Rational rational_power(std::int64_t p, int e) {
  Rational out = 1;
  const Rational base(static_cast<long>(p));
  for (int i = 0; i < (e < 0 ? -e : e); ++i) out *= base;
  return e < 0 ? Rational(1 / out) : out;
}

int mod4(std::int64_t n) { return static_cast<int>(((n % 4) + 4) % 4); }

}  // namespace

HalfIntegralForm make_half_integral(QSeries series, int weight_num, std::int64_t level, Character character) {
  if (weight_num <= 0 || weight_num % 2 == 0)
    throw std::invalid_argument("half-integral weight numerator must be odd and positive");
  if (level <= 0 || level % 4 != 0) throw std::invalid_argument("half-integral weight level must be divisible by 4");
  return HalfIntegralForm{std::move(series), weight_num, level, character};
}

std::int64_t index_gamma0(std::int64_t N) {
  if (N < 1) throw std::invalid_argument("index_gamma0: N must be positive");
  std::int64_t index = 1;
  for (auto [p, e] : factorize(N)) {
    std::int64_t pe1 = 1;
    for (int i = 1; i < e; ++i) pe1 *= p;
    index *= pe1 * (p + 1);
  }
  return index;
}

std::int64_t sturm_bound(const Rational& weight, std::int64_t N, WeightKind kind) {
  const bool integral = weight.get_den() == 1;
  if (kind == WeightKind::integer && !integral) throw std::invalid_argument("sturm_bound: integer kind needs integer weight");
  if (kind != WeightKind::integer && weight.get_den() != 2)
    throw std::invalid_argument("sturm_bound: half-integral kinds need weight k/2 with k odd");
  if (sgn(weight) <= 0) throw std::invalid_argument("sturm_bound: weight must be positive");
  const Rational x = weight * Rational(static_cast<long>(index_gamma0(N))) / 12;
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q.get_si();
}

std::vector<int> kohnen_forbidden_classes(int lambda, int epsilon) {
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("kohnen: epsilon must be +1 or -1");
  const int sign = (lambda + 1) % 2 == 0 ? 1 : -1;
  return {2, mod4(sign * epsilon)};
}

std::vector<HalfIntegralForm> kohnen_project(const std::vector<HalfIntegralForm>& basis, int epsilon) {
  if (basis.empty()) return {};
  const auto& first = basis.front();
  for (const auto& f : basis)
    if (f.weight_num != first.weight_num || f.level != first.level || f.character.label() != first.character.label())
      throw std::invalid_argument("kohnen_project: forms must share weight, level and character");

  const std::int64_t bound = sturm_bound(Rational(first.weight_num, 2), first.level, WeightKind::kohnen);
  std::vector<QSeries> gens;
  for (const auto& f : basis) {
    if (f.series.trunc() < bound)
      throw std::invalid_argument("kohnen_project: truncation " + std::to_string(f.series.trunc()) +
                                  " is below the Sturm bound " + std::to_string(bound));
    gens.push_back(f.series);
  }
  const auto classes = kohnen_forbidden_classes(first.lambda(), epsilon);
  const auto forbidden = [&](std::int64_t n) {
    const int r = mod4(n);
    return r == classes[0] || r == classes[1];
  };
  const Subspace sub = constrained_subspace(gens, forbidden, bound);
  std::vector<HalfIntegralForm> out;
  for (const auto& s : sub.basis) out.push_back({s, first.weight_num, first.level, first.character});
  return out;
}

std::vector<OmegaPair> omega_set(std::int64_t N, const Character& chi) {
  if (N < 1) throw std::invalid_argument("omega_set: N must be positive");
  std::vector<OmegaPair> out;
  for (std::int64_t r = 2; r * r <= N; ++r) {
    if (N % (r * r) != 0) continue;
    // Primitive real characters mod r are (D/.) with |D| = r, D fundamental; odd iff D < 0.
    const std::int64_t D = -r;
    if (!is_fundamental_discriminant(D)) continue;
    for (std::int64_t t = 1; t * r * r <= N; ++t) {
      if (N % (t * r * r) != 0) continue;
      const std::int64_t coprime_to = 4 * N * r * t;
      bool same = true;
      for (std::int64_t n = 1; n <= 8 * N && same; ++n) {
        if (gcd(n, coprime_to) != 1) continue;
        same = chi(n) == kronecker(-t, n) * kronecker(D, n);
      }
      if (same) out.push_back({D, t});
    }
  }
  return out;
}

HalfIntegralForm unary_theta(std::int64_t phi_label, std::int64_t t, std::int64_t limit) {
  if (t < 1 || limit < 1) throw std::invalid_argument("unary_theta: t and limit must be positive");
  if (kronecker(phi_label, -1) != -1) throw std::invalid_argument("unary_theta: phi must be odd");
  QSeries s(limit);
  for (std::int64_t m = 1; t * m * m <= limit; ++m) s.set(t * m * m, Rational(static_cast<long>(kronecker(phi_label, m) * m)));
  const std::int64_t r = phi_label < 0 ? -phi_label : phi_label;
  return HalfIntegralForm{std::move(s), 3, 4 * t * r * r, Character(-t * phi_label, 4 * t * r * r)};
}

HalfIntegralForm hecke_Tp2(const HalfIntegralForm& f, std::int64_t p) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("hecke_Tp2: p must be an odd prime");
  if (f.level % p == 0) throw std::invalid_argument("hecke_Tp2: p divides the level");
  const std::int64_t p2 = p * p;
  if (f.series.trunc() < p2)
    throw std::invalid_argument("hecke_Tp2: truncation " + std::to_string(f.series.trunc()) + " is below p^2");

  const int lambda = f.lambda();
  const int chi_p = f.character(p);
  const Rational middle_scale = rational_power(p, lambda - 1);
  const Rational last_scale = Rational(chi_p * chi_p) * rational_power(p, 2 * lambda - 1);
  const std::int64_t sign = lambda % 2 == 0 ? 1 : -1;

  const std::int64_t out_trunc = f.series.trunc() / p2;
  QSeries out(out_trunc);
  for (std::int64_t n = 0; n <= out_trunc; ++n) {
    Rational b = f.series.coeff(p2 * n);
    const int symbol = kronecker(sign * n, p);
    if (chi_p != 0 && symbol != 0) b += Rational(chi_p * symbol) * middle_scale * f.series.coeff(n);
    if (n % p2 == 0) b += last_scale * f.series.coeff(n / p2);
    out.set(n, b);
  }
  return HalfIntegralForm{std::move(out), f.weight_num, f.level, f.character};
}

QSeries hecke_Tp_integer(const QSeries& F, std::int64_t p, int k, const Character& chi) {
  if (!is_prime(p)) throw std::invalid_argument("hecke_Tp_integer: p must be prime");
  if (F.trunc() < p) throw std::invalid_argument("hecke_Tp_integer: truncation is below p");
  const Rational scale = Rational(chi(p)) * rational_power(p, k - 1);
  const std::int64_t out_trunc = F.trunc() / p;
  QSeries out(out_trunc);
  for (std::int64_t n = 0; n <= out_trunc; ++n) {
    Rational b = F.coeff(n * p);
    if (n % p == 0) b += scale * F.coeff(n / p);
    out.set(n, b);
  }
  return out;
}

QSeries shimura_lift(const HalfIntegralForm& f, std::int64_t t, std::int64_t limit) {
  if (t < 1 || !is_squarefree(t)) throw std::invalid_argument("shimura_lift: t must be squarefree and positive");
  if (limit < 1) throw std::invalid_argument("shimura_lift: limit must be positive");
  if (f.series.trunc() < t * limit * limit)
    throw std::invalid_argument("shimura_lift: Sh_" + std::to_string(t) + " through q^" + std::to_string(limit) +
                                " needs coefficients through q^" + std::to_string(t * limit * limit) +
                                ", have q^" + std::to_string(f.series.trunc()));
  const int lambda = f.lambda();
  const std::int64_t twist = (lambda % 2 == 0 ? 1 : -1) * t;
  QSeries out(limit);
  for (std::int64_t n = 1; n <= limit; ++n) {
    Rational sum = 0;
    for (std::int64_t d : divisors(n)) {
      const int chi_t = f.character(d) * kronecker(twist, d);
      if (chi_t == 0) continue;
      const std::int64_t m = n / d;
      sum += Rational(chi_t) * rational_power(d, lambda - 1) * f.series.coeff(t * m * m);
    }
    out.set(n, sum);
  }
  return out;
}

const ThetaDecomposition& theta_decomposition(std::string_view name) {
  static const std::map<std::string, ThetaDecomposition, std::less<>> table = {
      {"f1", {{1, 2}, {Rational(-1, 2), Rational(1, 2)}}},
      {"f2", {{4, 7}, {Rational(1, 2), Rational(-1, 2)}}},
      {"f3", {{12, 13}, {Rational(1, 2), Rational(-1, 2)}}},
      {"g1",
       {{3, 4, 5, 6, 7, 8, 9, 10, 11},
        {Rational(-1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(-1),
         Rational(-1, 2), Rational(1, 4), Rational(1, 2)}}},
  };
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("no theta decomposition for " + std::string(name));
  return it->second;
}

QSeries lemma_theta(int index, std::int64_t limit) {
  static std::mutex mutex;
  static std::map<int, QSeries> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(index);
    if (it != cache.end() && it->second.trunc() >= limit) return it->second.truncated(limit);
  }
  QSeries s = theta_series(lemma_matrix(index), limit);
  std::lock_guard lock(mutex);
  auto& slot = cache.try_emplace(index, QSeries(0)).first->second;
  if (slot.trunc() < s.trunc()) slot = s;
  return s;
}

HalfIntegralForm extend_fixture(std::string_view name, std::int64_t limit) {
  const auto& dec = theta_decomposition(name);
  const QSeries& stored = fixture(name);
  const std::int64_t depth = std::max(limit, stored.trunc());
  std::vector<QSeries> thetas;
  for (int i : dec.matrices) thetas.push_back(lemma_theta(i, depth));
  QSeries combined = linear_combination(dec.coeffs, thetas);
  if (!equal_through(combined, stored, stored.trunc()))
    throw std::logic_error("theta decomposition of " + std::string(name) + " disagrees with the stored fixture");
  return make_half_integral(combined.truncated(limit));
}

}  // namespace x49
