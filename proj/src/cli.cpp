#include "x49/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "x49/arith.hpp"
#include "x49/criterion.hpp"
#include "x49/fixtures.hpp"
#include "x49/halfint.hpp"
#include "x49/latticesearch.hpp"
#include "x49/lfun.hpp"
#include "x49/theta.hpp"
#include "x49/verify.hpp"

namespace x49 {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ordered_json rational_json(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_si();
  return r.get_str();
}

ordered_json gram_json(const TernaryForm& f) {
  ordered_json g = ordered_json::array();
  for (const auto& row : f.gram()) g.push_back(row);
  return g;
}

ordered_json criterion_json(const CriterionReport& r, bool explain, bool with_lvalue) {
  ordered_json j;
  j["d"] = r.input_d;
  j["reduced_d"] = r.reduced_d;
  j["case"] = to_string(r.criterion_case);
  j["counts"] = {r.counts.first, r.counts.second};
  j["positive_rank_predicted"] = r.predicted_positive_rank;
  j["bsd_conditional"] = r.bsd_conditional;
  if (!explain) return j;
  j["reduction_trail"] = r.reduction_trail;
  if (r.criterion_case == CriterionCase::negative_d) return j;
  if (r.case_ii_counts) j["case_ii_counts"] = {r.case_ii_counts->first, r.case_ii_counts->second};
  const auto c = r.criterion_case == CriterionCase::both_ii_and_iii ? CriterionCase::iii : r.criterion_case;
  const int i = case_fixture_index(c);
  const auto f = extend_fixture("f" + std::to_string(i), std::max<std::int64_t>(42, r.reduced_d));
  j["fixture"] = "f" + std::to_string(i);
  j["coefficient"] = rational_json(f.series.coeff(r.reduced_d));
  const auto row = companion(r.reduced_d);
  j["companion"] = {{"d2", row.d2}, {"expected_c", row.expected_c}, {"expected_L", row.expected_L}};
  if (with_lvalue) {
    const auto lv = l_value(r.reduced_d, 1e-6);
    j["l_value"] = {{"value", lv.value}, {"terms_used", lv.terms_used}, {"tail_bound", lv.tail_bound}};
  }
  return j;
}

void print_criterion_table(const ordered_json& j, std::ostream& out) {
  for (const auto& [key, value] : j.items()) out << std::left << std::setw(26) << key << value.dump() << '\n';
}

std::int64_t parse_d(const std::string& s) {
  std::size_t pos = 0;
  std::int64_t d = 0;
  try {
    d = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("d must be an integer, got '" + s + "'");
  }
  if (pos != s.size()) throw UsageError("d must be an integer, got '" + s + "'");
  return d;
}

std::array<std::int64_t, 6> parse_gram(const std::string& s) {
  std::array<std::int64_t, 6> u{};
  std::stringstream ss(s);
  std::string item;
  std::size_t k = 0;
  while (std::getline(ss, item, ',')) {
    if (k == 6) throw UsageError("--gram takes exactly six integers a,b,c,d,e,f");
    u[k++] = parse_d(item);
  }
  if (k != 6) throw UsageError("--gram takes exactly six integers a,b,c,d,e,f");
  return u;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank of X0(49) over quadratic fields"};
  app.require_subcommand(1);

  std::string d_text;
  bool explain = false, json = false, with_lvalue = false;
  auto* crit = app.add_subcommand("criterion", "Predict whether E(Q(sqrt d)) has positive rank");
  crit->add_option("d", d_text, "Nonzero squarefree integer")->required();
  crit->add_flag("--explain", explain, "Add companion row, f_i coefficient and reduction trail");
  crit->add_flag("--lvalue", with_lvalue, "With --explain, also evaluate L(F_d, 1)");
  crit->add_flag("--json", json, "JSON output");

  double tol = 1e-6;
  std::int64_t terms = 0;
  auto* lv = app.add_subcommand("lvalue", "Central value L(F_d, 1)");
  lv->add_option("d", d_text, "Squarefree integer coprime to 7")->required();
  lv->add_option("--tol", tol, "Tail bound target (>= 1e-8)");
  lv->add_option("--terms", terms, "Fixed number of terms");
  lv->add_flag("--json", json, "JSON output");

  std::string gram_text;
  std::int64_t limit = 0;
  auto* th = app.add_subcommand("theta", "Theta series of an even ternary Gram matrix");
  th->add_option("--gram", gram_text, "Upper triangle a,b,c,d,e,f of [[a,b,c],[b,d,e],[c,e,f]]")->required();
  th->add_option("--limit", limit, "Last exponent")->required()->check(CLI::PositiveNumber);
  th->add_flag("--json", json, "JSON output");

  SearchConstraints sc;
  std::string target;
  bool any_level = false;
  auto* sm = app.add_subcommand("search-matrices", "Enumerate Gram matrices of level 196 and kernel 7");
  sm->add_option("--max-entry", sc.max_entry, "Bound on |entries|")->check(CLI::Range(2, 100000));
  sm->add_flag("--diagonal-only", sc.diagonal_only, "Diagonal matrices only");
  sm->add_flag("--any-level", any_level, "Accept levels properly dividing 196");
  sm->add_option("--target", target, "Decompose f1, f2, f3 or g1 in the span of the results")
      ->check(CLI::IsMember({"f1", "f2", "f3", "g1"}));

  std::string suite = "all";
  auto* vf = app.add_subcommand("verify", "Run the reproduction checks");
  vf->add_option("--suite", suite, "ueda, theta, shimura, lfun, criterion or all")
      ->check(CLI::IsMember({"ueda", "theta", "shimura", "lfun", "criterion", "all"}));

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*crit) {
      const auto report = predict(parse_d(d_text));
      const auto j = criterion_json(report, explain, with_lvalue);
      if (json)
        out << j.dump(2) << '\n';
      else
        print_criterion_table(j, out);
      return kExitOk;
    }
    if (*lv) {
      const auto d = parse_d(d_text);
      const auto r = terms > 0 ? l_value(d, tol, terms) : l_value(d, tol);
      if (json) {
        ordered_json j{{"d", d},
                       {"value", r.value},
                       {"terms_used", r.terms_used},
                       {"tail_bound", r.tail_bound},
                       {"declared_zero", r.declared_zero}};
        out << j.dump(2) << '\n';
      } else if (r.declared_zero) {
        out << "L(F_" << d << ", 1) = 0 (root number -1)\n";
      } else {
        out << std::setprecision(10) << "L(F_" << d << ", 1) = " << r.value << "\nterms_used " << r.terms_used
            << "\ntail_bound " << std::setprecision(3) << r.tail_bound << '\n';
      }
      return kExitOk;
    }
    if (*th) {
      const auto u = parse_gram(gram_text);
      const auto form = TernaryForm::from_upper(u[0], u[1], u[2], u[3], u[4], u[5]);
      const auto counts = representation_numbers(form, limit);
      const auto lc = level_and_character(form);
      if (json) {
        ordered_json j{{"gram", gram_json(form)},
                       {"determinant", form.determinant()},
                       {"level", lc.level},
                       {"character", lc.character_label},
                       {"coefficients", counts}};
        out << j.dump() << '\n';
      } else {
        out << "det " << form.determinant() << ", level " << lc.level << ", character (" << lc.character_label
            << "/.)\n"
            << QSeries::from_integers(counts).to_string() << '\n';
      }
      return kExitOk;
    }
    if (*sm) {
      sc.exact_level = !any_level;
      const auto forms = enumerate_candidates(sc);
      ordered_json j;
      j["max_entry"] = sc.max_entry;
      j["matrices"] = ordered_json::array();
      for (const auto& f : forms) j["matrices"].push_back(gram_json(f));
      if (!target.empty()) {
        const auto& fx = fixture(target);
        const auto sol = decompose_targets({fx}, forms, fx.trunc()).front();
        ordered_json dec = ordered_json::array();
        if (sol)
          for (std::size_t i = 0; i < forms.size(); ++i)
            if (sgn((*sol)[i]) != 0) dec.push_back({{"gram", gram_json(forms[i])}, {"coeff", rational_json((*sol)[i])}});
        j["target"] = target;
        j["decomposition"] = sol ? dec : ordered_json(nullptr);
      }
      out << j.dump(2) << '\n';
      return kExitOk;
    }
    if (*vf) {
      bool ok = true;
      for (const auto& res : run_verify(suite)) {
        out << "[" << res.suite << "] " << std::fixed << std::setprecision(2) << res.elapsed_seconds << "s\n";
        for (const auto& c : res.checks) {
          out << "  " << (c.passed ? "ok   " : "FAIL ") << c.label;
          if (!c.detail.empty()) out << " (" << c.detail << ")";
          out << '\n';
        }
        ok = ok && res.passed();
      }
      return ok ? kExitOk : kExitCheckFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace x49
