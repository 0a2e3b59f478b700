#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "x49/arith.hpp"
#include "x49/cli.hpp"
#include "x49/cmform.hpp"
#include "x49/criterion.hpp"
#include "x49/fixtures.hpp"
#include "x49/halfint.hpp"
#include "x49/latticesearch.hpp"
#include "x49/lfun.hpp"
#include "x49/theta.hpp"
#include "x49/verify.hpp"

namespace py = pybind11;
using namespace x49;

namespace {

using Upper = std::array<std::int64_t, 6>;

TernaryForm to_form(const Upper& u) { return TernaryForm::from_upper(u[0], u[1], u[2], u[3], u[4], u[5]); }

// Coefficients as (numerator, denominator) pairs, index = exponent.
std::vector<std::pair<std::string, std::string>> to_pairs(const QSeries& s) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::int64_t n = 0; n <= s.trunc(); ++n) out.emplace_back(s.coeff(n).get_num().get_str(), s.coeff(n).get_den().get_str());
  return out;
}

WeightKind to_kind(const std::string& k) {
  if (k == "integer") return WeightKind::integer;
  if (k == "half_integral") return WeightKind::half_integral;
  if (k == "kohnen") return WeightKind::kohnen;
  throw std::invalid_argument("kind must be integer, half_integral or kohnen");
}

py::dict report_dict(const CriterionReport& r) {
  py::dict d;
  d["d"] = r.input_d;
  d["reduced_d"] = r.reduced_d;
  d["case"] = to_string(r.criterion_case);
  d["counts"] = py::make_tuple(r.counts.first, r.counts.second);
  d["positive_rank_predicted"] = r.predicted_positive_rank;
  d["bsd_conditional"] = r.bsd_conditional;
  d["coefficient"] = r.coefficient;
  d["reduction_trail"] = r.reduction_trail;
  return d;
}

}  // namespace

PYBIND11_MODULE(_x49, m) {
  m.doc() = "Rank of X0(49) over quadratic fields";

  py::register_exception<InvalidForm>(m, "InvalidForm", PyExc_ValueError);

  m.def("kronecker", &kronecker, py::arg("a"), py::arg("n"));
  m.def("fundamental_discriminant", &fundamental_discriminant, py::arg("d"));

  m.def("theta_series", [](const Upper& u, std::int64_t limit) { return representation_numbers(to_form(u), limit); },
        py::arg("gram"), py::arg("limit"), "Representation numbers r(0..limit) of the Gram upper triangle a,b,c,d,e,f.");
  m.def("representation_count", [](const Upper& u, std::int64_t n) { return representation_count(to_form(u), n); },
        py::arg("gram"), py::arg("n"));
  m.def("level_and_character", [](const Upper& u) {
    const auto lc = level_and_character(to_form(u));
    return py::dict(py::arg("level") = lc.level, py::arg("character") = lc.character_label,
                    py::arg("squarefree_kernel") = lc.squarefree_kernel);
  }, py::arg("gram"));
  m.def("lemma_matrix", [](int i) { return lemma_matrix(i).upper(); }, py::arg("index"));

  m.def("sturm_bound", [](long num, long den, std::int64_t N, const std::string& kind) {
    return sturm_bound(Rational(num, static_cast<unsigned long>(den)), N, to_kind(kind));
  }, py::arg("weight_num"), py::arg("weight_den"), py::arg("level"), py::arg("kind"));

  m.def("fixture_pairs", [](const std::string& name) { return to_pairs(fixture(name)); }, py::arg("name"));
  m.def("extend_fixture_pairs", [](const std::string& name, std::int64_t limit) {
    return to_pairs(extend_fixture(name, limit).series);
  }, py::arg("name"), py::arg("limit"));
  m.def("shimura_lift_pairs", [](const std::string& name, std::int64_t t, std::int64_t limit) {
    return to_pairs(shimura_lift(extend_fixture(name, t * limit * limit), t, limit));
  }, py::arg("name"), py::arg("t"), py::arg("limit"));

  m.def("ap", [](std::int64_t p) { return newform_F().ap(p); }, py::arg("p"));
  m.def("coefficients", [](std::int64_t limit) { return newform_F().coefficient_vector(limit); }, py::arg("limit"));

  m.def("l_value", [](std::int64_t d, double tol, std::optional<std::int64_t> terms) {
    LValueResult r;
    {
      py::gil_scoped_release release;
      r = l_value(d, tol, terms);
    }
    return py::dict(py::arg("value") = r.value, py::arg("terms_used") = r.terms_used,
                    py::arg("tail_bound") = r.tail_bound, py::arg("declared_zero") = r.declared_zero);
  }, py::arg("d"), py::arg("tol") = 1e-6, py::arg("terms") = py::none());
  m.def("c_factor", &c_factor, py::arg("d"));

  m.def("predict", [](std::int64_t d) { return report_dict(predict(d)); }, py::arg("d"));
  m.def("companion", [](std::int64_t d) {
    const auto r = companion(d);
    return py::dict(py::arg("d2") = r.d2, py::arg("expected_c") = r.expected_c, py::arg("expected_L") = r.expected_L);
  }, py::arg("d"));

  m.def("enumerate_candidates", [](std::int64_t max_entry, bool diagonal_only) {
    SearchConstraints sc;
    sc.max_entry = max_entry;
    sc.diagonal_only = diagonal_only;
    std::vector<Upper> out;
    for (const auto& f : enumerate_candidates(sc)) out.push_back(f.upper());
    return out;
  }, py::arg("max_entry"), py::arg("diagonal_only") = false, py::call_guard<py::gil_scoped_release>());

  m.def("verify", [](const std::string& suite) {
    py::list out;
    for (const auto& r : run_verify(suite)) {
      py::list checks;
      for (const auto& c : r.checks)
        checks.append(py::dict(py::arg("label") = c.label, py::arg("passed") = c.passed, py::arg("detail") = c.detail));
      out.append(py::dict(py::arg("suite") = r.suite, py::arg("passed") = r.passed(), py::arg("checks") = checks,
                          py::arg("elapsed_seconds") = r.elapsed_seconds));
    }
    return out;
  }, py::arg("suite") = "all");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
