#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "cycdesc/asymptotics.hpp"
#include "cycdesc/consec_patterns.hpp"
#include "cycdesc/cyclic_counts.hpp"
#include "cycdesc/errors.hpp"
#include "cycdesc/linear_counts.hpp"
#include "cycdesc/lyndon.hpp"
#include "cycdesc/verify.hpp"

namespace py = pybind11;
using namespace cycdesc;

namespace {

// Big integers cross the boundary as decimal text.
py::object to_py(const Count& c) { return py::reinterpret_steal<py::object>(PyLong_FromString(c.str().c_str(), nullptr, 10)); }

py::object to_py(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(numerator(r)), to_py(denominator(r)));
}

DescentSet make_set(int n, const std::vector<int>& elements) { return DescentSet::from_elements(n, elements); }

Rational to_rational(const py::handle& value) {
  // Accepts Fraction, int or a decimal string such as "0.25".
  if (py::isinstance<py::str>(value)) return parse_rational(value.cast<std::string>());
  const py::object frac = py::module_::import("fractions").attr("Fraction")(value);
  const std::string num = py::str(frac.attr("numerator"));
  const std::string den = py::str(frac.attr("denominator"));
  return Rational(Count(num), Count(den));
}

Family make_family(const std::string& spec, int n) { return Family::parse(spec, n); }

py::dict scan_dict(const ScanReport& r) {
  py::dict d;
  d["n"] = r.n;
  d["family"] = r.family;
  d["max_deviation"] = to_py(r.max_deviation);
  d["argmax_set"] = r.argmax_set.elements();
  d["member_count"] = to_py(r.member_count);
  d["elapsed_ms"] = r.elapsed.count();
  d["jobs"] = r.jobs;
  d["shards"] = r.shards;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact descent-set statistics of permutations and n-cycles";

  py::register_exception<CapacityError>(m, "CapacityError", PyExc_OverflowError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_AssertionError);
  // std::domain_error already maps to ValueError.

  m.def("alpha", [](int n, const std::vector<int>& s) { return to_py(alpha(make_set(n, s))); }, py::arg("n"),
        py::arg("elements") = std::vector<int>{}, "Permutations of [n] with descent set inside I.");
  m.def("beta", [](int n, const std::vector<int>& s) { return to_py(beta(make_set(n, s))); }, py::arg("n"),
        py::arg("elements") = std::vector<int>{}, "Permutations of [n] with descent set exactly I.");
  m.def("alpha_cyc", [](int n, const std::vector<int>& s) { return to_py(alpha_cyc(make_set(n, s))); },
        py::arg("n"), py::arg("elements") = std::vector<int>{}, "n-cycles with descent set inside I.");
  m.def("beta_cyc", [](int n, const std::vector<int>& s) { return to_py(beta_cyc(make_set(n, s))); }, py::arg("n"),
        py::arg("elements") = std::vector<int>{}, "n-cycles with descent set exactly I.");

  m.def("eulerian", [](int n, int k) { return to_py(eulerian(n, k)); }, py::arg("n"), py::arg("k"));
  m.def("cyclic_eulerian", [](int n, int k) { return to_py(cyclic_eulerian(n, k)); }, py::arg("n"), py::arg("k"));
  m.def("euler", [](int n) { return to_py(euler_zigzag(n)); }, py::arg("n"));
  m.def("generalized_euler", [](int n, int k) { return to_py(generalized_euler(n, k)); }, py::arg("n"),
        py::arg("k"));
  m.def("alternating_cycles", [](int n) { return to_py(alternating_cycles(n)); }, py::arg("n"));
  m.def("kz_cycles", [](int n, int k, bool check) { return to_py(kz_cycles(n, k, check)); }, py::arg("n"),
        py::arg("k"), py::arg("verify") = false);

  m.def("gamma", [](int n) { return to_py(gamma(n)); }, py::arg("n"));
  m.def("gamma_star", [](int n) { return to_py(gamma_star(n)); }, py::arg("n"));
  m.def("cycles_avoiding_incr3", [](int n) { return to_py(cycles_avoiding_incr3(n)); }, py::arg("n"));
  m.def("cycles_avoiding_decr3", [](int n) { return to_py(cycles_avoiding_decr3(n)); }, py::arg("n"));

  m.def("count_lyndon", [](int n, const std::vector<int>& mu) { return to_py(count_lyndon(n, mu)); }, py::arg("n"),
        py::arg("mu"));
  m.def(
      "count_words_by_type",
      [](const std::vector<int>& lambda, const std::vector<int>& mu) {
        return to_py(count_words_by_type(Partition(lambda), mu));
      },
      py::arg("lam"), py::arg("mu"));
  m.def(
      "count_by_type_and_descents",
      [](const std::vector<int>& lambda, const std::vector<int>& s, bool exact) {
        const Partition p(lambda);
        return to_py(count_by_type_and_descents(p, make_set(p.n(), s), exact));
      },
      py::arg("lam"), py::arg("elements"), py::arg("exact") = true);

  m.def(
      "beta_deviation_scan",
      [](const std::string& family, int n, int jobs) {
        const Family f = make_family(family, n);
        ScanReport r;
        {
          py::gil_scoped_release release;
          r = beta_deviation_scan(f, jobs);
        }
        return scan_dict(r);
      },
      py::arg("family"), py::arg("n"), py::arg("jobs") = 1);
  m.def(
      "alpha_deviation_scan",
      [](int n, int jobs) {
        AlphaScanReport r;
        {
          py::gil_scoped_release release;
          r = alpha_deviation_scan(n, jobs);
        }
        py::dict d = scan_dict(r.scan);
        d["divisor_count"] = r.divisor_count;
        d["within_bound"] = r.within_bound;
        return d;
      },
      py::arg("n"), py::arg("jobs") = 1);
  m.def(
      "bound_checks",
      [](int n) {
        const auto r = bound_checks(n);
        py::dict d;
        d["n"] = r.n;
        d["passed"] = r.passed;
        d["checks"] = r.checks;
        d["failures"] = r.failures;
        return d;
      },
      py::arg("n"));
  m.def(
      "almost_all_fraction", [](int n, const py::object& eps) { return to_py(almost_all_fraction(n, to_rational(eps))); },
      py::arg("n"), py::arg("epsilon"));

  m.def("verify_suites", [] {
    std::vector<std::string> out;
    for (auto s : verify_suites()) out.emplace_back(s);
    return out;
  });
  m.def(
      "verify",
      [](const std::string& suite, int max_n) {
        VerifyReport r;
        {
          py::gil_scoped_release release;
          r = run_suite(suite, max_n);
        }
        py::dict d;
        d["suite"] = r.suite;
        d["max_n"] = r.max_n;
        d["passed"] = r.passed;
        d["checks"] = r.checks;
        d["first_failure"] = r.first_failure;
        return d;
      },
      py::arg("suite"), py::arg("max_n"));
}
