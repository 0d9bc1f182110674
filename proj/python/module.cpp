#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hermcodes/cli.hpp"
#include "hermcodes/codefile.hpp"
#include "hermcodes/constructions.hpp"
#include "hermcodes/equivalence.hpp"
#include "hermcodes/scheme.hpp"
#include "hermcodes/verify.hpp"

namespace py = pybind11;
using namespace hermcodes;

namespace {

py::object to_py(const BigInt& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<BigInt>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

DualMethod method_from(const std::string& m) {
  if (m == "dual-code") return DualMethod::DualCode;
  if (m == "eigenvalues") return DualMethod::Eigenvalues;
  if (m == "both") return DualMethod::Both;
  throw std::invalid_argument("method must be dual-code, eigenvalues or both");
}

HermCode construct(const std::string& family, std::uint64_t q, std::uint32_t n, std::uint32_t d, std::int64_t s) {
  ConstructionParams p;
  p.family = parse_family(family);
  p.q = q;
  p.n = n;
  p.d = d;
  p.s = s;
  validate(p);
  return build(tower_for(p), p);
}

}  // namespace

PYBIND11_MODULE(_hermcodes, m) {
  m.doc() = "Maximum additive Hermitian rank-metric codes";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<HermCode>(m, "Code")
      .def_property_readonly("label", &HermCode::label)
      .def_property_readonly("q", [](const HermCode& c) { return c.field().q(); })
      .def_property_readonly("n", &HermCode::n)
      .def_property_readonly("dimension", &HermCode::dimension)
      .def_property_readonly("declared_d", &HermCode::declared_d)
      .def_property_readonly("model",
                             [](const HermCode& c) { return c.model() == CodeModel::Matrix ? "matrix" : "poly"; })
      .def_property_readonly("size", [](const HermCode& c) { return to_py(c.size()); })
      .def("to_json", [](const HermCode& c) { return to_py(code_to_json(c)); })
      .def("dual", [](const HermCode& c) { return dual_code(c); })
      .def("same_span", &HermCode::same_span)
      .def("inner_distribution",
           [](const HermCode& c, std::uint64_t budget) { return to_py(inner_distribution(c, budget)); },
           py::arg("budget") = kDefaultBudget)
      .def(
          "dual_inner_distribution",
          [](const HermCode& c, const std::string& method, std::uint64_t budget) {
            return to_py(dual_inner_distribution(c, method_from(method), budget));
          },
          py::arg("method") = "dual-code", py::arg("budget") = kDefaultBudget)
      .def("design_strength", [](const HermCode& c, std::uint64_t budget) { return design_strength(c, budget); },
           py::arg("budget") = kDefaultBudget)
      .def("kernel_order", [](const HermCode& c) { return to_py(kernel_K(c).order); })
      .def("universal_support", &universal_support)
      .def(
          "verify",
          [](const HermCode& c, const std::vector<std::string>& checks, std::uint64_t budget) {
            py::list out;
            for (const auto& name : checks.empty() ? known_checks() : checks)
              out.append(to_py(report_to_json(run_check(c, name, budget), false)));
            return out;
          },
          py::arg("checks") = std::vector<std::string>{}, py::arg("budget") = kDefaultBudget)
      .def("__repr__", [](const HermCode& c) { return "<Code " + c.label() + " size " + c.size().str() + ">"; });

  m.def("construct", &construct, py::arg("family"), py::arg("q"), py::arg("n"), py::arg("d") = 2, py::arg("s") = 1);
  m.def("code_from_json", [](py::object obj) {
    return code_from_json(Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>()));
  });
  m.def("full_space", [](std::uint64_t q, std::uint32_t n) {
    const auto [p, e] = split_prime_power(q);
    return full_space(FieldTower::make(p, e, n));
  });
  m.def("eigenvalues", [](std::uint64_t q, std::uint32_t n, std::uint64_t budget) {
    const auto [p, e] = split_prime_power(q);
    py::list rows;
    for (const auto& row : eigenvalues(FieldTower::make(p, e, n), budget).q) rows.append(to_py(row));
    return rows;
  }, py::arg("q"), py::arg("n"), py::arg("budget") = kDefaultBudget);
  m.def("neg_q_binom", [](int mm, int l, std::int64_t q) { return to_py(neg_q_binom(mm, l, q)); });
  m.def("theorem3_distribution", [](int n, int d, std::int64_t q, py::int_ size) {
    return to_py(theorem3_distribution(n, d, q, BigInt(py::str(size).cast<std::string>())));
  });
  m.def("compare_fingerprints", [](const HermCode& a, const HermCode& b) {
    const auto cmp = compare_fingerprints(invariant_fingerprint(a), invariant_fingerprint(b));
    return py::make_tuple(cmp.verdict, cmp.differences);
  });
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<std::string> full{"hermcodes"};
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : full) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
