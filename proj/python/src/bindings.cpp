#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "crgstir/cli.hpp"
#include "crgstir/coinvariant.hpp"
#include "crgstir/lattice.hpp"
#include "crgstir/stirling.hpp"
#include "crgstir/suites.hpp"

namespace py = pybind11;
using namespace crgstir;

namespace {

py::int_ big(const BigInt& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::list coeffs(const IntPoly& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(big(c));
  return out;
}

py::list coeffs(const BivarPoly& p) {
  py::list out;
  for (const auto& c : p.t_coeffs()) out.append(coeffs(c));
  return out;
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = crgstir::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

py::dict lattice(int m, int n, bool barred) {
  auto L = PartitionLattice::build(m, n, barred);
  py::list elements, mobius;
  for (std::size_t i = 0; i < L.size(); ++i) {
    elements.append(L.element(i).to_string());
    mobius.append(big(L.mobius(i)));
  }
  auto w = whitney_numbers(L);
  py::list second, first;
  for (const auto& x : w.second) second.append(big(x));
  for (const auto& x : w.first) first.append(big(x));
  py::dict d;
  d["elements"] = elements;
  d["mobius"] = mobius;
  d["hasse"] = L.hasse_edges();
  d["whitney_second"] = second;
  d["whitney_first"] = first;
  return d;
}

py::list suite(const std::string& name, std::optional<std::string> m, std::optional<std::string> n) {
  SuiteOptions o;
  if (m) o.m = parse_range(*m);
  if (n) o.n = parse_range(*n);
  py::list out;
  for (const auto& r : run_suite(name, o)) {
    py::dict d;
    d["id"] = r.id;
    d["params"] = r.params;
    d["status"] = std::string(status_name(r.status));
    d["witness"] = r.witness;
    d["detail"] = r.detail;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "G(m,p,n) Stirling tables, lattices and checks";

  py::register_exception<CapExceeded>(mod, "CapExceeded", PyExc_RuntimeError);

  mod.def("q_stirling2", [](int m, int n, int k, bool barred) { return coeffs(q_stirling2(m, n, k, barred)); },
          py::arg("m"), py::arg("n"), py::arg("k"), py::arg("barred") = false);
  mod.def("q_stirling1", [](int m, int n, int k) { return coeffs(q_stirling1(m, n, k)); });
  mod.def("super_q_stirling", [](int m, int n, int k) { return coeffs(super_q_stirling(m, n, k)); });
  mod.def("ordered_q_stirling",
          [](int m, int n, int k, const std::string& variant) { return coeffs(ordered_q_stirling(m, n, k, parse_variant(variant))); },
          py::arg("m"), py::arg("n"), py::arg("k"), py::arg("variant") = "lattice");
  mod.def("stirling2", [](int m, int n, int k, bool barred) { return big(stirling2(m, n, k, barred)); }, py::arg("m"),
          py::arg("n"), py::arg("k"), py::arg("barred") = false);
  mod.def("stirling1", [](int m, int n, int k) { return big(stirling1(m, n, k)); });
  mod.def("alternating_sum", [](const std::string& variant, int m, int n) { return coeffs(alternating_sum(parse_variant(variant), m, n)); });

  mod.def("enumerate_partitions", [](int m, int n, int k, bool barred) {
    std::vector<std::pair<std::string, int>> out;
    for_each_partition(m, n, k, barred, [&](const ColoredPartition& p) { out.emplace_back(p.to_string(), inv(p)); });
    return out;
  }, py::arg("m"), py::arg("n"), py::arg("k"), py::arg("barred") = false);
  mod.def("inv", [](const std::string& text, int m, bool barred) { return inv(parse_partition(text, m, barred)); },
          py::arg("partition"), py::arg("m"), py::arg("barred") = false);
  mod.def("standard_form", [](const std::string& text, int m, bool barred) { return parse_partition(text, m, barred).to_string(); },
          py::arg("partition"), py::arg("m"), py::arg("barred") = false);

  mod.def("lattice", &lattice, py::arg("m"), py::arg("n"), py::arg("barred") = false);

  mod.def("artin_hilbert", [](int m, int n) { return coeffs(artin_hilbert(m, n)); });
  mod.def("super_artin_hilbert", [](int m, int n) { return coeffs(super_artin_hilbert(m, n)); });
  mod.def("super_stirling_generating", [](int m, int n) { return coeffs(super_stirling_generating(m, n)); });
  mod.def("beta_phi", [](const std::vector<int>& T, int m, int n) {
    auto r = beta_phi(T, m, n);
    return py::make_tuple(r.beta, r.phi);
  });

  mod.def("suite_names", &suite_names);
  mod.def("run_suite", &suite, py::arg("name"), py::arg("m") = py::none(), py::arg("n") = py::none());
  mod.def("run_cli", &run_cli, py::arg("args"));
}
