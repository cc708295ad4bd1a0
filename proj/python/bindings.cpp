#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braess/analysis.hpp"
#include "braess/core.hpp"
#include "braess/document.hpp"
#include "braess/equilibrium.hpp"
#include "braess/errors.hpp"
#include "braess/oracle.hpp"
#include "braess/paradox.hpp"
#include "braess/piecewise.hpp"

namespace py = pybind11;
using namespace braess;

namespace {

FourNodeConfig make_config(const std::array<double, 5>& alpha, const std::array<double, 5>& beta) {
  return FourNodeConfig{alpha, beta};
}

Mode mode_of(bool relaxed) { return relaxed ? Mode::Relaxed : Mode::Strict; }

py::object ext(ExtendedReal x) { return py::float_(x.value()); }

}  // namespace

PYBIND11_MODULE(_braess, m) {
  m.doc() = "Braess paradox analysis of four-node networks";

  py::register_exception<InvalidConfig>(m, "InvalidConfig", PyExc_ValueError);
  py::register_exception<InvalidQ>(m, "InvalidQ", PyExc_ValueError);
  py::register_exception<ZeroOverZero>(m, "ZeroOverZero", PyExc_ArithmeticError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception<TopologyError>(m, "TopologyError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<FourNodeConfig>(m, "FourNodeConfig")
      .def(py::init(&make_config), py::arg("alpha"), py::arg("beta"))
      .def_readwrite("alpha", &FourNodeConfig::alpha)
      .def_readwrite("beta", &FourNodeConfig::beta)
      .def("__repr__", [](const FourNodeConfig& c) {
        return py::str("FourNodeConfig(alpha={}, beta={})").format(c.alpha, c.beta);
      });

  py::class_<DerivedQuantities>(m, "DerivedQuantities")
      .def_readonly("al", &DerivedQuantities::al)
      .def_readonly("al_bar", &DerivedQuantities::al_bar)
      .def_readonly("al_hat", &DerivedQuantities::al_hat)
      .def_readonly("beta", &DerivedQuantities::beta_total)
      .def_readonly("b1", &DerivedQuantities::b1)
      .def_readonly("b2", &DerivedQuantities::b2)
      .def_readonly("b3", &DerivedQuantities::b3)
      .def_readonly("b4", &DerivedQuantities::b4)
      .def_property_readonly("mu1", [](const DerivedQuantities& d) { return ext(d.mu1); })
      .def_property_readonly("mu2", [](const DerivedQuantities& d) { return ext(d.mu2); });

  m.def(
      "derive_quantities",
      [](const FourNodeConfig& c, bool relaxed) { return derive_quantities(c, mode_of(relaxed)); },
      py::arg("config"), py::arg("relaxed") = false);

  py::class_<PathFlows>(m, "PathFlows")
      .def_readonly("p1", &PathFlows::p1)
      .def_readonly("p2", &PathFlows::p2)
      .def_readonly("p3", &PathFlows::p3);

  py::class_<EquilibriumSolution>(m, "EquilibriumSolution")
      .def_property_readonly("case", [](const EquilibriumSolution& s) { return std::string(to_string(s.label)); })
      .def_readonly("travel_time", &EquilibriumSolution::travel_time)
      .def_readonly("paths", &EquilibriumSolution::paths);

  m.def(
      "equilibrium",
      [](const FourNodeConfig& c, double q, bool with_bc, bool relaxed) {
        return equilibrium(c, with_bc, q, mode_of(relaxed));
      },
      py::arg("config"), py::arg("q"), py::arg("with_bc") = true, py::arg("relaxed") = false);

  py::class_<Interval>(m, "Interval")
      .def_property_readonly("empty", &Interval::empty)
      .def_property_readonly("lo", [](const Interval& i) { return ext(i.lo()); })
      .def_property_readonly("hi", [](const Interval& i) { return ext(i.hi()); })
      .def_property_readonly("lo_open", &Interval::lo_open)
      .def_property_readonly("hi_open", &Interval::hi_open)
      .def("__contains__", &Interval::contains)
      .def("__str__", [](const Interval& i) { return i.to_string(2); });

  m.def(
      "paradox_region",
      [](const FourNodeConfig& c, bool relaxed) { return paradox_region(c, mode_of(relaxed)).region; },
      py::arg("config"), py::arg("relaxed") = false);
  m.def(
      "pseudo_paradox_region",
      [](const FourNodeConfig& c, bool relaxed) { return paradox_region(c, mode_of(relaxed)).pseudo_region; },
      py::arg("config"), py::arg("relaxed") = false);
  m.def(
      "report",
      [](const FourNodeConfig& c, bool relaxed) { return render_text(paradox_region(c, mode_of(relaxed))); },
      py::arg("config"), py::arg("relaxed") = false);

  m.def(
      "classify",
      [](const FourNodeConfig& c, double q, bool relaxed) {
        return std::string(to_string(classify(c, q, mode_of(relaxed)).outcome));
      },
      py::arg("config"), py::arg("q"), py::arg("relaxed") = false);

  m.def(
      "breakpoints",
      [](const FourNodeConfig& c, bool with_bc, double q_max, bool relaxed) {
        return piecewise_equilibrium(c, with_bc, q_max, mode_of(relaxed)).breakpoints();
      },
      py::arg("config"), py::arg("with_bc") = true, py::arg("q_max") = 1e6, py::arg("relaxed") = false);

  m.def(
      "oracle_travel_time",
      [](const FourNodeConfig& c, double q, bool with_bc) { return oracle::beckmann_solve(c, with_bc, q).travel_time; },
      py::arg("config"), py::arg("q"), py::arg("with_bc") = true);

  m.def(
      "reduce_json",
      [](const std::string& text) { return to_json(resolve(parse_document_text(text))).dump(); },
      py::arg("document"));
}
