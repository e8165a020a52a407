#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gravent/closedform.hpp"
#include "gravent/config.hpp"
#include "gravent/error.hpp"
#include "gravent/geometry.hpp"
#include "gravent/graph.hpp"
#include "gravent/oracle.hpp"
#include "gravent/report.hpp"
#include "gravent/sweep.hpp"

namespace py = pybind11;
using namespace gravent;

namespace {

Bipartition as_cut(const py::object& cut, std::size_t n) {
  if (py::isinstance<Bipartition>(cut)) return cut.cast<Bipartition>();
  return Bipartition::parse(cut.cast<std::string>(), n);
}

RationalPhases as_rational(double base, const std::vector<std::vector<std::string>>& multipliers) {
  std::vector<std::vector<Rational>> m;
  for (const auto& row : multipliers) {
    std::vector<Rational> r;
    for (const auto& s : row) r.push_back(Rational::parse(s));
    m.push_back(std::move(r));
  }
  return RationalPhases(base, std::move(m));
}

py::object as_dict(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_gravent, m) {
  m.doc() = "Gravity-induced many-body entanglement: closed forms, state-vector oracle, graph predicates";

  // messages start with the error code name, e.g. "InvalidBipartition: ..."
  py::register_exception<Error>(m, "GraventError", PyExc_ValueError);

  py::class_<PhaseMatrix>(m, "PhaseMatrix")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def(py::init(&PhaseMatrix::from_rows), py::arg("rows"))
      .def_property_readonly("size", &PhaseMatrix::size)
      .def("__len__", &PhaseMatrix::size)
      .def("__getitem__", [](const PhaseMatrix& pm, std::pair<std::size_t, std::size_t> pq) { return pm(pq.first, pq.second); })
      .def("oriented", &PhaseMatrix::oriented, py::arg("p"), py::arg("q"))
      .def("set", &PhaseMatrix::set, py::arg("p"), py::arg("q"), py::arg("value"))
      .def("without", &PhaseMatrix::without, py::arg("removed"))
      .def("magnitudes", &PhaseMatrix::magnitudes)
      .def("__eq__", [](const PhaseMatrix& a, const PhaseMatrix& b) { return a == b; })
      .def("__repr__", [](const PhaseMatrix& pm) { return "<PhaseMatrix N=" + std::to_string(pm.size()) + ">"; });

  py::class_<Bipartition>(m, "Bipartition")
      .def(py::init<std::size_t, MassMask>(), py::arg("n"), py::arg("left_mask"))
      .def_static("parse", &Bipartition::parse, py::arg("text"), py::arg("n"))
      .def_property_readonly("n", &Bipartition::n)
      .def_property_readonly("k", &Bipartition::k)
      .def_property_readonly("left", &Bipartition::left_members)
      .def_property_readonly("right", &Bipartition::right_members)
      .def("__str__", &Bipartition::to_string)
      .def("__repr__", [](const Bipartition& b) { return "<Bipartition " + b.to_string() + ">"; })
      .def("__eq__", [](const Bipartition& a, const Bipartition& b) { return a == b; });

  m.def("all_bipartitions", &all_bipartitions, py::arg("n"));
  m.def("one_vs_rest_bipartitions", &one_vs_rest_bipartitions, py::arg("n"));

  // geometry
  m.def(
      "entangling_phases_from_setup",
      [](const std::vector<std::tuple<double, Vec3, Vec3>>& masses, double G, double hbar, double min_distance) {
        SystemSetup setup;
        for (const auto& [mass, loc0, loc1] : masses) setup.masses.push_back({mass, loc0, loc1});
        setup.min_pair_distance = min_distance;
        return entangling_phases(phase_table(setup, {G, hbar}));
      },
      py::arg("masses"), py::arg("G") = PhysicalConstants{}.G, py::arg("hbar") = PhysicalConstants{}.hbar,
      py::arg("min_distance") = kDefaultMinPairDistance,
      "masses: [(mass_kg, (x0, y0, z0), (x1, y1, z1)), ...]");

  // closed forms
  m.def("concurrence_two_body", &closedform::concurrence_two_body, py::arg("phi"), py::arg("t"));
  m.def("concurrence_three_body", &closedform::concurrence_three_body, py::arg("phases"), py::arg("p"), py::arg("t"));
  m.def(
      "lambda_series",
      [](const PhaseMatrix& pm, const py::object& cut, double t) {
        return closedform::lambda_series(pm, as_cut(cut, pm.size()), t);
      },
      py::arg("phases"), py::arg("cut"), py::arg("t"));
  m.def(
      "iconcurrence",
      [](const PhaseMatrix& pm, const py::object& cut, double t) {
        return closedform::iconcurrence(pm, as_cut(cut, pm.size()), t);
      },
      py::arg("phases"), py::arg("cut"), py::arg("t"));
  m.def("meyer_wallach_qk", &closedform::meyer_wallach_qk, py::arg("phases"), py::arg("k"), py::arg("t"));
  m.def("pairwise_concurrence", &closedform::pairwise_concurrence, py::arg("phases"), py::arg("p"), py::arg("q"),
        py::arg("t"), py::arg("tau123"));

  // oracle
  m.def(
      "state_vector",
      [](const PhaseMatrix& pm, double t) {
        const auto s = oracle::evolve(pm, t);
        return py::array_t<std::complex<double>>(static_cast<py::ssize_t>(s.amplitudes().size()), s.amplitudes().data());
      },
      py::arg("phases"), py::arg("t"));
  m.def(
      "iconcurrence_oracle",
      [](const PhaseMatrix& pm, const py::object& cut, double t) {
        return oracle::iconcurrence_oracle(oracle::evolve(pm, t), as_cut(cut, pm.size()));
      },
      py::arg("phases"), py::arg("cut"), py::arg("t"));
  m.def(
      "qk_oracle", [](const PhaseMatrix& pm, std::size_t k, double t) { return oracle::qk_from_purities(oracle::evolve(pm, t), k); },
      py::arg("phases"), py::arg("k"), py::arg("t"));
  m.def(
      "pair_concurrence_oracle",
      [](const PhaseMatrix& pm, std::size_t p, std::size_t q, double t) {
        return oracle::pair_concurrence(oracle::evolve(pm, t), p, q);
      },
      py::arg("phases"), py::arg("p"), py::arg("q"), py::arg("t"));
  m.def(
      "three_tangle",
      [](const PhaseMatrix& pm, double t, std::size_t p) { return oracle::three_tangle_residual(oracle::evolve(pm, t), p); },
      py::arg("phases"), py::arg("t"), py::arg("p") = 0);

  // graph predicates
  m.def(
      "connectivity", [](const PhaseMatrix& pm, double eps) { return graph::connectivity(graph::build_graph(pm, eps)); },
      py::arg("phases"), py::arg("epsilon_edge") = graph::kDefaultEdgeEpsilon);
  m.def(
      "genuine_entanglement",
      [](const PhaseMatrix& pm, double eps) {
        const auto v = graph::predicts_genuine_entanglement(graph::build_graph(pm, eps));
        return py::make_tuple(v.genuine, v.witness ? py::cast(v.witness->to_string()) : py::none());
      },
      py::arg("phases"), py::arg("epsilon_edge") = graph::kDefaultEdgeEpsilon,
      "(genuine, witness cut or None)");
  m.def(
      "ghz_condition",
      [](double base, const std::vector<std::vector<std::string>>& multipliers, bool strict) -> py::object {
        const auto g = graph::ghz_condition(as_rational(base, multipliers), strict);
        if (!g) return py::none();
        py::dict d;
        d["unit"] = g->unit.to_string();
        d["phi"] = g->phi;
        d["first_time"] = g->first_time;
        d["period"] = g->period;
        return d;
      },
      py::arg("base"), py::arg("multipliers"), py::arg("strict") = true);
  m.def(
      "separability_times",
      [](double base, const std::vector<std::vector<std::string>>& multipliers) {
        const auto s = graph::separability_times(as_rational(base, multipliers));
        py::dict d;
        d["cycles"] = s.cycles.to_string();
        d["first_time"] = s.first_time;
        d["period"] = s.period;
        return d;
      },
      py::arg("base"), py::arg("multipliers"));

  // batch front door
  m.def(
      "run_config",
      [](const std::string& text) {
        const cli::Problem p = cli::parse_config_text(text);
        std::ostringstream out;
        cli::write_csv(out, cli::run_sweep(p));
        return out.str();
      },
      py::arg("config_json"), "CSV text of the configured sweep");
  m.def(
      "compare_engines",
      [](const std::string& text) {
        const cli::Problem p = cli::parse_config_text(text);
        return as_dict(cli::to_json(cli::compare_engines(p)));
      },
      py::arg("config_json"));
  m.def(
      "report",
      [](const std::string& text) {
        const cli::Problem p = cli::parse_config_text(text);
        return as_dict(cli::build_report(p, std::nullopt));
      },
      py::arg("config_json"));
}
