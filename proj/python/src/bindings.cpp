#include <memory>
#include <vector>

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cblagrange/errors.hpp"
#include "cblagrange/interp.hpp"
#include "cblagrange/nodemap.hpp"
#include "cblagrange/presets.hpp"
#include "cblagrange/vanishing.hpp"
#include "cblagrange/verify.hpp"

namespace py = pybind11;
using namespace cblagrange;

namespace {

// pybind11 holders cannot be shared_ptr<const T>; the core takes shared_ptr<const T>.
using GridPtr = std::shared_ptr<GridInstance>;

std::vector<double> to_vec(std::span<const double> s) { return {s.begin(), s.end()}; }

RecurrenceCoeffs make_coeffs(const std::vector<double>& a, const std::vector<double>& b) {
  return RecurrenceCoeffs(a, b);
}

py::dict report_dict(const VerifyReport& r) {
  py::dict d;
  d["rank"] = r.rank;
  d["N_tau"] = r.N_tau;
  d["M"] = r.M;
  d["nullspace_dim"] = r.nullspace_dim;
  d["combined_rank"] = r.combined_rank;
  d["span_equal"] = r.span_equal;
  d["max_delta_error"] = r.max_delta_error;
  if (r.oracle_checked) d["oracle_in_span"] = r.oracle_in_span;
  d["passed"] = r.passed();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lagrange interpolation on checkerboard grids built from three-term recurrences";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  py::class_<RecurrenceCoeffs>(m, "RecurrenceCoeffs")
      .def(py::init(&make_coeffs), py::arg("a"), py::arg("b"))
      .def_property_readonly("n", [](const RecurrenceCoeffs& c) { return c.n(); })
      .def_property_readonly("a", [](const RecurrenceCoeffs& c) { return to_vec(c.a()); })
      .def_property_readonly("b", [](const RecurrenceCoeffs& c) { return to_vec(c.b()); })
      .def("__eq__", [](const RecurrenceCoeffs& x, const RecurrenceCoeffs& y) { return x == y; })
      .def("__repr__", [](const RecurrenceCoeffs& c) {
        return "RecurrenceCoeffs(n=" + std::to_string(c.n()) + ")";
      });

  m.def("eval_sequence", &eval_sequence, py::arg("coeffs"), py::arg("x"), py::arg("upto"),
        "p_0(x), ..., p_upto(x)");
  m.def(
      "nodes_from_coeffs",
      [](const RecurrenceCoeffs& c) { return to_vec(nodes_from_coeffs(c).values()); },
      py::arg("coeffs"));
  m.def(
      "coeffs_from_nodes",
      [](const std::vector<double>& x, double even_a0) {
        InverseMapOptions opt;
        opt.even_a0 = even_a0;
        return coeffs_from_nodes(NodeSequence(x), opt);
      },
      py::arg("nodes"), py::arg("even_a0") = 1.0);
  m.def("gamma_rescale", &gamma_rescale, py::arg("coeffs"), py::arg("gamma"));

  py::class_<GridPoint>(m, "GridPoint")
      .def_readonly("r", &GridPoint::r)
      .def_readonly("u", &GridPoint::u)
      .def_readonly("x", &GridPoint::x)
      .def_readonly("y", &GridPoint::y)
      .def("__repr__", [](const GridPoint& p) {
        return "GridPoint(r=" + std::to_string(p.r) + ", u=" + std::to_string(p.u) + ")";
      });

  py::class_<GridInstance, GridPtr>(m, "Grid")
      .def_static(
          "from_coeffs",
          [](const RecurrenceCoeffs& x, const RecurrenceCoeffs& y) {
            return std::make_shared<GridInstance>(GridInstance::from_coeffs(x, y));
          },
          py::arg("xcoeffs"), py::arg("ycoeffs"))
      .def_static(
          "from_nodes",
          [](const std::vector<double>& x, const std::vector<double>& y) {
            return std::make_shared<GridInstance>(
                GridInstance::from_nodes(NodeSequence(x), NodeSequence(y)));
          },
          py::arg("xnodes"), py::arg("ynodes"))
      .def_property_readonly("n", &GridInstance::n)
      .def_property_readonly("sigma", &GridInstance::sigma)
      .def_property_readonly("delta", &GridInstance::delta)
      .def_property_readonly("xnodes", [](const GridInstance& g) { return to_vec(g.xnodes().values()); })
      .def_property_readonly("ynodes", [](const GridInstance& g) { return to_vec(g.ynodes().values()); })
      .def_property_readonly("xcoeffs", &GridInstance::xcoeffs)
      .def_property_readonly("ycoeffs", &GridInstance::ycoeffs)
      .def(
          "points", [](const GridInstance& g, int tau) { return build_checkerboard(g, tau).points; },
          py::arg("tau"), "Nodes of the checkerboard set S_tau")
      .def(
          "verify",
          [](const GridInstance& g, int tau, bool oracle) {
            return report_dict(verify_instance(g, build_checkerboard(g, tau), {.check_oracle = oracle}));
          },
          py::arg("tau"), py::arg("oracle") = true)
      .def(
          "lagrange",
          [](const GridPtr& g, int tau, int index, double x, double y) {
            const auto set = build_checkerboard(*g, tau);
            if (index < 0 || static_cast<std::size_t>(index) >= set.count()) {
              throw ValidationError("basis index out of range");
            }
            return BasisFunction(g, set.points[static_cast<std::size_t>(index)])(x, y);
          },
          py::arg("tau"), py::arg("index"), py::arg("x"), py::arg("y"),
          "L_index(x, y) for the index-th node of S_tau");

  m.def(
      "padua_grid", [](int n) { return std::make_shared<GridInstance>(padua_grid(n)); },
      py::arg("n"));
  m.def(
      "chebyshev_grid", [](int n) { return std::make_shared<GridInstance>(chebyshev_grid(n)); },
      py::arg("n"));
  m.def(
      "random_grid",
      [](int n, int sigma, std::uint64_t seed) {
        return std::make_shared<GridInstance>(random_grid(n, sigma, seed));
      },
      py::arg("n"), py::arg("sigma"), py::arg("seed"));

  m.def("count_nodes", &count_nodes, py::arg("n"), py::arg("sigma"), py::arg("tau"));
  m.def("quotient_dimension", &quotient_dimension, py::arg("n"), py::arg("sigma"), py::arg("tau"));

  py::class_<Interpolant>(m, "Interpolant")
      .def(py::init([](GridPtr g, int tau, std::vector<double> samples) {
             return Interpolant(std::move(g), tau, std::move(samples));
           }),
           py::arg("grid"), py::arg("tau"),
           py::arg("samples"), "Samples ordered as grid.points(tau)")
      .def(py::init([](GridPtr g, int tau, const std::function<double(double, double)>& f) {
             return interpolate(std::move(g), tau, f);
           }),
           py::arg("grid"), py::arg("tau"), py::arg("f"))
      .def("__call__", &Interpolant::operator(), py::arg("x"), py::arg("y"))
      .def_property_readonly("tau", &Interpolant::tau)
      .def_property_readonly("samples", &Interpolant::samples);
}
