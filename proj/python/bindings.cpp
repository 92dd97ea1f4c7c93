#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "affinor/classify.hpp"
#include "affinor/cli.hpp"
#include "affinor/curvature.hpp"
#include "affinor/errors.hpp"
#include "affinor/phispace.hpp"
#include "affinor/report.hpp"

namespace py = pybind11;
using namespace affinor;

namespace {

using Triple = std::array<double, 3>;
using Zeta = std::array<int, 3>;
using Coords = std::array<cplx, 3>;

Metric metric(const Triple& l) { return {l[0], l[1], l[2]}; }
FStructure fstructure(const Zeta& z) { return {z[0], z[1], z[2]}; }
TangentVector tangent(const Coords& c) { return {c[0], c[1], c[2]}; }
Coords coords(const TangentVector& x) { return {x.a, x.b, x.c}; }

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Invariant f-structures on SU(3)/T_max";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<UnknownClassTag>(m, "UnknownClassTag", PyExc_ValueError);
  py::register_exception<EmptyGrid>(m, "EmptyGrid", PyExc_ValueError);
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

  m.def("bracket_m", [](const Coords& x, const Coords& y) { return coords(bracket_m(tangent(x), tangent(y))); },
        py::arg("x"), py::arg("y"), "m-component of [X, Y] for X, Y in m, as (a, b, c).");
  m.def("killing_inner", [](const Coords& x, const Coords& y) { return killing_inner(tangent(x), tangent(y)); },
        py::arg("x"), py::arg("y"));
  m.def("nomizu_alpha",
        [](const Triple& l, const Coords& x, const Coords& y) { return coords(nomizu_alpha(metric(l), tangent(x), tangent(y))); },
        py::arg("metric"), py::arg("x"), py::arg("y"));
  m.def("nabla_f",
        [](const Triple& l, const Zeta& z, const Coords& x, const Coords& y) {
          return coords(nabla_f(metric(l), fstructure(z), tangent(x), tangent(y)));
        },
        py::arg("metric"), py::arg("f"), py::arg("x"), py::arg("y"));
  m.def("nabla_f_closed",
        [](const Triple& l, const Zeta& z, const Coords& x, const Coords& y) {
          return coords(nabla_f_closed(metric(l), fstructure(z), tangent(x), tangent(y)));
        },
        py::arg("metric"), py::arg("f"), py::arg("x"), py::arg("y"));
  m.def("composition_T",
        [](const Triple& l, const Zeta& z, const Coords& x, const Coords& y) {
          return coords(composition_T(metric(l), fstructure(z), tangent(x), tangent(y)));
        },
        py::arg("metric"), py::arg("f"), py::arg("x"), py::arg("y"));

  m.def("class_locus",
        [](const Zeta& z, const std::string& tag) { return report::to_json(class_locus(fstructure(z), parse_class_tag(tag))).dump(); },
        py::arg("f"), py::arg("cls"), "Exact locus as a JSON string.");
  m.def("strict_locus",
        [](const Zeta& z, const std::string& tag) { return report::to_json(strict_locus(fstructure(z), parse_class_tag(tag))).dump(); },
        py::arg("f"), py::arg("cls"));
  m.def("numeric_verify",
        [](const Zeta& z, const Triple& l, const std::string& tag, int trials, double tol, std::uint64_t seed) {
          const Verdict v = numeric_verify(fstructure(z), metric(l), parse_class_tag(tag), {trials, tol, seed, 0});
          return py::make_tuple(v.holds, v.max_residual);
        },
        py::arg("f"), py::arg("metric"), py::arg("cls"), py::arg("trials") = 1000, py::arg("tol") = 1e-9,
        py::arg("seed") = TangentSampler::kDefaultSeed, "(holds, max_residual).");
  m.def("is_integrable", [](const Zeta& z) { return is_integrable(fstructure(z)); }, py::arg("f"));

  m.def("ricci_blocks", [](const Triple& l) { return ricci_blocks(metric(l)); }, py::arg("metric"));
  m.def("einstein_fit",
        [](const Triple& l) {
          const EinsteinFit fit = einstein_fit(metric(l));
          return py::make_tuple(fit.constant, fit.residual);
        },
        py::arg("metric"), "(constant, residual).");
  m.def("einstein_scan",
        [](double lo, double hi, double step, double tol) {
          ScanOptions opts;
          opts.tol = tol;
          std::vector<py::tuple> out;
          for (const auto& p : einstein_scan({{lo, hi, step}, {lo, hi, step}}, opts)) {
            out.push_back(py::make_tuple(p.t, p.s, p.constant, p.residual));
          }
          return out;
        },
        py::arg("lo") = 0.01, py::arg("hi") = 2.5, py::arg("step") = 0.01, py::arg("tol") = 1e-9,
        "List of (t, s, constant, residual).");
  m.def("homothety_label", &homothety_label, py::arg("t"), py::arg("s"));

  m.def("structure_counts",
        [](int order, const Coords& s) {
          const ThetaOperator theta = build_theta(make_inner_automorphism(s, order));
          const CanonicalCatalog cat = enumerate_canonical(theta, order);
          return py::make_tuple(report::to_json(cat.predicted).dump(), report::to_json(cat.observed).dump());
        },
        py::arg("order"), py::arg("s"), "(predicted, observed) as JSON strings.");

  m.def("run_cli", &run_cli, py::arg("args"), "(exit_code, stdout, stderr).");
}
