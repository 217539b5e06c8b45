#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rosette/cli.hpp"
#include "rosette/errors.hpp"
#include "rosette/render.hpp"
#include "rosette/serialize.hpp"
#include "rosette/verification.hpp"

namespace py = pybind11;
using namespace rosette;

namespace {

SeriesKind kind_of(const std::string& k) {
  if (k == "H" || k == "h") return SeriesKind::H;
  if (k == "G" || k == "g") return SeriesKind::G;
  throw DomainError("series kind must be 'H' or 'G'");
}

SeriesSpec series_spec(const std::string& kind, int n, double abs_tol) {
  SeriesSpec s{kind_of(kind), n, {}};
  s.policy.abs_tol = abs_tol;
  return s;
}

RosetteParams params(int n, double beta) {
  RosetteParams p{n, beta, {}};
  validate(p);
  return p;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rosette harmonic mappings";

  auto base = py::register_exception<Error>(m, "RosetteError", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<NoConvergence>(m, "NoConvergence", base.ptr());
  py::register_exception<SingularPoint>(m, "SingularPoint", base.ptr());
  py::register_exception<NonCanonicalBeta>(m, "NonCanonicalBeta", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());

  m.def(
      "eval_series",
      [](const std::string& kind, int n, cplx z, double abs_tol) {
        const SeriesResult r = eval_series_detailed(series_spec(kind, n, abs_tol), z);
        return py::make_tuple(r.value, r.error_bound, r.terms, to_string(r.method));
      },
      py::arg("kind"), py::arg("n"), py::arg("z"), py::arg("abs_tol") = 1e-12,
      "(value, error_bound, terms, method) of the H_n or G_n series at z");
  m.def(
      "endpoint_values",
      [](int n) {
        const EndpointValues e = endpoint_values(n);
        return py::make_tuple(e.K_n, e.G1);
      },
      py::arg("n"), "(K_n, G_n(1))");
  m.def("gamma", &gamma_real, py::arg("x"));
  m.def("parse_beta", &parse_beta, py::arg("text"));
  m.def(
      "reduce_beta",
      [](double beta) {
        const BetaReduction r = reduce_beta(beta);
        return py::make_tuple(r.beta, r.l);
      },
      py::arg("beta"), "(canonical beta, l)");
  m.def(
      "f",
      [](int n, double beta, cplx z) {
        const MapValue v = f(params(n, beta), z);
        return py::make_tuple(v.h, v.gbar, v.f);
      },
      py::arg("n"), py::arg("beta"), py::arg("z"), "(h, conj(g), f) at z");
  m.def(
      "boundary_point", [](int n, double beta, double t) { return boundary_point(params(n, beta), t); },
      py::arg("n"), py::arg("beta"), py::arg("t"));
  m.def(
      "jacobian", [](int n, double beta, cplx z) { return jacobian(params(n, beta), z); },
      py::arg("n"), py::arg("beta"), py::arg("z"));
  m.def(
      "features_json",
      [](int n, double beta) {
        const BetaReduction red = reduce_beta(beta);
        const FeatureReport rep = extract_features(params(n, red.beta));
        return feature_report_json(rep, beta, red).dump();
      },
      py::arg("n"), py::arg("beta"));
  m.def(
      "render_svg",
      [](int n, double beta, int radial_lines, int circles, int width_px,
         const std::vector<std::string>& overlays) {
        RenderSpec spec;
        spec.params = params(n, beta);
        spec.radial_lines = radial_lines;
        spec.circles = circles;
        spec.width_px = width_px;
        for (const auto& o : overlays) spec.overlays.insert(parse_overlay(o));
        const RenderResult r = render(spec);
        return py::make_tuple(r.svg, overlay_consistency(r));
      },
      py::arg("n"), py::arg("beta"), py::arg("radial_lines") = 24, py::arg("circles") = 16,
      py::arg("width_px") = 800, py::arg("overlays") = std::vector<std::string>{},
      "(svg text, largest overlay-to-boundary distance in px)");
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "(exit status, stdout, stderr)");
}
