#include "rosette/render.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "rosette/boundary.hpp"
#include "rosette/errors.hpp"
#include "rosette/serialize.hpp"
#include "rosette/verification.hpp"

namespace rosette {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr double kFlatTol = 0.1;  // px

struct Frame {
  double side, width;
  cplx px(cplx w) const {
    return {(w.real() + side / 2) / side * width, (side / 2 - w.imag()) / side * width};
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  // avoid "-0.00"
  if (std::string(buf) == "-0.00") return "0.00";
  return buf;
}

class Flattener {
public:
  Flattener(const Frame& fr, std::function<cplx(double)> fn) : fr_(fr), fn_(std::move(fn)) {}

  Polyline run(const std::vector<double>& ts) {
    Polyline out;
    cplx prev = fr_.px(fn_(ts.front()));
    out.push_back(prev);
    for (std::size_t i = 1; i < ts.size(); ++i) {
      cplx cur = fr_.px(fn_(ts[i]));
      refine(ts[i - 1], ts[i], prev, cur, 0, out);
      prev = cur;
    }
    return out;
  }

private:
  void refine(double a, double b, cplx pa, cplx pb, int depth, Polyline& out) {
    const double m = 0.5 * (a + b);
    const cplx pm = fr_.px(fn_(m));
    const cplx pq1 = fr_.px(fn_(0.5 * (a + m)));
    const cplx pq3 = fr_.px(fn_(0.5 * (m + b)));
    double dev = std::max({point_segment_distance(pm, pa, pb), point_segment_distance(pq1, pa, pb),
                           point_segment_distance(pq3, pa, pb)});
    if (dev < kFlatTol || depth >= 20) {
      out.push_back(pb);
      return;
    }
    refine(a, m, pa, pm, depth + 1, out);
    refine(m, b, pm, pb, depth + 1, out);
  }

  const Frame& fr_;
  std::function<cplx(double)> fn_;
};

std::string path_d(const Polyline& pts, bool close) {
  std::string d;
  d.reserve(pts.size() * 16);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    d += i == 0 ? "M" : " L";
    d += fmt(pts[i].real());
    d += ',';
    d += fmt(pts[i].imag());
  }
  if (close) d += " Z";
  return d;
}

std::vector<double> uniform(double a, double b, int k) {
  std::vector<double> ts;
  for (int i = 0; i <= k; ++i) ts.push_back(a + (b - a) * i / k);
  return ts;
}

} // namespace

Overlay parse_overlay(const std::string& s) {
  if (s == "features") return Overlay::Features;
  if (s == "axes" || s == "cusp-axes") return Overlay::CuspAxes;
  if (s == "fundamental" || s == "fundamental-set") return Overlay::FundamentalSet;
  if (s == "hypocycloid") return Overlay::Hypocycloid;
  throw ParseError("unknown overlay '" + s + "'");
}

std::string to_string(Overlay o) {
  switch (o) {
  case Overlay::Features: return "features";
  case Overlay::CuspAxes: return "axes";
  case Overlay::FundamentalSet: return "fundamental";
  case Overlay::Hypocycloid: return "hypocycloid";
  }
  return "?";
}

void validate(const RenderSpec& spec) {
  validate(spec.params);
  if (spec.radial_lines < 1 || spec.circles < 1)
    throw DomainError("grid needs at least one radial line and one circle");
  if (spec.samples_per_curve < 16) throw DomainError("samples_per_curve must be >= 16");
  if (spec.width_px < 16) throw DomainError("width_px must be >= 16");
  if (!(spec.margin_frac >= 0)) throw DomainError("margin_frac must be >= 0");
}

RenderResult render(const RenderSpec& spec) {
  validate(spec);
  const RosetteParams& p = spec.params;
  const int n = p.n;
  const BetaReduction red = reduce_beta(p.beta);
  const RosetteParams pc{n, red.beta, p.policy};
  const cplx rot = reduction_rotation(n, red.l);
  const double B = endpoint_values(n).K_n * (1.0 + std::tan(kPi / (2.0 * n)));
  RenderResult res;
  res.side = 2.0 * B * (1.0 + spec.margin_frac);
  const Frame fr{res.side, double(spec.width_px)};
  const double W = spec.width_px;

  auto boundary = [&](double t) -> cplx {
    const double u = t * n / kPi;
    if (std::fabs(u - std::nearbyint(u)) < 1e-13) return f_at_multiple(p, std::lround(u)).f;
    return boundary_point(p, t);
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width_px << "\" height=\""
      << spec.width_px << "\" viewBox=\"0 0 " << spec.width_px << ' ' << spec.width_px << "\">\n";
  svg << "<title>rosette n=" << n << " beta=" << format_number(p.beta) << "</title>\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << spec.width_px << "\" height=\"" << spec.width_px
      << "\" fill=\"white\"/>\n";

  if (spec.overlays.count(Overlay::FundamentalSet)) {
    const Polyline canon = fundamental_set_boundary(pc, 512);
    const int copies = spec.all_fundamental_copies ? n : 1;
    static const char* fills[] = {"#f4a582", "#92c5de", "#b8e186", "#fddbc7", "#c2a5cf",
                                  "#ffffbf", "#d1e5f0", "#e6f5d0"};
    svg << "<g id=\"fundamental\" stroke=\"#b2182b\" stroke-width=\"1.2\" fill-opacity=\"0.45\">\n";
    for (int k = 0; k < copies; ++k) {
      const cplx rk = std::polar(1.0, red.l * kPi / 2 + (2.0 * k + red.l) * kPi / n);
      Polyline px;
      for (cplx w : canon) px.push_back(fr.px(rk * w));
      svg << "<path fill=\"" << fills[k % 8] << "\" d=\"" << path_d(px, true) << "\"/>\n";
      res.path_points += static_cast<long>(px.size());
    }
    svg << "</g>\n";
  }

  svg << "<g id=\"grid\" stroke=\"#555555\" stroke-width=\"0.6\" fill=\"none\">\n";
  for (int k = 0; k < spec.radial_lines; ++k) {
    const cplx e = std::polar(1.0, kTwoPi * k / spec.radial_lines);
    Flattener fl(fr, [&](double u) {
      double r = 1.0 - (1.0 - u) * (1.0 - u);
      return f(p, r * e).f;
    });
    Polyline pts = fl.run(uniform(0.0, 1.0, spec.samples_per_curve));
    res.path_points += static_cast<long>(pts.size());
    svg << "<path d=\"" << path_d(pts, false) << "\"/>\n";
  }
  for (int j = 1; j < spec.circles; ++j) {
    const double r = double(j) / spec.circles;
    Flattener fl(fr, [&](double t) { return f(p, std::polar(r, t)).f; });
    Polyline pts = fl.run(uniform(0.0, kTwoPi, spec.samples_per_curve));
    res.path_points += static_cast<long>(pts.size());
    svg << "<path d=\"" << path_d(pts, true) << "\"/>\n";
  }
  svg << "</g>\n";

  {
    std::vector<double> ts = clustered_parameters(n, std::max(4, spec.samples_per_curve / (2 * n)));
    ts.push_back(kTwoPi);
    Flattener fl(fr, boundary);
    res.boundary_px = fl.run(ts);
    res.path_points += static_cast<long>(res.boundary_px.size());
    svg << "<path id=\"boundary\" fill=\"none\" stroke=\"black\" stroke-width=\"1.4\" d=\""
        << path_d(res.boundary_px, true) << "\"/>\n";
  }

  if (spec.overlays.count(Overlay::Hypocycloid)) {
    Flattener fl(fr, [&](double t) { return hypocycloid(n, std::polar(1.0, t)); });
    Polyline pts = fl.run(uniform(0.0, kTwoPi, spec.samples_per_curve));
    svg << "<path id=\"hypocycloid\" fill=\"none\" stroke=\"#2166ac\" stroke-width=\"0.9\" "
           "stroke-dasharray=\"4,3\" d=\""
        << path_d(pts, true) << "\"/>\n";
  }

  const bool want_features = spec.overlays.count(Overlay::Features) > 0;
  const bool want_axes = spec.overlays.count(Overlay::CuspAxes) > 0;
  if (want_features || want_axes) {
    const FeatureReport rep = extract_features(pc);
    if (want_axes) {
      svg << "<g id=\"cusp-axes\" stroke=\"#1b7837\" stroke-width=\"0.8\" "
             "stroke-dasharray=\"6,4\">\n";
      for (const auto& ft : rep.features) {
        if (!ft.axis_arg) continue;
        // the axis is the cusp's tangent line, direction 2k*pi/n through the cusp point
        const cplx dir = rot * std::polar(1.0, *ft.axis_arg), at = rot * ft.location;
        const cplx a = fr.px(at - 0.3 * res.side * dir), b = fr.px(at + 0.05 * res.side * dir);
        svg << "<line x1=\"" << fmt(a.real()) << "\" y1=\"" << fmt(a.imag()) << "\" x2=\""
            << fmt(b.real()) << "\" y2=\"" << fmt(b.imag()) << "\"/>\n";
      }
      svg << "</g>\n";
    }
    if (want_features) {
      svg << "<g id=\"features\" stroke=\"none\">\n";
      for (const auto& ft : rep.features) {
        const cplx c = fr.px(rot * ft.location);
        res.feature_px.push_back(c);
        const char* col = ft.kind == FeatureKind::Cusp ? "#d7301f"
                          : ft.kind == FeatureKind::Node ? "#6a51a3"
                                                          : "#fd8d3c";
        svg << "<circle cx=\"" << fmt(c.real()) << "\" cy=\"" << fmt(c.imag()) << "\" r=\""
            << fmt(std::max(2.0, W / 250)) << "\" fill=\"" << col << "\"/>\n";
      }
      svg << "</g>\n";
    }
  }
  svg << "</svg>\n";
  res.svg = svg.str();
  return res;
}

double overlay_consistency(const RenderResult& r) {
  double worst = 0;
  for (cplx c : r.feature_px) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < r.boundary_px.size(); ++i)
      best = std::min(best, point_segment_distance(c, r.boundary_px[i], r.boundary_px[i + 1]));
    worst = std::max(worst, best);
  }
  return worst;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  os << text;
  if (!os) throw IoError("failed writing '" + path + "'");
}

} // namespace rosette
