// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rosette/boundary.hpp"
#include "rosette/errors.hpp"
#include "rosette/render.hpp"
#include "rosette/verification.hpp"

using namespace rosette;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(const std::string& id, const std::string& name, const std::function<Outcome()>& fn) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("%s [%s] %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id.c_str(), name.c_str(),
              o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

RosetteParams P(int n, double beta) { return {n, beta, {}}; }

SeriesSpec S(SeriesKind k, int n) { return {k, n, {}}; }

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string failed_checks(const std::vector<Check>& cs) {
  std::string s;
  for (const auto& c : cs)
    if (!c.passed) s += " " + c.name + "=" + sci(c.max_residual);
  return s;
}

} // namespace

int main() {
  criterion("1", "endpoint identity", [] {
    const auto t0 = Clock::now();
    double worst_ratio = 0, worst_k = 0;
    for (int n = 3; n <= 12; ++n) {
      const double h1 = eval_series(S(SeriesKind::H, n), 1.0).real();
      const double g1 = eval_series(S(SeriesKind::G, n), 1.0).real();
      const double ratio = (n - 1) * std::tan(kPi / (2 * n));
      const double K = std::sqrt(kPi) * std::tgamma(1 + 1.0 / (2 * n)) /
                       std::tgamma(0.5 + 1.0 / (2 * n));
      worst_ratio = std::max(worst_ratio, std::fabs(g1 / h1 / ratio - 1));
      worst_k = std::max(worst_k, std::fabs(h1 - K));
    }
    const double secs = seconds_since(t0);
    return Outcome{worst_ratio < 1e-9 && worst_k < 1e-9 && secs < 30,
                   "max ratio rel err " + sci(worst_ratio) + ", max |H(1)-K_n| " + sci(worst_k)};
  });

  criterion("2", "endpoint bounds", [] {
    double margin = INFINITY;
    for (int n = 3; n <= 50; ++n) {
      const double gm = eval_series(S(SeriesKind::G, n), -1.0).real();
      const double hm = eval_series(S(SeriesKind::H, n), -1.0).real();
      const double h1 = eval_series(S(SeriesKind::H, n), 1.0).real();
      const double g1 = eval_series(S(SeriesKind::G, n), 1.0).real();
      const double chain[] = {5.0 / 6, gm, hm, 1.0, h1, g1, 2.0};
      for (int i = 0; i + 1 < 7; ++i) margin = std::min(margin, chain[i + 1] - chain[i]);
    }
    return Outcome{margin > 1e-6, "smallest gap in the chain " + sci(margin)};
  });

  criterion("3", "integral oracle", [] {
    double worst = 0;
    bool ok = true;
    long samples = 0;
    for (int n = 3; n <= 8; ++n) {
      for (const auto& c : integral_oracle_sweep(P(n, 0.0), 100, 2024 + n)) {
        ok = ok && c.passed;
        worst = std::max(worst, c.max_residual);
        samples += c.samples_used;
      }
    }
    return Outcome{ok && worst < 1e-9,
                   "max residual " + sci(worst) + " over " + std::to_string(samples) + " evaluations"};
  });

  criterion("4", "dilatation and jacobian", [] {
    std::mt19937_64 rng(4);
    double worst = 0, jmin = INFINITY;
    long used = 0;
    for (int n = 3; n <= 8; ++n) {
      const RosetteParams p = P(n, 0.3);
      int count = 0;
      while (count < 1000) {
        const double r = std::sqrt(unit_double(rng())), th = 2 * kPi * unit_double(rng());
        const cplx z = std::polar(0.9999 * r, th);
        if (std::abs(1.0 - std::pow(z, 2 * n)) < 1e-6) continue;
        const cplx w = std::pow(z, n - 2);
        const double rel = std::abs(dg(p, z) / dh(p, z) - w) / std::max(std::abs(w), 1e-300);
        worst = std::max(worst, rel);
        jmin = std::min(jmin, jacobian(p, z));
        ++count;
      }
      used += count;
    }
    return Outcome{worst < 1e-12 && jmin > 0,
                   "max rel err " + sci(worst) + ", min jacobian " + sci(jmin) + " at " +
                       std::to_string(used) + " points"};
  });

  criterion("5", "symmetry suite", [] {
    double worst = 0;
    std::string failed;
    for (int n : {3, 5, 6})
      for (double beta : {0.0, 0.3, kPi / 4, kPi / 2}) {
        const auto checks = symmetry_suite(P(n, beta), 1000, 77);
        for (const auto& c : checks) {
          // the finite-difference check has its own O(h^2) tolerance
          if (c.name != "finite_difference_derivative" && c.name != "radial_monotonicity" &&
              c.name != "dilatation_quotient")
            worst = std::max(worst, c.max_residual);
        }
        failed += failed_checks(checks);
      }
    return Outcome{failed.empty() && worst < 1e-10,
                   "max identity residual " + sci(worst) + (failed.empty() ? "" : ";" + failed)};
  });

  criterion("6", "separation and curvature numbers", [] {
    const double s = separation_angle(P(5, kPi / 4), SeparationSign::NodeAfterCusp);
    const double closed = kPi / 5 + std::atan(std::sqrt(2.5 - std::sqrt(5.0)));
    const double s2 = separation_angle(P(5, 2 * kPi / 5), SeparationSign::NodeAfterCusp);
    const double deg = 180 / kPi;
    // measured from the extracted features too
    const FeatureReport rep = extract_features(P(5, kPi / 4));
    const double measured = rep.separations[0];
    const TotalCurvature tc = total_curvature(P(5, kPi / 4), 0, 2 * kPi / 5);
    // independent accumulation of chord tangents
    const int N = 20000;
    const double a = 1e-7, b = 2 * kPi / 5 - 1e-7;
    double turning = 0, prev = 0;
    for (int i = 0; i <= N; ++i) {
      const double t = a + (b - a) * i / N, hh = 1e-7;
      const cplx d = boundary_point(P(5, kPi / 4), t + hh) - boundary_point(P(5, kPi / 4), t - hh);
      const double ang = std::arg(d);
      if (i) turning += angle_diff(ang, prev);
      prev = ang;
    }
    const double analytic_deg = tc.analytic * deg;
    const bool ok = std::fabs(s - closed) < 1e-12 && std::fabs(measured - closed) < 1e-12 &&
                    std::fabs(s * deg - 63) < 0.5 && std::fabs(s2 * deg - 71) < 0.5 &&
                    std::fabs(analytic_deg - 108) < 1e-12 &&
                    std::fabs(std::fabs(turning) - tc.analytic) < 1e-4;
    return Outcome{ok, "pi/4: " + std::to_string(s * deg) + " deg (closed-form diff " +
                           sci(std::fabs(s - closed)) + "), 2pi/5: " + std::to_string(s2 * deg) +
                           " deg, curvature " + std::to_string(analytic_deg) +
                           " deg, numerical diff " + sci(std::fabs(std::fabs(turning) - tc.analytic))};
  });

  criterion("7", "cusp and node magnitudes", [] {
    double worst = 0;
    for (int n = 3; n <= 12; ++n) {
      const double K = endpoint_values(n).K_n, T = std::tan(kPi / (2 * n));
      const FeatureReport r0 = extract_features(P(n, 0.0));
      for (const auto& ft : r0.features) {
        const double expect = ft.kind == FeatureKind::Cusp ? K * (1 + T) : K * (1 - T);
        worst = std::max(worst, std::fabs(ft.magnitude - expect));
      }
      const FeatureReport r1 = extract_features(P(n, kPi / 2));
      for (const auto& ft : r1.features)
        worst = std::max(worst, std::fabs(ft.magnitude - K / std::cos(kPi / (2 * n))));
      worst = std::max(worst, std::fabs(std::arg(f(P(n, kPi / 2), 1.0).f) -
                                        (kPi / 4 - kPi / (2 * n))));
    }
    return Outcome{worst < 1e-9, "max deviation " + sci(worst)};
  });

  criterion("8", "constancy at beta pi/2", [] {
    double worst_diam = 0, worst_angle = 0;
    for (int n : {3, 5, 6, 8}) {
      const RosetteParams p = P(n, kPi / 2);
      const double K = endpoint_values(n).K_n;
      for (int k = 1; k <= n; ++k) {
        std::vector<cplx> v;
        for (int i = 0; i <= 256; ++i)
          v.push_back(boundary_point(p, (2 * k - 1 + i / 256.0) * kPi / n));
        double diam = 0;
        for (cplx x : v)
          for (cplx y : v) diam = std::max(diam, std::abs(x - y));
        worst_diam = std::max(worst_diam, diam / K);
        worst_angle = std::max(worst_angle,
                               std::fabs(halfspeed_interior_angle(p, k) - (kPi / 2 - kPi / n)));
      }
    }
    return Outcome{worst_diam < 1e-7 && worst_angle < 1e-3,
                   "max diameter/K_n " + sci(worst_diam) + ", max interior angle error " +
                       sci(worst_angle)};
  });

  criterion("9", "univalence scan", [] {
    std::string failed;
    double slowest = 0;
    long min_segments = 1L << 60;
    for (int n : {3, 5, 6})
      for (double beta : {0.0, kPi / 4, kPi / 2}) {
        const auto t0 = Clock::now();
        const auto checks = univalence_scan(P(n, beta), 20);
        slowest = std::max(slowest, seconds_since(t0));
        for (const auto& c : checks)
          if (c.name == "boundary_simple") min_segments = std::min(min_segments, c.samples_used);
        const std::string f = failed_checks(checks);
        if (!f.empty()) failed += " (" + std::to_string(n) + "," + sci(beta) + "):" + f;
      }
    return Outcome{failed.empty() && slowest < 120 && min_segments >= 4096,
                   "400 interior and 128 exterior probes each; fewest segments " +
                       std::to_string(min_segments) + "; slowest " + sci(slowest) + " s" + failed};
  });

  criterion("10", "fundamental-set tiling", [] {
    std::string detail, failed;
    for (auto [n, beta] : std::vector<std::pair<int, double>>{
             {5, kPi / 5}, {5, kPi / 2}, {6, 0.0}, {4, 1.9}}) {
      const DecompositionResult r = fundamental_decomposition(P(n, beta), 100);
      failed += failed_checks(r.checks);
      if (r.probes != 10000) failed += " probes=" + std::to_string(r.probes);
      detail += " (" + std::to_string(n) + "," + sci(beta) + "): " +
                std::to_string(r.probes_inside_one) + " in one, " +
                std::to_string(r.probes_on_shared_boundary) + " on shared boundary;";
    }
    return Outcome{failed.empty(), "10^4 probes each;" + detail + failed};
  });

  criterion("11", "hypocycloid baseline", [] {
    double worst = 0;
    bool counts = true;
    for (int n = 3; n <= 12; ++n) {
      CurveFn c = [n](double t) { return hypocycloid(n, std::polar(1.0, t)); };
      const auto found =
          detect_cusps_numeric(c, central_difference_tangent(c), -0.05, 2 * kPi - 0.05, 4000);
      counts = counts && found.size() == std::size_t(n);
      for (std::size_t k = 0; k < found.size(); ++k)
        worst = std::max(worst, std::abs(found[k].location -
                                         double(n) / (n - 1) * std::polar(1.0, 2 * k * kPi / n)));
    }
    return Outcome{counts && worst < 1e-10, "max cusp location error " + sci(worst)};
  });

  criterion("12", "figures and overlay consistency", [] {
    const std::filesystem::path dir = "acceptance_figures";
    std::filesystem::create_directories(dir);
    struct Fig {
      std::string name;
      int n;
      double beta;
      std::set<Overlay> overlays;
      bool copies;
    };
    const std::vector<Fig> figs = {
        {"grid_n6_b0", 6, 0.0, {Overlay::Features}, false},
        {"grid_n5_b0", 5, 0.0, {Overlay::Features, Overlay::CuspAxes}, false},
        {"grid_n5_bpi3", 5, kPi / 3, {Overlay::Features, Overlay::CuspAxes}, false},
        {"grid_n5_bmpi3", 5, -kPi / 3, {Overlay::Features, Overlay::CuspAxes}, false},
        {"grid_n5_bpi2", 5, kPi / 2, {Overlay::Features}, false},
        {"fundamental_n5_bpi5", 5, kPi / 5, {Overlay::FundamentalSet, Overlay::Features}, true},
        {"fundamental_n5_bpi2", 5, kPi / 2, {Overlay::FundamentalSet, Overlay::Features}, true},
    };
    double worst = 0;
    for (const auto& fg : figs) {
      RenderSpec spec;
      spec.params = P(fg.n, fg.beta);
      spec.overlays = fg.overlays;
      spec.all_fundamental_copies = fg.copies;
      const RenderResult r = render(spec);
      write_text_file((dir / (fg.name + ".svg")).string(), r.svg);
      worst = std::max(worst, overlay_consistency(r));
    }
    return Outcome{worst < 0.5, std::to_string(figs.size()) + " figures in " + dir.string() +
                                    "; max dot-to-boundary distance " + sci(worst) + " px"};
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
