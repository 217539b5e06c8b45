#include "rosette/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "rosette/errors.hpp"

namespace rosette {

namespace {

constexpr double kTwoPi = 2.0 * kPi;

cplx ipow(cplx z, int k) {
  cplx out = 1.0, b = z;
  while (k > 0) {
    if (k & 1) out *= b;
    b *= b;
    k >>= 1;
  }
  return out;
}

double bounding_radius(int n) {
  return endpoint_values(n).K_n * (1.0 + std::tan(kPi / (2.0 * n)));
}

struct MaxTracker {
  double worst = 0;
  long count = 0;
  void add(double r) {
    ++count;
    if (!(r <= worst)) worst = r;  // NaN sticks
  }
};

Check make_check(const std::string& name, const MaxTracker& m, double tol,
                 const std::string& detail = "") {
  return {name, m.worst <= tol, m.worst, m.count, tol, detail};
}

class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  double uniform() { return unit_double(rng_()); }
  // uniform in the disk of radius rmax
  cplx disk(double rmax) {
    double r = rmax * std::sqrt(uniform());
    return std::polar(r, kTwoPi * uniform());
  }

private:
  std::mt19937_64 rng_;
};

double subtended(cplx a, cplx b, cplx w0) { return std::arg((b - w0) / (a - w0)); }

double refine_segment(cplx a, cplx b, cplx w0, int depth) {
  double inc = subtended(a, b, w0);
  if (std::fabs(inc) < kPi / 2 || depth > 40) return inc;
  cplx m = 0.5 * (a + b);
  return refine_segment(a, m, w0, depth + 1) + refine_segment(m, b, w0, depth + 1);
}

double refine_param(const CurveFn& c, double ta, double tb, cplx a, cplx b, cplx w0, int depth,
                    double& min_dist) {
  double inc = subtended(a, b, w0);
  if (std::fabs(inc) < kPi / 2 || depth > 40) {
    min_dist = std::min(min_dist, point_segment_distance(w0, a, b));
    return inc;
  }
  double tm = 0.5 * (ta + tb);
  cplx m = c(tm);
  return refine_param(c, ta, tm, a, m, w0, depth + 1, min_dist) +
         refine_param(c, tm, tb, m, b, w0, depth + 1, min_dist);
}

Polyline closed(Polyline p) {
  if (!p.empty()) p.push_back(p.front());
  return p;
}

} // namespace

double unit_double(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void VerificationReport::append(const std::vector<Check>& more) {
  checks.insert(checks.end(), more.begin(), more.end());
}

WindingResult winding_number(const Polyline& curve, cplx w0, double exclusion_radius,
                             double closure_tol) {
  if (curve.size() < 4) throw OpenCurve("closed curve needs at least three distinct vertices");
  if (std::abs(curve.front() - curve.back()) > closure_tol)
    throw OpenCurve("curve is not closed: first and last vertices differ");
  double dmin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < curve.size(); ++i)
    dmin = std::min(dmin, point_segment_distance(w0, curve[i], curve[i + 1]));
  if (!(dmin > exclusion_radius) || dmin == 0)
    throw TooCloseToCurve("winding probe lies within the exclusion radius of the curve");
  double total = 0;
  for (std::size_t i = 0; i + 1 < curve.size(); ++i)
    total += refine_segment(curve[i], curve[i + 1], w0, 0);
  return {w0, static_cast<int>(std::lround(total / kTwoPi)), dmin};
}

WindingResult winding_number(const CurveFn& curve, double t0, double t1, cplx w0,
                             double exclusion_radius, int initial_samples) {
  if (initial_samples < 3) throw DomainError("winding_number needs at least 3 samples");
  cplx first = curve(t0), last = curve(t1);
  double scale = std::max(1.0, std::abs(first));
  if (std::abs(first - last) > 1e-9 * scale) throw OpenCurve("parametric curve is not closed");
  double dmin = std::numeric_limits<double>::infinity();
  double total = 0;
  cplx prev = first;
  double tp = t0;
  for (int i = 1; i <= initial_samples; ++i) {
    double t = t0 + (t1 - t0) * i / initial_samples;
    cplx cur = i == initial_samples ? first : curve(t);
    total += refine_param(curve, tp, t, prev, cur, w0, 0, dmin);
    prev = cur;
    tp = t;
  }
  if (!(dmin > exclusion_radius) || dmin == 0)
    throw TooCloseToCurve("winding probe lies within the exclusion radius of the curve");
  return {w0, static_cast<int>(std::lround(total / kTwoPi)), dmin};
}

Polyline boundary_polyline(const RosetteParams& p, int min_segments) {
  validate(p);
  const int per = std::max(64, (min_segments + 2 * p.n - 1) / (2 * p.n));
  Polyline pts;
  const bool half = p.is_half_pi();
  for (double t : clustered_parameters(p.n, per)) {
    if (half)
      pts.push_back(halfspeed_reparam(p, t));
    else
      pts.push_back(boundary_point(p, t));
  }
  // feature vertices from the exact evaluation
  if (!half) {
    const std::size_t stride = static_cast<std::size_t>(per);
    for (long j = 0; j < 2 * p.n; ++j) pts[j * stride] = f_at_multiple(p, j).f;
  }
  return dedup_closed(pts, 1e-13 * bounding_radius(p.n));
}

std::vector<Check> univalence_scan(const RosetteParams& p, int grid_resolution) {
  validate(p);
  if (!p.is_canonical()) throw NonCanonicalBeta("univalence_scan requires canonical beta");
  if (grid_resolution < 2) throw DomainError("grid_resolution must be >= 2");
  std::vector<Check> out;
  const double K = endpoint_values(p.n).K_n;
  const double excl = 1e-6 * K;
  const double B = bounding_radius(p.n);
  const Polyline poly = boundary_polyline(p, 4096);

  {
    auto hit = find_self_intersection(poly);
    std::ostringstream d;
    d << poly.size() << " segments";
    if (hit) d << "; edges " << hit->first << " and " << hit->second << " intersect";
    out.push_back({"boundary_simple", !hit, hit ? 1.0 : 0.0, static_cast<long>(poly.size()), 0.0,
                   d.str()});
    double area = signed_area(poly);
    out.push_back({"boundary_positive_orientation", area > 0, area > 0 ? 0.0 : 1.0, 1, 0.0,
                   "signed area " + std::to_string(area)});
  }

  const Polyline loop = closed(poly);
  const int R = grid_resolution;
  std::vector<cplx> zs, ws;
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j) {
      double r = 0.97 * (i + 0.5) / R;
      double th = kTwoPi * (j + 0.25) / R;
      zs.push_back(std::polar(r, th));
    }
  for (cplx z : zs) ws.push_back(f(p, z).f);

  {
    MaxTracker m;
    long bad = 0;
    double closest = std::numeric_limits<double>::infinity();
    for (cplx w : ws) {
      int wn;
      try {
        auto res = winding_number(loop, w, excl);
        wn = res.winding;
        closest = std::min(closest, res.min_distance_to_curve);
      } catch (const TooCloseToCurve&) {
        wn = -999;
      }
      if (wn != 1) ++bad;
      m.add(std::abs(wn - 1));
    }
    std::ostringstream d;
    d << bad << " probes with winding != 1; closest approach " << closest;
    out.push_back(make_check("interior_winding", m, 0.0, d.str()));
  }
  {
    MaxTracker m;
    long bad = 0;
    for (double scale : {1.05, 2.0})
      for (int j = 0; j < 64; ++j) {
        cplx w = std::polar(scale * B, kTwoPi * (j + 0.5) / 64);
        int wn = winding_number(loop, w, excl).winding;
        if (wn != 0) ++bad;
        m.add(std::abs(wn));
      }
    out.push_back(make_check("exterior_winding", m, 0.0,
                             std::to_string(bad) + " exterior probes with winding != 0"));
  }
  {
    double sep = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < ws.size(); ++a)
      for (std::size_t b = a + 1; b < ws.size(); ++b) sep = std::min(sep, std::abs(ws[a] - ws[b]));
    const double floor_sep = 1e-12 * B;
    out.push_back({"grid_injectivity", sep > floor_sep, sep, static_cast<long>(ws.size()),
                   floor_sep, "minimum pairwise separation of grid images"});
  }
  {
    double jmin = std::numeric_limits<double>::infinity();
    for (cplx z : zs) jmin = std::min(jmin, jacobian(p, z));
    out.push_back({"jacobian_positive", jmin > 0, jmin, static_cast<long>(zs.size()), 0.0,
                   "minimum jacobian on the grid"});
  }
  return out;
}

IntegralOracle integral_oracle(const RosetteParams& p, cplx z, IntegralIdentity which,
                               const QuadratureOptions& opt) {
  validate(p);
  if (!(std::abs(z) <= 1.0 + kDomainEps)) throw DomainError("integral_oracle requires |z| <= 1");
  if (z == 0.0) return {0.0, 0.0, 0.0};
  const int n = p.n;
  const cplx zw = ipow(z, 2 * n);
  const cplx a = 1.0 - zw;
  // zeta = z (1 - u^2), d zeta = -2 z u du; 1 - zeta^{2n} = a + zw (1 - (1 - u^2)^{2n})
  auto integrand = [&](double u) -> cplx {
    const double v = u * u;
    const double b = -std::expm1(2.0 * n * std::log1p(-v));
    const cplx om = a + zw * b;
    const cplx base = 2.0 * u * z / std::sqrt(om);
    if (which == IntegralIdentity::H) return base;
    return base * ipow(z * (1.0 - v), n - 2);
  };
  const cplx lhs = integrate_gk15(integrand, 0.0, 1.0, opt).value;
  const cplx rhs = which == IntegralIdentity::H ? h(p, z) : g(p, z);
  return {lhs, rhs, std::abs(lhs - rhs)};
}

std::vector<Check> integral_oracle_sweep(const RosetteParams& p, int points, std::uint64_t seed) {
  Sampler s(seed);
  std::vector<cplx> zs;
  for (int i = 0; i < points; ++i) zs.push_back(s.disk(1.0));
  zs.push_back(1.0);
  MaxTracker mh, mg;
  for (cplx z : zs) {
    mh.add(integral_oracle(p, z, IntegralIdentity::H).residual);
    mg.add(integral_oracle(p, z, IntegralIdentity::G).residual);
  }
  return {make_check("integral_identity_h", mh, 1e-9), make_check("integral_identity_g", mg, 1e-9)};
}

std::vector<Check> symmetry_suite(const RosetteParams& p, int sample_count, std::uint64_t seed) {
  validate(p);
  if (sample_count < 1) throw DomainError("sample_count must be >= 1");
  const int n = p.n;
  const double tol = 1e-10;
  Sampler s(seed);
  std::vector<cplx> zs;
  for (int i = 0; i < sample_count; ++i) zs.push_back(s.disk(0.999));

  const cplx I(0, 1);
  const RosetteParams p0{n, 0.0, p.policy};
  const RosetteParams pm{n, -p.beta, p.policy};
  const RosetteParams pplus{n, p.beta + kPi, p.policy};
  const RosetteParams pminus{n, p.beta - kPi, p.policy};
  const RosetteParams phalf{n, kPi / 2, p.policy};
  const BetaReduction red = reduce_beta(p.beta);
  const RosetteParams pc{n, red.beta, p.policy};
  std::vector<std::pair<RosetteParams, BetaReduction>> shifted;
  for (int off : {0, 2, -3}) {
    const RosetteParams pt{n, p.beta + off * kPi, p.policy};
    shifted.emplace_back(pt, reduce_beta(pt.beta));
  }

  MaxTracker rot, hrot, grot, refl, refl0, bplus, bminus, trans, half, crot, dil, jac, fd;
  for (cplx z : zs) {
    const MapValue fz = f(p, z);
    for (int k = 1; k < n; ++k) {
      cplx e = std::polar(1.0, kTwoPi * k / n);
      rot.add(std::abs(f(p, e * z).f - e * fz.f));
    }
    const cplx hz = h(p, z), gz = g(p, z);
    for (int j = 1; j < 2 * n; ++j) {
      cplx e = std::polar(1.0, j * kPi / n);
      hrot.add(std::abs(h(p, e * z) - e * hz));
      double sign = (j % 2 == 0) ? 1.0 : -1.0;
      grot.add(std::abs(g(p, e * z) - sign * std::conj(e) * gz));
    }
    refl.add(std::abs(f(p, std::conj(z)).f - std::conj(f(pm, z).f)));
    refl0.add(std::abs(f(p0, std::conj(z)).f - std::conj(f(p0, z).f)));
    const cplx rn = std::polar(1.0, kPi / n);
    const cplx ph = std::polar(1.0, kPi / 2 + kPi / n);
    bplus.add(std::abs(fz.f - std::conj(ph) * f(pplus, rn * z).f));
    bminus.add(std::abs(fz.f - ph * f(pminus, std::conj(rn) * z).f));
    // f_{beta + l pi}(z) = e^{i l (pi/n + pi/2)} f_beta(e^{-i l pi/n} z)
    for (const auto& [pt, rd] : shifted) {
      const RosetteParams pr{n, rd.beta, p.policy};
      trans.add(std::abs(f(pt, z).f - std::polar(1.0, rd.l * (kPi / n + kPi / 2)) *
                                          f(pr, std::polar(1.0, -rd.l * kPi / n) * z).f));
    }
    {
      const double eta = kPi / (2.0 * n) - kPi / 4, gam = -kPi / (2.0 * n);
      const cplx ee = std::polar(1.0, eta), eg = std::polar(1.0, gam);
      half.add(std::abs(ee * f(phalf, eg * std::conj(z)).f - std::conj(ee * f(phalf, eg * z).f)));
    }
    {
      double th = kTwoPi * s.uniform() - kPi, tht = kTwoPi * s.uniform() - kPi;
      RotationForm rf = canonical_rotation(th, tht);
      RosetteParams pr{n, rf.beta, p.policy};
      cplx lhs = std::polar(1.0, th) * hz + std::conj(std::polar(1.0, tht) * gz);
      crot.add(std::abs(lhs - std::polar(1.0, rf.gamma) * f(pr, z).f));
    }
    const cplx om = dilatation(p, z);
    const cplx hp = dh(p, z), gp = dg(p, z);
    dil.add(std::abs(gp / hp - om) / std::max(std::abs(om), std::numeric_limits<double>::min()));
    {
      double J = jacobian(p, z);
      double J2 = std::norm(hp) - std::norm(gp);
      jac.add(J > 0 ? std::fabs(J - J2) / std::max(1.0, std::fabs(J)) : 1.0);
    }
    if (std::abs(z) <= 0.9) {
      const double d = 1e-5;
      const cplx a = std::polar(1.0, p.beta / 2);
      const cplx fzw = a * hp, fzb = std::conj(a) * std::conj(gp);
      cplx dx = (f(p, z + d).f - f(p, z - d).f) / (2 * d);
      cplx dy = (f(p, z + I * d).f - f(p, z - I * d).f) / (2 * d);
      double e1 = std::abs(dx - (fzw + fzb)), e2 = std::abs(dy - I * (fzw - fzb));
      fd.add(std::max(e1, e2) / (1.0 + std::abs(fzw)));
    }
  }
  std::vector<Check> out = {
      make_check("rotation_2pi_over_n", rot, tol),
      make_check("h_rotation_pi_over_n", hrot, tol),
      make_check("g_rotation_pi_over_n", grot, tol),
      make_check("reflection_conj_beta", refl, tol),
      make_check("reflection_beta_zero", refl0, tol),
      make_check("beta_plus_pi", bplus, tol),
      make_check("beta_minus_pi", bminus, tol),
      make_check("beta_reduction_identity", trans, tol,
                 "l = " + std::to_string(red.l) + ", canonical beta = " + std::to_string(red.beta)),
      make_check("half_pi_reflection", half, tol),
      make_check("canonical_rotation", crot, tol),
      make_check("dilatation_quotient", dil, 1e-12),
      make_check("jacobian_positive_consistent", jac, 1e-10),
      make_check("finite_difference_derivative", fd, 1e-6),
  };

  // radial behaviour on the rays arg z = 0 and arg z = pi/n
  const int M = 400;
  const cplx rn = std::polar(1.0, kPi / n);
  if (std::fabs(red.beta) <= kBetaSnap) {
    MaxTracker straight;
    for (int i = 1; i <= M; ++i) {
      double r = 0.999 * i / M;
      straight.add(std::fabs(std::arg(f(pc, r).f)));
      straight.add(std::fabs(angle_diff(std::arg(f(pc, r * rn).f), kPi / n)));
    }
    out.push_back(make_check("beta_zero_rays_straight", straight, tol));
  }
  if (red.beta > kBetaSnap) {
    MaxTracker mono;
    double prev0 = 0, prev1 = 0, pa0 = 0, pa1 = 0;
    const cplx a = std::polar(1.0, red.beta / 2);
    for (int i = 1; i <= M; ++i) {
      double r = 0.999 * i / M;
      double m0 = std::abs(f(pc, r).f), m1 = std::abs(f(pc, r * rn).f);
      cplx d0 = a * dh(pc, r) + std::conj(a) * std::conj(dg(pc, r));
      cplx d1 = a * dh(pc, r * rn) * rn + std::conj(a) * std::conj(dg(pc, r * rn) * rn);
      double a0 = std::arg(d0), a1 = std::arg(d1);
      if (i > 1) {
        mono.add(m0 > prev0 ? 0.0 : prev0 - m0 + 1e-300);
        mono.add(m1 > prev1 ? 0.0 : prev1 - m1 + 1e-300);
        mono.add(angle_diff(a0, pa0) < 0 ? 0.0 : angle_diff(a0, pa0) + 1e-300);
        mono.add(angle_diff(a1, pa1) > 0 ? 0.0 : -angle_diff(a1, pa1) + 1e-300);
      }
      prev0 = m0;
      prev1 = m1;
      pa0 = a0;
      pa1 = a1;
    }
    out.push_back(make_check("radial_monotonicity", mono, 0.0));
  }
  {
    // |f(1)|^2 + |f(e^{i pi/n})|^2 = 2 K^2 sec^2(pi/2n)
    MaxTracker sc;
    double K = endpoint_values(n).K_n;
    double sec = 1.0 / std::cos(kPi / (2.0 * n));
    double lhs = std::norm(f_at_multiple(pc, 0).f) + std::norm(f_at_multiple(pc, 1).f);
    sc.add(std::fabs(lhs - 2 * K * K * sec * sec));
    out.push_back(make_check("scaling_coherence", sc, 1e-10));
  }
  return out;
}

Polyline fundamental_set_boundary(const RosetteParams& pc, int M) {
  validate(pc);
  if (!pc.is_canonical()) throw NonCanonicalBeta("fundamental set needs canonical beta");
  const int n = pc.n;
  const double sector = kTwoPi / n;
  const cplx e2 = std::polar(1.0, sector);
  // ray arg z = 0 outwards, arc 0 -> 2pi/n, ray arg z = 2pi/n inwards;
  // radii cluster near 1 where the image moves like sqrt(1 - r)
  Polyline poly;
  for (int i = 0; i < M; ++i) {
    double u = double(i) / M;
    poly.push_back(f(pc, 1.0 - (1.0 - u) * (1.0 - u)).f);
  }
  for (double t : clustered_parameters(n, M)) {
    if (t > sector) break;
    poly.push_back(t == 0 ? f_at_multiple(pc, 0).f : boundary_point(pc, t));
  }
  poly.push_back(f_at_multiple(pc, 2).f);
  for (int i = M - 1; i >= 0; --i) {
    double u = double(i) / M;
    poly.push_back(f(pc, (1.0 - (1.0 - u) * (1.0 - u)) * e2).f);
  }
  Polyline out = dedup_closed(poly, 1e-13 * endpoint_values(n).K_n);
  out.push_back(out.front());
  return out;
}

DecompositionResult fundamental_decomposition(const RosetteParams& params_tilde, int grid) {
  validate(params_tilde);
  if (grid < 4) throw DomainError("decomposition grid must be >= 4");
  const int n = params_tilde.n;
  DecompositionResult res;
  res.params_tilde = params_tilde;
  res.reduction = reduce_beta(params_tilde.beta);
  const RosetteParams pc{n, res.reduction.beta, params_tilde.policy};
  const long l = res.reduction.l;
  const double K = endpoint_values(n).K_n;
  const double tol = 1e-6 * K;
  const double sector = kTwoPi / n;

  const Polyline canon = fundamental_set_boundary(pc);
  const cplx e2 = std::polar(1.0, sector);

  std::vector<BBox> boxes;
  for (int k = 0; k < n; ++k) {
    const double ang = l * kPi / 2 + (2.0 * k + l) * kPi / n;
    const cplx rot = std::polar(1.0, ang);
    FundamentalSet fs{pc, 0.0, sector, rot, {}};
    fs.boundary_polyline.reserve(canon.size() + 1);
    for (cplx w : canon) fs.boundary_polyline.push_back(rot * w);
    fs.boundary_polyline.push_back(fs.boundary_polyline.front());
    boxes.push_back(bounding_box(fs.boundary_polyline));
    res.sets.push_back(std::move(fs));
  }

  MaxTracker disjoint, cover;
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      const cplx z = std::polar((i + 0.5) / grid, kTwoPi * j / grid);
      const cplx w = f(params_tilde, z).f;
      int inside = 0, near = 0;
      for (int k = 0; k < n; ++k) {
        if (!boxes[k].contains(w, tol)) continue;
        const Polyline& poly = res.sets[k].boundary_polyline;
        if (distance_to_polyline(poly, w) < tol)
          ++near;
        else if (winding_crossing(poly, w) != 0)
          ++inside;
      }
      ++res.probes;
      if (inside == 1) ++res.probes_inside_one;
      if (inside == 0 && near >= 1) ++res.probes_on_shared_boundary;
      disjoint.add(inside <= 1 ? 0.0 : inside - 1.0);
      cover.add(inside + near >= 1 ? 0.0 : 1.0);
    }
  res.checks.push_back(make_check("fundamental_disjoint", disjoint, 0.0,
                                  std::to_string(res.probes_inside_one) + " of " +
                                      std::to_string(res.probes) + " probes strictly inside one copy"));
  res.checks.push_back(make_check("fundamental_cover", cover, 0.0,
                                  std::to_string(res.probes_on_shared_boundary) +
                                      " probes on shared boundaries"));
  {
    MaxTracker m;
    const double eps = 1e-7;
    double d0 = std::arg(f(pc, eps).f);
    double d1 = std::arg(f(pc, eps * std::polar(1.0, kPi / n)).f);
    double d2 = std::arg(f(pc, eps * e2).f);
    m.add(std::fabs(angle_diff(d1, d0) - kPi / n));
    m.add(std::fabs(angle_diff(d2, d1) - kPi / n));
    m.add(std::fabs(angle_diff(d2, d0) - sector));
    res.checks.push_back(make_check("origin_angles", m, 1e-6));
  }
  if (pc.is_half_pi()) {
    // the bigon between the images of the rays at pi/n and 2pi/n meets the node
    const cplx node = f_at_multiple(pc, 2).f;
    auto ray = [&](double th) {
      return [&, th](double s) { return f(pc, (1.0 - s) * std::polar(1.0, th)).f; };
    };
    auto dir = [&](const CurveFn& c) {
      return one_sided_tangents([&](double s) { return s <= 0 ? node : c(s); }, 0.0, node).second;
    };
    double a1 = dir(ray(kPi / n)), a2 = dir(ray(sector));
    MaxTracker m;
    double angle = std::fabs(angle_diff(a1, a2));
    m.add(std::fabs(angle - (kPi / 2 - kPi / n)));
    res.checks.push_back(make_check("bigon_node_angle", m, 1e-3,
                                    "measured " + std::to_string(angle)));
  }
  if (std::fabs(pc.beta) <= kBetaSnap) {
    MaxTracker m;
    Sampler s(12345);
    for (int i = 0; i < 200; ++i) {
      cplx z = s.disk(0.999);
      m.add(std::abs(f(pc, e2 * std::conj(z)).f - e2 * std::conj(f(pc, z).f)));
    }
    res.checks.push_back(make_check("triangle_mirror", m, 1e-10));
  }
  return res;
}

} // namespace rosette
