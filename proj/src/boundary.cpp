#include "rosette/boundary.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "rosette/errors.hpp"

namespace rosette {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr std::array<double, 3> kOffsets = {1e-3, 1e-4, 1e-5};

void require_canonical(const RosetteParams& p) {
  validate(p);
  if (!p.is_canonical())
    throw NonCanonicalBeta("beta must lie in (-pi/2, pi/2]; reduce it first");
}

// quadratic through (x_i, y_i), evaluated at 0
double extrapolate_to_zero(const std::array<double, 3>& x, const std::array<double, 3>& y) {
  double out = 0;
  for (int i = 0; i < 3; ++i) {
    double w = 1;
    for (int j = 0; j < 3; ++j)
      if (j != i) w *= (0 - x[j]) / (x[i] - x[j]);
    out += w * y[i];
  }
  return out;
}

double wrap_2pi(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r;
}

} // namespace

double angle_diff(double a, double b) {
  double d = std::remainder(a - b, kTwoPi);
  if (d <= -kPi) d += kTwoPi;
  return d;
}

std::string to_string(FeatureKind k) {
  switch (k) {
  case FeatureKind::Cusp: return "cusp";
  case FeatureKind::RemovableNode: return "removable_node";
  case FeatureKind::Node: return "node";
  }
  return "?";
}

double distance_to_singular(int n, double t) {
  double u = t * n / kPi;
  return std::fabs(u - std::nearbyint(u)) * kPi / n;
}

cplx boundary_point(const RosetteParams& p, double t) { return f_at(p, t).f; }

std::pair<cplx, cplx> summand_derivatives(const RosetteParams& p, double t) {
  validate(p);
  if (distance_to_singular(p.n, t) < kSingularTol)
    throw SingularParameter("boundary derivative undefined at multiples of pi/n");
  const cplx iz = cplx(0, 1) * std::polar(1.0, t);
  const cplx s = std::sqrt(one_minus_unit_power_2n(p.n, t));
  const cplx hp = 1.0 / s;
  const cplx gp = std::polar(1.0, (p.n - 2) * t) / s;
  const cplx a = std::polar(1.0, p.beta / 2);
  return {a * hp * iz, std::conj(a) * std::conj(gp * iz)};
}

BoundaryDerivative boundary_derivative(const RosetteParams& p, double t) {
  require_canonical(p);
  auto [dh_t, dg_t] = summand_derivatives(p, t);
  const double n = p.n;
  // j-th basic interval ((j-1)pi/n, j pi/n); odd j is the first half of its petal
  const long j = static_cast<long>(std::floor(t * n / kPi)) + 1;
  const bool first_half = (j % 2 + 2) % 2 == 1;
  const double sb = std::sin(p.beta);
  const double rad = std::sqrt(std::abs(one_minus_unit_power_2n(p.n, t)));
  BoundaryDerivative out;
  if (p.is_half_pi() && !first_half) {
    out.d_value = 0.0;
    out.d_mag = 0.0;
    return out;
  }
  out.d_value = dh_t + dg_t;
  out.d_mag = std::sqrt(2.0) * std::sqrt(std::max(0.0, 1.0 + (first_half ? sb : -sb))) / rad;
  const double k = std::ceil(t * n / kTwoPi);
  out.d_arg = k * kPi - (n / 2.0 - 1.0) * t;
  return out;
}

BoundaryDerivative boundary_derivative_any(const RosetteParams& p, double t) {
  validate(p);
  if (p.is_canonical()) return boundary_derivative(p, t);
  const BetaReduction red = reduce_beta(p.beta);
  const RosetteParams pc{p.n, red.beta, p.policy};
  BoundaryDerivative d = boundary_derivative(pc, t - red.l * kPi / p.n);
  d.d_value *= reduction_rotation(p.n, red.l);
  if (d.d_arg) *d.d_arg += red.l * (kPi / p.n + kPi / 2);
  return d;
}

std::vector<double> clustered_parameters(int n, int per_interval) {
  if (per_interval < 1) throw DomainError("per_interval must be >= 1");
  std::vector<double> ts;
  ts.reserve(static_cast<std::size_t>(2 * n * per_interval));
  const double w = kPi / n;
  for (int j = 0; j < 2 * n; ++j) {
    for (int i = 0; i < per_interval; ++i) {
      double u = double(i) / per_interval;
      ts.push_back(j * w + w * (1.0 - std::cos(kPi * u)) / 2.0);
    }
  }
  return ts;
}

std::vector<CurveSample> sample_boundary(const RosetteParams& p, int per_interval) {
  validate(p);
  const bool canon = p.is_canonical();
  std::vector<CurveSample> out;
  for (double t : clustered_parameters(p.n, per_interval)) {
    CurveSample s{t, boundary_point(p, t), {}, {}, {}};
    if (canon && distance_to_singular(p.n, t) >= kSingularTol) {
      auto d = boundary_derivative(p, t);
      s.d_value = d.d_value;
      s.d_arg = d.d_arg;
      s.d_mag = d.d_mag;
    }
    out.push_back(s);
  }
  return out;
}

std::pair<double, double> one_sided_tangents(const CurveFn& curve, double t0,
                                             std::optional<cplx> at) {
  const cplx c0 = at ? *at : curve(t0);
  std::array<double, 3> left{}, right{};
  for (std::size_t i = 0; i < kOffsets.size(); ++i) {
    double d = kOffsets[i];
    left[i] = std::arg(c0 - curve(t0 - d));
    right[i] = std::arg(curve(t0 + d) - c0);
  }
  for (int i = 1; i >= 0; --i) {
    left[i] = left[i + 1] + angle_diff(left[i], left[i + 1]);
    right[i] = right[i + 1] + angle_diff(right[i], right[i + 1]);
  }
  std::array<double, 3> x{kOffsets[0], kOffsets[1], kOffsets[2]};
  return {extrapolate_to_zero(x, left), extrapolate_to_zero(x, right)};
}

double separation_angle(const RosetteParams& p, SeparationSign sign) {
  validate(p);
  if (!(std::fabs(p.beta) < kPi / 2 - kBetaSnap))
    throw NonCanonicalBeta("separation angle requires |beta| < pi/2");
  const double tq = std::tan(kPi / (2.0 * p.n));
  const double a = std::atan(2.0 * tq * std::sin(p.beta) / (1.0 - tq * tq));
  return kPi / p.n + (sign == SeparationSign::NodeAfterCusp ? a : -a);
}

cplx halfspeed_reparam(const RosetteParams& p, double t) {
  validate(p);
  if (!p.is_half_pi()) throw WrongBeta("half-speed reparametrization requires beta = pi/2");
  const double k = std::floor(t * p.n / kTwoPi) + 1.0;
  return boundary_point(p, (k - 1.0) * kPi / p.n + t / 2.0);
}

double halfspeed_interior_angle(const RosetteParams& p, int k) {
  if (!p.is_half_pi()) throw WrongBeta("half-speed reparametrization requires beta = pi/2");
  const double T = 2.0 * k * kPi / p.n;
  auto [l, r] = one_sided_tangents([&](double t) { return halfspeed_reparam(p, t); }, T,
                                   f_at_multiple(p, 2 * k).f);
  return kPi - std::fabs(angle_diff(r, l));
}

FeatureReport extract_features(const RosetteParams& p) {
  require_canonical(p);
  FeatureReport rep;
  rep.params = p;
  const int n = p.n;
  CurveFn alpha = [&](double t) { return boundary_point(p, t); };
  if (p.is_half_pi()) {
    for (int k = 0; k < n; ++k) {
      BoundaryFeature ft{};
      ft.kind = FeatureKind::Node;
      ft.t = 2.0 * k * kPi / n;
      ft.location = f_at_multiple(p, 2 * k).f;
      ft.magnitude = std::abs(ft.location);
      ft.argument = std::arg(ft.location);
      ft.interior_angle = kPi / 2 - kPi / n;
      auto [l, r] = one_sided_tangents([&](double t) { return halfspeed_reparam(p, t); }, ft.t,
                                       ft.location);
      ft.left_tangent = l;
      ft.right_tangent = r;
      ft.turn = angle_diff(r, l);
      ft.confirmed = std::fabs((kPi - std::fabs(ft.turn)) - *ft.interior_angle) < 1e-3;
      rep.features.push_back(ft);
    }
    rep.total_curvature_per_petal = (n / 2.0 - 1.0) * kPi / n;
  } else {
    for (int j = 0; j < 2 * n; ++j) {
      BoundaryFeature ft{};
      ft.t = j * kPi / n;
      ft.location = f_at_multiple(p, j).f;
      ft.magnitude = std::abs(ft.location);
      ft.argument = std::arg(ft.location);
      auto [l, r] = one_sided_tangents(alpha, ft.t, ft.location);
      ft.left_tangent = l;
      ft.right_tangent = r;
      ft.turn = angle_diff(r, l);
      if (j % 2 == 0) {
        ft.kind = FeatureKind::Cusp;
        ft.axis_arg = ft.t;
        ft.confirmed = std::fabs(std::fabs(ft.turn) - kPi) < 1e-3 &&
                       std::fabs(angle_diff(l, *ft.axis_arg)) < 1e-3;
      } else {
        ft.kind = FeatureKind::RemovableNode;
        ft.tangent_arg = kPi / 2 + ft.t;
        ft.confirmed = std::fabs(ft.turn) < 1e-3 &&
                       std::fabs(angle_diff(l, *ft.tangent_arg)) < 1e-3;
      }
      rep.features.push_back(ft);
    }
    rep.total_curvature_per_petal = kPi - 2.0 * kPi / n;
  }
  const auto& fs = rep.features;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto& a = fs[i];
    const auto& b = fs[(i + 1) % fs.size()];
    rep.separations.push_back(wrap_2pi(b.argument - a.argument));
  }
  return rep;
}

TotalCurvature total_curvature(const RosetteParams& p, double t0, double t1) {
  require_canonical(p);
  if (!(t1 > t0)) throw DomainError("total_curvature requires t0 < t1");
  const int n = p.n;
  const double period = kTwoPi / n;
  const double tol = 1e-12;
  const double first = std::ceil((t0 + tol) / period) * period;
  if (first < t1 - tol) throw IntervalCrossesCusp("interval contains a cusp parameter");
  if (p.is_half_pi()) {
    const double base = std::floor((t0 + tol) / period) * period;
    if (t1 > base + kPi / n + tol)
      throw IntervalCrossesCusp("at beta = pi/2 the interval must lie in an active first half");
  }
  const double analytic = (n / 2.0 - 1.0) * (t1 - t0);
  const int N = 4000;
  const double eps = 1e-9;
  const double a = t0 + eps, b = t1 - eps;
  double turning = 0;
  std::optional<double> prev;
  for (int i = 0; i <= N; ++i) {
    double t = a + (b - a) * i / N;
    if (distance_to_singular(n, t) < 1e-11) continue;
    double ang = std::arg(boundary_derivative(p, t).d_value);
    if (prev) turning += angle_diff(ang, *prev);
    prev = ang;
  }
  return {analytic, std::fabs(turning), turning};
}

Nonmonotonicity detect_arg_nonmonotonicity(const RosetteParams& p) {
  require_canonical(p);
  const double period = kTwoPi / p.n;
  std::vector<double> ts;
  for (double t : clustered_parameters(p.n, 4096))
    if (t <= period) ts.push_back(t);
  ts.push_back(period);
  double prev_t = ts.front();
  double prev_raw = std::arg(boundary_point(p, prev_t));
  double unwrapped = prev_raw;
  for (std::size_t i = 1; i < ts.size(); ++i) {
    double raw = std::arg(boundary_point(p, ts[i]));
    double next = unwrapped + angle_diff(raw, prev_raw);
    if (next < unwrapped - 1e-12) return {true, 0.5 * (prev_t + ts[i])};
    unwrapped = next;
    prev_raw = raw;
    prev_t = ts[i];
  }
  return {false, 0.0};
}

CurveFn central_difference_tangent(const CurveFn& curve, double h) {
  return [curve, h](double t) { return (curve(t + h) - curve(t - h)) / (2.0 * h); };
}

std::vector<BoundaryFeature> detect_cusps_numeric(const CurveFn& curve, const CurveFn& tangent,
                                                  double t0, double t1, int samples) {
  if (samples < 4) throw DomainError("detect_cusps_numeric needs at least 4 samples");
  auto dot = [](cplx a, cplx b) { return a.real() * b.real() + a.imag() * b.imag(); };
  std::vector<BoundaryFeature> out;
  const double dt = (t1 - t0) / samples;
  double ta = t0 + 0.5 * dt;
  cplx va = tangent(ta);
  for (int i = 1; i < samples; ++i) {
    double tb = t0 + (i + 0.5) * dt;
    cplx vb = tangent(tb);
    if (dot(va, vb) < 0) {
      // compare against the bracket's left tangent only: near a cusp the
      // tangent itself may be tiny and directionless
      double a = ta, b = tb;
      while (b - a > 1e-11) {
        double m = 0.5 * (a + b);
        if (dot(va, tangent(m)) < 0)
          b = m;
        else
          a = m;
      }
      BoundaryFeature ft{};
      ft.kind = FeatureKind::Cusp;
      ft.t = 0.5 * (a + b);
      ft.location = curve(ft.t);
      ft.magnitude = std::abs(ft.location);
      ft.argument = std::arg(ft.location);
      auto [l, r] = one_sided_tangents(curve, ft.t);
      ft.left_tangent = l;
      ft.right_tangent = r;
      ft.turn = angle_diff(r, l);
      ft.axis_arg = l;
      ft.confirmed = std::fabs(std::fabs(ft.turn) - kPi) < 1e-3;
      out.push_back(ft);
    }
    ta = tb;
    va = vb;
  }
  return out;
}

} // namespace rosette
