#include "rosette/mapping.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "rosette/errors.hpp"

namespace rosette {

namespace {

cplx checked_point(cplx z) {
  double r = std::abs(z);
  if (!(r <= 1.0 + kDomainEps))
    throw DomainError("point outside the closed unit disk: |z| = " + std::to_string(r));
  return r > 1.0 ? z / r : z;
}

cplx ipow(cplx z, int k) {
  cplx out = 1.0;
  cplx b = z;
  while (k > 0) {
    if (k & 1) out *= b;
    b *= b;
    k >>= 1;
  }
  return out;
}

SeriesSpec spec_of(const RosetteParams& p, SeriesKind k) { return {k, p.n, p.policy}; }

cplx radical(const RosetteParams& p, cplx z) {
  cplx s = 1.0 - ipow(z, 2 * p.n);
  if (std::abs(s) < kSingularTol)
    throw SingularPoint("derivative undefined at a 2n-th root of unity");
  return std::sqrt(s);
}

MapValue combine(const RosetteParams& p, cplx hv, cplx gv) {
  cplx a = std::polar(1.0, p.beta / 2);
  MapValue m;
  m.h = a * hv;
  m.gbar = std::conj(a) * std::conj(gv);
  m.f = m.h + m.gbar;
  return m;
}

} // namespace

BetaReduction RosetteParams::canonical() const { return reduce_beta(beta); }

bool RosetteParams::is_canonical() const {
  return beta > -kPi / 2 + kBetaSnap && beta <= kPi / 2 + kBetaSnap;
}

bool RosetteParams::is_half_pi() const { return std::fabs(beta - kPi / 2) <= kBetaSnap; }

void validate(const RosetteParams& p) {
  if (p.n < 3) throw DomainError("rosette order n must be >= 3, got " + std::to_string(p.n));
  if (!std::isfinite(p.beta)) throw DomainError("beta must be finite");
}

cplx h(const RosetteParams& p, cplx z) {
  validate(p);
  z = checked_point(z);
  return z * eval_series(spec_of(p, SeriesKind::H), ipow(z, 2 * p.n));
}

cplx g(const RosetteParams& p, cplx z) {
  validate(p);
  z = checked_point(z);
  return ipow(z, p.n - 1) / double(p.n - 1) *
         eval_series(spec_of(p, SeriesKind::G), ipow(z, 2 * p.n));
}

MapValue f(const RosetteParams& p, cplx z) { return combine(p, h(p, z), g(p, z)); }

namespace {
// fractional part of t n / pi in [-1/2, 1/2]
double reduced_phase(int n, double t) {
  double u = t * n / kPi;
  return u - std::nearbyint(u);
}
} // namespace

cplx unit_power_2n(int n, double t) { return std::polar(1.0, 2.0 * kPi * reduced_phase(n, t)); }

cplx one_minus_unit_power_2n(int n, double t) {
  // 1 - e^{i theta} = -2i sin(theta/2) e^{i theta/2}
  double half = kPi * reduced_phase(n, t);
  return cplx(0, -2.0 * std::sin(half)) * std::polar(1.0, half);
}

namespace {

// t that rounds to a multiple of pi/n: the value there has a square-root
// dependence on t, so a one-ulp error would move it by ~1e-8
std::optional<long> exact_multiple(int n, double t) {
  const double u = t * n / kPi;
  const double j = std::nearbyint(u);
  if (std::fabs(u - j) <= 8 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::fabs(u)))
    return static_cast<long>(j);
  return std::nullopt;
}

cplx h_unit(const RosetteParams& p, double t, std::optional<long> j) {
  if (j) return std::polar(1.0, *j * kPi / p.n) * series_at_one(spec_of(p, SeriesKind::H)).value;
  cplx x = one_minus_unit_power_2n(p.n, t);
  return std::polar(1.0, t) * eval_series_complement(spec_of(p, SeriesKind::H), x).value;
}

cplx g_unit(const RosetteParams& p, double t, std::optional<long> j) {
  if (j)
    return std::polar(1.0 / (p.n - 1), (p.n - 1) * (*j * kPi / p.n)) *
           series_at_one(spec_of(p, SeriesKind::G)).value;
  cplx x = one_minus_unit_power_2n(p.n, t);
  return std::polar(1.0 / (p.n - 1), (p.n - 1) * t) *
         eval_series_complement(spec_of(p, SeriesKind::G), x).value;
}

} // namespace

cplx h_at(const RosetteParams& p, double t) {
  validate(p);
  return h_unit(p, t, exact_multiple(p.n, t));
}

cplx g_at(const RosetteParams& p, double t) {
  validate(p);
  return g_unit(p, t, exact_multiple(p.n, t));
}

MapValue f_at_multiple(const RosetteParams& p, long j) {
  validate(p);
  return combine(p, h_unit(p, 0.0, j), g_unit(p, 0.0, j));
}

MapValue f_at(const RosetteParams& p, double t) {
  validate(p);
  const auto j = exact_multiple(p.n, t);
  return combine(p, h_unit(p, t, j), g_unit(p, t, j));
}

cplx dh(const RosetteParams& p, cplx z) {
  validate(p);
  z = checked_point(z);
  return 1.0 / radical(p, z);
}

cplx dg(const RosetteParams& p, cplx z) {
  validate(p);
  z = checked_point(z);
  return ipow(z, p.n - 2) / radical(p, z);
}

cplx dilatation(const RosetteParams& p, cplx z) {
  validate(p);
  z = checked_point(z);
  return ipow(z, p.n - 2);
}

double jacobian(const RosetteParams& p, cplx z) {
  validate(p);
  z = checked_point(z);
  cplx s = 1.0 - ipow(z, 2 * p.n);
  if (std::abs(s) < kSingularTol)
    throw SingularPoint("jacobian undefined at a 2n-th root of unity");
  double r2 = std::norm(z);
  return (1.0 - std::pow(r2, p.n - 2)) / std::abs(s);
}

cplx hypocycloid(int n, cplx z) {
  if (n < 2) throw DomainError("hypocycloid order must be >= 2");
  z = checked_point(z);
  return z + ipow(std::conj(z), n - 1) / double(n - 1);
}

BetaReduction reduce_beta(double beta_tilde) {
  if (!std::isfinite(beta_tilde)) throw DomainError("beta must be finite");
  long l = static_cast<long>(std::ceil(beta_tilde / kPi - 0.5));
  double b = beta_tilde - l * kPi;
  if (b <= -kPi / 2 + kBetaSnap) {
    b += kPi;
    --l;
  } else if (b > kPi / 2 + kBetaSnap) {
    b -= kPi;
    ++l;
  }
  if (std::fabs(b - kPi / 2) <= kBetaSnap) b = kPi / 2;
  return {b, l};
}

cplx reduction_rotation(int n, long l) { return std::polar(1.0, l * (kPi / n + kPi / 2)); }

RotationForm canonical_rotation(double theta, double theta_tilde) {
  // e^{i theta} h + conj(e^{i theta~} g) = e^{i gamma} f_beta
  return {(theta - theta_tilde) / 2, theta + theta_tilde};
}

} // namespace rosette
