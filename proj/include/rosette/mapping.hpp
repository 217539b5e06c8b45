#pragma once

#include <complex>

#include "rosette/special_fns.hpp"

namespace rosette {

inline constexpr double kSingularTol = 1e-12;
// tolerance used to snap beta onto the canonical interval endpoints
inline constexpr double kBetaSnap = 1e-12;

struct BetaReduction {
  double beta;
  long l;
};

struct RosetteParams {
  int n = 3;
  double beta = 0.0;
  TruncationPolicy policy{};

  BetaReduction canonical() const;
  bool is_canonical() const;
  bool is_half_pi() const;
};

struct MapValue {
  cplx h;     // e^{i beta/2} h_n(z)
  cplx gbar;  // e^{-i beta/2} conj(g_n(z))
  cplx f;
};

struct RotationForm {
  double gamma;
  double beta;
};

// throws DomainError unless n >= 3
void validate(const RosetteParams& p);

cplx h(const RosetteParams& p, cplx z);
cplx g(const RosetteParams& p, cplx z);
MapValue f(const RosetteParams& p, cplx z);

// boundary variants: z = e^{it}, with z^{2n} formed as e^{i 2n t}
cplx h_at(const RosetteParams& p, double t);
cplx g_at(const RosetteParams& p, double t);
MapValue f_at(const RosetteParams& p, double t);

// t = j pi / n exactly
MapValue f_at_multiple(const RosetteParams& p, long j);

// e^{i 2n t} and 1 - e^{i 2n t}, with t reduced modulo pi/n first
cplx unit_power_2n(int n, double t);
cplx one_minus_unit_power_2n(int n, double t);

cplx dh(const RosetteParams& p, cplx z);
cplx dg(const RosetteParams& p, cplx z);
cplx dilatation(const RosetteParams& p, cplx z);
double jacobian(const RosetteParams& p, cplx z);

cplx hypocycloid(int n, cplx z);

BetaReduction reduce_beta(double beta_tilde);
// f_{beta + l pi}(z) = reduction_rotation(n, l) * f_beta(e^{-i l pi/n} z)
cplx reduction_rotation(int n, long l);
RotationForm canonical_rotation(double theta, double theta_tilde);

} // namespace rosette
