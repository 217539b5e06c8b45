#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rosette/boundary.hpp"
#include "rosette/geometry.hpp"
#include "rosette/quadrature.hpp"

namespace rosette {

struct WindingResult {
  cplx point;
  int winding;
  double min_distance_to_curve;
};

struct Check {
  std::string name;
  bool passed;
  double max_residual;
  long samples_used;
  double tolerance = 0;
  std::string detail;
};

struct VerificationReport {
  RosetteParams params;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  bool all_passed() const;
  void append(const std::vector<Check>& more);
};

struct FundamentalSet {
  RosetteParams params;  // canonical parameters of the set
  double sector_start;   // [sector_start, sector_end) in arg z
  double sector_end;
  cplx rotation;         // applied to the canonical set
  Polyline boundary_polyline;
};

struct DecompositionResult {
  RosetteParams params_tilde;
  BetaReduction reduction;
  std::vector<FundamentalSet> sets;
  std::vector<Check> checks;
  long probes = 0;
  long probes_inside_one = 0;
  long probes_on_shared_boundary = 0;
};

enum class IntegralIdentity { H, G };

struct IntegralOracle {
  cplx lhs;
  cplx rhs;
  double residual;
};

// Winding number of a closed polyline (first vertex repeated at the end within
// closure_tol) about w0; segments whose subtended angle reaches pi/2 are refined.
WindingResult winding_number(const Polyline& curve, cplx w0, double exclusion_radius = 0.0,
                             double closure_tol = 1e-9);
// Parametric version: samples curve on [t0, t1] and refines adaptively.
WindingResult winding_number(const CurveFn& curve, double t0, double t1, cplx w0,
                             double exclusion_radius, int initial_samples = 256);

// f_beta(e^{it}) (or the half-speed curve at beta = pi/2) as a deduplicated closed polygon
Polyline boundary_polyline(const RosetteParams& p, int min_segments = 4096);

std::vector<Check> univalence_scan(const RosetteParams& p, int grid_resolution);
IntegralOracle integral_oracle(const RosetteParams& p, cplx z, IntegralIdentity which,
                               const QuadratureOptions& opt = {});
std::vector<Check> integral_oracle_sweep(const RosetteParams& p, int points, std::uint64_t seed);
std::vector<Check> symmetry_suite(const RosetteParams& p, int sample_count, std::uint64_t seed);
// closed boundary polygon of the image of the sector 0 <= arg z <= 2pi/n (canonical beta)
Polyline fundamental_set_boundary(const RosetteParams& canonical, int per_piece = 1024);
DecompositionResult fundamental_decomposition(const RosetteParams& params_tilde,
                                              int grid = 100);

// uniform double in [0, 1) from the top 53 bits
double unit_double(std::uint64_t bits);

} // namespace rosette
