#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rosette/mapping.hpp"

namespace rosette {

struct BoundaryDerivative {
  cplx d_value;                 // chain rule through e^{it}
  std::optional<double> d_arg;  // piecewise-linear closed form; empty where d_value = 0
  double d_mag;                 // closed-form magnitude
};

struct CurveSample {
  double t;
  cplx value;
  std::optional<cplx> d_value;
  std::optional<double> d_arg;
  std::optional<double> d_mag;
};

enum class FeatureKind { Cusp, RemovableNode, Node };

struct BoundaryFeature {
  FeatureKind kind;
  double t;
  cplx location;
  double magnitude;
  double argument;
  std::optional<double> axis_arg;        // cusps
  std::optional<double> tangent_arg;     // removable nodes
  std::optional<double> interior_angle;  // nodes at beta = pi/2
  // numerical confirmation: one-sided tangent limits and their difference
  double left_tangent = 0;
  double right_tangent = 0;
  double turn = 0;
  bool confirmed = false;
};

struct FeatureReport {
  RosetteParams params;
  std::vector<BoundaryFeature> features;
  std::vector<double> separations;
  double total_curvature_per_petal = 0;
};

enum class SeparationSign { NodeAfterCusp, CuspAfterNode };

struct TotalCurvature {
  double analytic;        // (n/2 - 1)(t1 - t0)
  double numerical;       // |accumulated turning| of sampled tangents
  double signed_turning;  // left turns positive; negative on the rosette arcs
};

struct Nonmonotonicity {
  bool found;
  double witness_t;
};

using CurveFn = std::function<cplx(double)>;

cplx boundary_point(const RosetteParams& p, double t);
BoundaryDerivative boundary_derivative(const RosetteParams& p, double t);
// any real beta: reduces beta and rotates the canonical closed forms
BoundaryDerivative boundary_derivative_any(const RosetteParams& p, double t);
// d/dt of the two summands of alpha at t
std::pair<cplx, cplx> summand_derivatives(const RosetteParams& p, double t);

// distance from t to the nearest multiple of pi/n
double distance_to_singular(int n, double t);

// cosine-clustered samples on each of the 2n basic intervals, each feature parameter once
std::vector<double> clustered_parameters(int n, int per_interval);
std::vector<CurveSample> sample_boundary(const RosetteParams& p, int per_interval = 512);

FeatureReport extract_features(const RosetteParams& p);
double separation_angle(const RosetteParams& p, SeparationSign sign);
TotalCurvature total_curvature(const RosetteParams& p, double t0, double t1);
cplx halfspeed_reparam(const RosetteParams& p, double t);
Nonmonotonicity detect_arg_nonmonotonicity(const RosetteParams& p);

// Chord directions leaving/arriving at curve(t0), extrapolated to zero offset.
// Returns (direction of travel arriving from the left, leaving to the right).
std::pair<double, double> one_sided_tangents(const CurveFn& curve, double t0,
                                             std::optional<cplx> at = std::nullopt);
// measured interior angle of the half-speed curve at its k-th node
double halfspeed_interior_angle(const RosetteParams& p, int k);

// Generic cusp detector on numerical tangents: consecutive tangent directions
// with negative dot product bracket a reversal, which is then bisected.
std::vector<BoundaryFeature> detect_cusps_numeric(const CurveFn& curve, const CurveFn& tangent,
                                                  double t0, double t1, int samples);
CurveFn central_difference_tangent(const CurveFn& curve, double h = 1e-6);

// wrap-aware angle difference a - b in (-pi, pi]
double angle_diff(double a, double b);

std::string to_string(FeatureKind k);

} // namespace rosette
