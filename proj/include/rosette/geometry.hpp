#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

namespace rosette {

using Polyline = std::vector<std::complex<double>>;

// sign of the cross product (b - a) x (c - a), evaluated in long double
int orientation(std::complex<double> a, std::complex<double> b, std::complex<double> c);

// closed segments [p1,p2] and [q1,q2] share at least one point
bool segments_intersect(std::complex<double> p1, std::complex<double> p2,
                        std::complex<double> q1, std::complex<double> q2);

double point_segment_distance(std::complex<double> p, std::complex<double> a,
                              std::complex<double> b);

// distance from p to the closed polyline (last vertex joined to first)
double distance_to_polyline(const Polyline& poly, std::complex<double> p);

// drop consecutive vertices closer than tol; also drops a final vertex that repeats the first
Polyline dedup_closed(const Polyline& pts, double tol);

// First pair of non-adjacent intersecting edges of the closed polygon, if any.
// Edges are (v_i, v_{i+1 mod N}).
std::optional<std::pair<std::size_t, std::size_t>> find_self_intersection(const Polyline& poly);

// crossing-based winding number of the closed polygon about p (Sunday's rule)
int winding_crossing(const Polyline& poly, std::complex<double> p);

double signed_area(const Polyline& poly);

struct BBox {
  double xmin, xmax, ymin, ymax;
  bool contains(std::complex<double> p, double pad = 0) const {
    return p.real() >= xmin - pad && p.real() <= xmax + pad && p.imag() >= ymin - pad &&
           p.imag() <= ymax + pad;
  }
};
BBox bounding_box(const Polyline& poly);

} // namespace rosette
