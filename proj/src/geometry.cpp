#include "rosette/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace rosette {

using cplx = std::complex<double>;

int orientation(cplx a, cplx b, cplx c) {
  long double bx = (long double)b.real() - a.real(), by = (long double)b.imag() - a.imag();
  long double cx = (long double)c.real() - a.real(), cy = (long double)c.imag() - a.imag();
  long double v = bx * cy - by * cx;
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

static bool on_segment(cplx a, cplx b, cplx p) {
  return std::min(a.real(), b.real()) <= p.real() && p.real() <= std::max(a.real(), b.real()) &&
         std::min(a.imag(), b.imag()) <= p.imag() && p.imag() <= std::max(a.imag(), b.imag());
}

bool segments_intersect(cplx p1, cplx p2, cplx q1, cplx q2) {
  const int o1 = orientation(p1, p2, q1), o2 = orientation(p1, p2, q2);
  const int o3 = orientation(q1, q2, p1), o4 = orientation(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

double point_segment_distance(cplx p, cplx a, cplx b) {
  const cplx d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0) return std::abs(p - a);
  double s = ((p - a) * std::conj(d)).real() / len2;
  s = std::clamp(s, 0.0, 1.0);
  return std::abs(p - (a + s * d));
}

double distance_to_polyline(const Polyline& poly, cplx p) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t N = poly.size();
  for (std::size_t i = 0; i < N; ++i)
    best = std::min(best, point_segment_distance(p, poly[i], poly[(i + 1) % N]));
  return best;
}

Polyline dedup_closed(const Polyline& pts, double tol) {
  Polyline out;
  for (const auto& p : pts)
    if (out.empty() || std::abs(p - out.back()) > tol) out.push_back(p);
  while (out.size() > 1 && std::abs(out.back() - out.front()) <= tol) out.pop_back();
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> find_self_intersection(const Polyline& poly) {
  const std::size_t N = poly.size();
  if (N < 4) return std::nullopt;
  struct Edge {
    double xmin, xmax, ymin, ymax;
    std::size_t i;
  };
  std::vector<Edge> edges(N);
  for (std::size_t i = 0; i < N; ++i) {
    cplx a = poly[i], b = poly[(i + 1) % N];
    edges[i] = {std::min(a.real(), b.real()), std::max(a.real(), b.real()),
                std::min(a.imag(), b.imag()), std::max(a.imag(), b.imag()), i};
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) { return x.xmin < y.xmin; });
  for (std::size_t u = 0; u < N; ++u) {
    const Edge& e = edges[u];
    for (std::size_t v = u + 1; v < N && edges[v].xmin <= e.xmax; ++v) {
      const Edge& f = edges[v];
      if (f.ymin > e.ymax || f.ymax < e.ymin) continue;
      const std::size_t i = e.i, j = f.i;
      const std::size_t d = i > j ? i - j : j - i;
      if (d == 1 || d == N - 1) continue;
      if (segments_intersect(poly[i], poly[(i + 1) % N], poly[j], poly[(j + 1) % N]))
        return std::make_pair(std::min(i, j), std::max(i, j));
    }
  }
  return std::nullopt;
}

int winding_crossing(const Polyline& poly, cplx p) {
  int wn = 0;
  const std::size_t N = poly.size();
  for (std::size_t i = 0; i < N; ++i) {
    cplx a = poly[i], b = poly[(i + 1) % N];
    if (a.imag() <= p.imag()) {
      if (b.imag() > p.imag() && orientation(a, b, p) > 0) ++wn;
    } else {
      if (b.imag() <= p.imag() && orientation(a, b, p) < 0) --wn;
    }
  }
  return wn;
}

double signed_area(const Polyline& poly) {
  long double s = 0;
  const std::size_t N = poly.size();
  for (std::size_t i = 0; i < N; ++i) {
    cplx a = poly[i], b = poly[(i + 1) % N];
    s += (long double)a.real() * b.imag() - (long double)b.real() * a.imag();
  }
  return static_cast<double>(s / 2);
}

BBox bounding_box(const Polyline& poly) {
  BBox b{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
         std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (auto p : poly) {
    b.xmin = std::min(b.xmin, p.real());
    b.xmax = std::max(b.xmax, p.real());
    b.ymin = std::min(b.ymin, p.imag());
    b.ymax = std::max(b.ymax, p.imag());
  }
  return b;
}

} // namespace rosette
