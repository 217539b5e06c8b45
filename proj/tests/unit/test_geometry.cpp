#include <doctest.h>

#include <cmath>

#include "rosette/errors.hpp"
#include "rosette/geometry.hpp"
#include "rosette/quadrature.hpp"
#include "rosette/special_fns.hpp"

using namespace rosette;

namespace {

Polyline circle(int m, double r = 1.0, cplx c = 0.0) {
  Polyline p;
  for (int i = 0; i < m; ++i) p.push_back(c + std::polar(r, 2 * kPi * i / m));
  return p;
}

} // namespace

TEST_CASE("orientation and segment intersection") {
  CHECK(orientation(0.0, 1.0, cplx(0, 1)) == 1);
  CHECK(orientation(0.0, 1.0, cplx(0, -1)) == -1);
  CHECK(orientation(0.0, 1.0, 2.0) == 0);
  CHECK(segments_intersect(cplx(0, 0), cplx(1, 1), cplx(0, 1), cplx(1, 0)));
  CHECK_FALSE(segments_intersect(cplx(0, 0), cplx(1, 0), cplx(0, 1), cplx(1, 1)));
  CHECK(segments_intersect(cplx(0, 0), cplx(2, 0), cplx(1, 0), cplx(3, 0)));
  CHECK_FALSE(segments_intersect(cplx(0, 0), cplx(1, 0), cplx(2, 0), cplx(3, 0)));
  CHECK(segments_intersect(cplx(0, 0), cplx(1, 0), cplx(1, 0), cplx(1, 5)));
}

TEST_CASE("distances") {
  CHECK(point_segment_distance(cplx(0.5, 2), 0.0, 1.0) == doctest::Approx(2.0));
  CHECK(point_segment_distance(cplx(3, 4), 0.0, 0.0) == doctest::Approx(5.0));
  CHECK(point_segment_distance(cplx(-3, 4), 0.0, 1.0) == doctest::Approx(5.0));
  const Polyline sq = {0.0, 1.0, cplx(1, 1), cplx(0, 1)};
  CHECK(distance_to_polyline(sq, cplx(0.5, 0.5)) == doctest::Approx(0.5));
  CHECK(distance_to_polyline(sq, cplx(-1, 0.5)) == doctest::Approx(1.0));
}

TEST_CASE("closed polygon utilities") {
  Polyline c = circle(100);
  c.push_back(c.front());
  c.insert(c.begin() + 3, c[3]);
  const Polyline d = dedup_closed(c, 1e-12);
  CHECK(d.size() == 100);
  CHECK(signed_area(d) == doctest::Approx(kPi).epsilon(1e-3));
  Polyline cw(d.rbegin(), d.rend());
  CHECK(signed_area(cw) < 0);
  const BBox b = bounding_box(d);
  CHECK(b.xmax == doctest::Approx(1.0));
  CHECK(b.contains(cplx(0.9, 0.9)));
  CHECK_FALSE(b.contains(cplx(1.1, 0)));
  CHECK(b.contains(cplx(1.1, 0), 0.2));
}

TEST_CASE("self intersection detection") {
  CHECK_FALSE(find_self_intersection(circle(500)).has_value());
  const Polyline bow = {0.0, cplx(1, 1), cplx(1, 0), cplx(0, 1)};
  CHECK(find_self_intersection(bow).has_value());
  // a figure eight traced as one closed curve
  Polyline eight;
  for (int i = 0; i < 400; ++i) {
    const double t = 2 * kPi * i / 400;
    eight.push_back(cplx(std::sin(t), std::sin(t) * std::cos(t)));
  }
  CHECK(find_self_intersection(eight).has_value());
}

TEST_CASE("crossing winding number") {
  const Polyline c = circle(64);
  CHECK(winding_crossing(c, 0.0) == 1);
  CHECK(winding_crossing(c, 2.0) == 0);
  Polyline twice;
  for (int i = 0; i < 128; ++i) twice.push_back(std::polar(1.0, 4 * kPi * i / 128));
  CHECK(winding_crossing(twice, cplx(0.1, 0.05)) == 2);
  const Polyline cw(c.rbegin(), c.rend());
  CHECK(winding_crossing(cw, 0.0) == -1);
}

TEST_CASE("Gauss-Kronrod quadrature") {
  auto r = integrate_gk15([](double x) { return cplx(std::exp(x), 0); }, 0, 1);
  CHECK(std::abs(r.value - (std::exp(1.0) - 1)) < 1e-14);
  r = integrate_gk15([](double x) { return cplx(std::cos(x), std::sin(x)); }, 0, kPi);
  CHECK(std::abs(r.value - cplx(0, 2)) < 1e-14);
  // integrable endpoint singularity
  r = integrate_gk15([](double x) { return cplx(1 / std::sqrt(x), 0); }, 0, 1);
  CHECK(std::abs(r.value - 2.0) < 1e-9);
  r = integrate_gk15([](double x) { return cplx(std::log(x), 0); }, 0, 1);
  CHECK(std::abs(r.value + 1.0) < 1e-11);
  QuadratureOptions tiny;
  tiny.max_subintervals = 2;
  tiny.abs_tol = tiny.rel_tol = 1e-16;
  CHECK_THROWS_AS(integrate_gk15([](double x) { return cplx(1 / std::sqrt(x), 0); }, 0, 1, tiny),
                  QuadratureFailure);
}
