#include <doctest.h>

#include <cmath>

#include "rosette/errors.hpp"
#include "rosette/verification.hpp"

using namespace rosette;

namespace {

RosetteParams P(int n, double beta) { return {n, beta, {}}; }

Polyline closed_circle(int m, double r = 1.0) {
  Polyline c;
  for (int i = 0; i < m; ++i) c.push_back(std::polar(r, 2 * kPi * i / m));
  c.push_back(c.front());
  return c;
}

bool all_pass(const std::vector<Check>& cs) {
  for (const auto& c : cs) {
    if (!c.passed) {
      MESSAGE(c.name << " failed: residual " << c.max_residual << " " << c.detail);
      return false;
    }
  }
  return true;
}

} // namespace

TEST_CASE("winding number of sampled circles") {
  const Polyline c = closed_circle(256);
  CHECK(winding_number(c, 0.0).winding == 1);
  CHECK(winding_number(c, 2.0).winding == 0);
  CHECK(winding_number(c, 0.0).min_distance_to_curve == doctest::Approx(1.0).epsilon(1e-3));
  // a coarse square around a nearby point still needs refinement-free integer output
  const Polyline sq = {cplx(-1, -1), cplx(1, -1), cplx(1, 1), cplx(-1, 1), cplx(-1, -1)};
  CHECK(winding_number(sq, cplx(0.99, 0.0)).winding == 1);
  CHECK(winding_number(sq, cplx(1.01, 0.0)).winding == 0);
  CHECK_THROWS_AS(winding_number(c, 1.0, 1e-6), TooCloseToCurve);
  Polyline open = c;
  open.pop_back();
  open.pop_back();
  CHECK_THROWS_AS(winding_number(open, 0.0), OpenCurve);
}

TEST_CASE("winding number about an interior image point") {
  const RosetteParams p = P(6, kPi / 4);
  const cplx w0 = f(p, std::polar(0.5, kPi / 7)).f;
  CurveFn alpha = [&](double t) { return boundary_point(p, t); };
  CHECK(winding_number(alpha, 0, 2 * kPi, w0, 1e-6).winding == 1);
  Polyline poly = boundary_polyline(p, 4096);
  poly.push_back(poly.front());
  CHECK(winding_number(poly, w0).winding == 1);
  CHECK(winding_number(poly, 3.0 * w0 / std::abs(w0)).winding == 0);
}

TEST_CASE("winding number does not change under refinement") {
  const RosetteParams p = P(5, 0.9);
  for (int m : {512, 1024, 2048, 4096}) {
    Polyline poly;
    for (int i = 0; i < m; ++i) poly.push_back(boundary_point(p, 2 * kPi * i / m));
    poly.push_back(poly.front());
    for (double r : {0.2, 0.6, 0.95}) {
      const cplx w = f(p, std::polar(r, 0.3)).f;
      CHECK(winding_number(poly, w).winding == 1);
    }
    CHECK(winding_number(poly, cplx(2.0, 0.1)).winding == 0);
  }
}

TEST_CASE("univalence scan") {
  CHECK(all_pass(univalence_scan(P(6, 0.0), 50)));
  CHECK(all_pass(univalence_scan(P(5, kPi / 2), 50)));
  CHECK(all_pass(univalence_scan(P(3, -1.3), 20)));
  CHECK_THROWS_AS(univalence_scan(P(5, 2.0), 20), NonCanonicalBeta);
}

TEST_CASE("integral oracle") {
  const IntegralOracle zero = integral_oracle(P(5, 0.0), 0.0, IntegralIdentity::H);
  CHECK(zero.lhs == cplx(0.0));
  CHECK(zero.residual == 0.0);
  const IntegralOracle one = integral_oracle(P(6, 0.0), 1.0, IntegralIdentity::H);
  CHECK(std::abs(one.lhs - endpoint_values(6).K_n) < 1e-9);
  const IntegralOracle g = integral_oracle(P(5, 0.0), std::polar(0.7, kPi / 5), IntegralIdentity::G);
  CHECK(g.residual < 1e-10);
  // on the circle between two roots of unity
  const IntegralOracle edge = integral_oracle(P(4, 0.0), std::polar(1.0, 0.3), IntegralIdentity::G);
  CHECK(edge.residual < 1e-9);
  CHECK(all_pass(integral_oracle_sweep(P(3, 0.0), 20, 99)));
}

TEST_CASE("symmetry suite") {
  const auto a = symmetry_suite(P(6, 0.3), 1000, 42);
  CHECK(all_pass(a));
  bool seen = false;
  for (const auto& c : a)
    if (c.name == "rotation_2pi_over_n") {
      seen = true;
      CHECK(c.max_residual < 1e-10);
      CHECK(c.samples_used > 1000);
    }
  CHECK(seen);
  CHECK(all_pass(symmetry_suite(P(5, kPi / 2), 200, 1)));
  // non-canonical beta goes through the reduction identity
  CHECK(all_pass(symmetry_suite(P(4, 1.9), 200, 2)));
  CHECK(all_pass(symmetry_suite(P(3, 0.0), 200, 3)));
}

TEST_CASE("reports are deterministic for a fixed seed") {
  const auto a = symmetry_suite(P(5, 0.7), 100, 17);
  const auto b = symmetry_suite(P(5, 0.7), 100, 17);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].max_residual == b[i].max_residual);
    CHECK(a[i].samples_used == b[i].samples_used);
  }
  VerificationReport r;
  r.append(a);
  CHECK(r.all_passed());
  r.append({{"forced", false, 1.0, 1, 0.0, ""}});
  CHECK_FALSE(r.all_passed());
}

TEST_CASE("fundamental set boundary is closed and bounded") {
  const Polyline b = fundamental_set_boundary(P(5, 0.4), 256);
  CHECK(std::abs(b.front() - b.back()) < 1e-12);
  CHECK(std::abs(b.front()) < 1e-15);
  const double B = endpoint_values(5).K_n * (1 + std::tan(kPi / 10));
  for (cplx w : b) CHECK(std::abs(w) <= B * (1 + 1e-12));
  CHECK_THROWS_AS(fundamental_set_boundary(P(5, 2.0)), NonCanonicalBeta);
}

TEST_CASE("fundamental decomposition tiles the image") {
  for (const auto& p : {P(5, kPi / 2), P(4, 1.9)}) {
    const DecompositionResult r = fundamental_decomposition(p, 60);
    CHECK(r.sets.size() == std::size_t(p.n));
    CHECK(r.probes == 3600);
    CHECK(r.probes_inside_one + r.probes_on_shared_boundary == r.probes);
    CHECK(all_pass(r.checks));
  }
}

TEST_CASE("unit_double maps 64-bit words into [0, 1)") {
  CHECK(unit_double(0) == 0.0);
  CHECK(unit_double(~0ULL) < 1.0);
  CHECK(unit_double(1ULL << 63) == 0.5);
}
