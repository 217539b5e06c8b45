#pragma once

#include <complex>
#include <string>

namespace rosette {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
// slack on |z| <= 1 for boundary points that land a few ulp outside
inline constexpr double kDomainEps = 1e-9;

enum class SeriesKind { H, G };

struct TruncationPolicy {
  double abs_tol = 1e-12;
  long max_terms = 2'000'000;
};

struct SeriesSpec {
  SeriesKind kind = SeriesKind::H;
  int n = 3;
  TruncationPolicy policy{};
};

struct CoeffTriple {
  long m = 0;
  double A_m = 1.0;
  double value = 1.0;
};

enum class SeriesMethod { Direct, Connection, Transformed };

struct SeriesResult {
  cplx value;
  double error_bound = 0.0;
  long terms = 0;
  SeriesMethod method = SeriesMethod::Direct;
};

struct EndpointValues {
  double K_n;
  double G1;
};

// A_m = (2m choose m)/4^m by the multiplicative recurrence
double central_binomial_ratio(long m);

// c_m for H, d_m for G
double coeff(const SeriesSpec& spec, long m);
CoeffTriple coeff_triple(const SeriesSpec& spec, long m);

// rho such that coeff_m = rho * A_m / (m + rho)
double series_rho(const SeriesSpec& spec);

cplx eval_series(const SeriesSpec& spec, cplx z);
SeriesResult eval_series_detailed(const SeriesSpec& spec, cplx z);
// value at z = 1 - x; keeps relative accuracy in x when z is close to 1
SeriesResult eval_series_complement(const SeriesSpec& spec, cplx x);

// sum of coeff_m for m >= 0, i.e. the value at z = 1, with a rigorous bound
SeriesResult series_at_one(const SeriesSpec& spec);

// Upper bound on sum_{m>M} coeff_m r^m for 0 <= r <= 1.
double tail_bound(const SeriesSpec& spec, long M, double r);

EndpointValues endpoint_values(int n);

double gamma_real(double x);

std::string to_string(SeriesKind k);
std::string to_string(SeriesMethod m);

} // namespace rosette
