#include "rosette/special_fns.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "rosette/errors.hpp"

namespace rosette {

namespace {

using ldouble = long double;

// the regimes aim well below the requested tolerance; they are cheap
constexpr double kTarget = 1e-3;

// Compensated accumulator, real and imaginary parts tracked separately.
struct KahanSum {
  double re = 0, im = 0, cre = 0, cim = 0;
  static void step(double& s, double& c, double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  void add(cplx v) {
    step(re, cre, v.real());
    step(im, cim, v.imag());
  }
  cplx value() const { return {re, im}; }
};

cplx project_to_disk(cplx w) {
  double r = std::abs(w);
  if (!(r <= 1.0 + kDomainEps))
    throw DomainError("series argument outside the closed unit disk: |w| = " +
                      std::to_string(r));
  if (r > 1.0) w /= r;
  return w;
}

void check_spec(const SeriesSpec& spec) {
  if (spec.n < 2) throw DomainError("series order n must be >= 2");
  if (!(spec.policy.abs_tol > 0)) throw DomainError("abs_tol must be positive");
  if (spec.policy.max_terms < 1) throw DomainError("max_terms must be >= 1");
}

// |w| <= 1/2: plain power series
SeriesResult eval_direct(const SeriesSpec& spec, cplx w) {
  const double rho = series_rho(spec);
  const double r = std::abs(w);
  KahanSum acc;
  double A = 1.0;
  cplx p = 1.0;
  double rp = 1.0;
  for (long m = 0; m < spec.policy.max_terms; ++m) {
    if (m > 0) {
      A *= (2.0 * m - 1.0) / (2.0 * m);
      p *= w;
      rp *= r;
    }
    double c = rho * A / (m + rho);
    acc.add(c * p);
    double A1 = A * (2.0 * m + 1.0) / (2.0 * m + 2.0);
    double c1 = rho * A1 / (m + 1 + rho);
    double bound = c1 * rp * r / (1.0 - r);
    if (bound < kTarget * spec.policy.abs_tol)
      return {acc.value(), bound, m + 1, SeriesMethod::Direct};
  }
  throw NoConvergence("direct series did not reach tolerance");
}

// |1 - w| <= 1/2:
// F(w) = F(1) w^{-rho} - 2 rho sqrt(1-w) Q(1-w),  Q = 2F1(1/2+rho, 1; 3/2; x)
SeriesResult eval_connection(const SeriesSpec& spec, cplx w, cplx x) {
  const double rho = series_rho(spec);
  SeriesResult one = series_at_one(spec);
  double ax = std::abs(x);
  KahanSum acc;
  double q = 1.0, rp = 1.0;
  cplx p = 1.0;
  long terms = 0;
  double qtail = 0;
  for (long m = 0;; ++m) {
    if (m >= spec.policy.max_terms)
      throw NoConvergence("connection series did not reach tolerance");
    acc.add(q * p);
    double qn = q * (m + 0.5 + rho) / (m + 1.5);
    qtail = qn * rp * ax / (1.0 - ax);
    terms = m + 1;
    if (2.0 * rho * std::sqrt(ax) * qtail < kTarget * spec.policy.abs_tol) break;
    q = qn;
    p *= x;
    rp *= ax;
  }
  cplx wr = std::pow(w, -rho);
  cplx val = one.value * wr - 2.0 * rho * std::sqrt(x) * acc.value();
  double err = one.error_bound * std::abs(wr) + 2.0 * rho * std::sqrt(ax) * qtail +
               4.0 * std::numeric_limits<double>::epsilon() * std::abs(val);
  return {val, err, terms + one.terms, SeriesMethod::Connection};
}

// everything else: N direct terms plus a K-fold summation-by-parts tail
SeriesResult eval_transformed(const SeriesSpec& spec, cplx w) {
  constexpr int K = 12;
  const ldouble rho = series_rho(spec);
  const double r = std::abs(w);
  const cplx omw = 1.0 - w;
  const double aomw = std::abs(omw);
  const ldouble eps = std::numeric_limits<ldouble>::epsilon();
  for (long N = 64; N + K <= spec.policy.max_terms; N *= 2) {
    KahanSum acc;
    ldouble A = 1.0L;
    cplx p = 1.0;
    for (long m = 0; m < N; ++m) {
      if (m > 0) {
        A *= (2.0L * m - 1.0L) / (2.0L * m);
        p *= w;
      }
      acc.add(static_cast<double>(rho * A / (m + rho)) * p);
    }
    // p = w^{N-1}; A = A_{N-1}
    std::array<ldouble, K + 1> e{};
    for (int i = 0; i <= K; ++i) {
      long m = N + i;
      A *= (2.0L * m - 1.0L) / (2.0L * m);
      e[i] = rho * A / (m + rho);
    }
    ldouble c_N = e[0];
    std::complex<ldouble> tail = 0;
    std::complex<ldouble> wl(w.real(), w.imag());
    std::complex<ldouble> inv(1.0L / std::complex<ldouble>(omw.real(), omw.imag()));
    std::complex<ldouble> wp = std::complex<ldouble>(p.real(), p.imag()) * wl;
    std::complex<ldouble> ip = inv;
    double round_err = 0;
    ldouble last = 0;
    for (int j = 0; j < K; ++j) {
      // e[j] holds the j-th backward difference at index N + j
      tail += e[j] * wp * ip;
      round_err += static_cast<double>(std::ldexp(eps * c_N, j) * std::abs(ip));
      last = e[j];
      for (int i = K; i > j; --i) e[i] = e[i] - e[i - 1];
      wp *= wl;
      ip *= inv;
    }
    // |remainder| <= |Delta^{K-1} c_{N+K-1}| |w|^{N+K} / |1-w|^K (complete monotonicity)
    double bound = static_cast<double>(std::fabs(last)) * std::pow(r, double(N + K)) /
                   std::pow(aomw, double(K));
    double err = bound + round_err;
    if (err < kTarget * spec.policy.abs_tol) {
      cplx val = acc.value() + cplx(static_cast<double>(tail.real()),
                                    static_cast<double>(tail.imag()));
      err += 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(val));
      return {val, err, N + K, SeriesMethod::Transformed};
    }
  }
  throw NoConvergence("transformed series did not reach tolerance");
}

} // namespace

double central_binomial_ratio(long m) {
  double A = 1.0;
  for (long k = 1; k <= m; ++k) A *= (2.0 * k - 1.0) / (2.0 * k);
  return A;
}

double series_rho(const SeriesSpec& spec) {
  const double n = spec.n;
  return spec.kind == SeriesKind::H ? 1.0 / (2.0 * n) : (n - 1.0) / (2.0 * n);
}

double coeff(const SeriesSpec& spec, long m) {
  if (m < 0) throw DomainError("coefficient index must be >= 0");
  const double A = central_binomial_ratio(m);
  const double n = spec.n;
  if (spec.kind == SeriesKind::H) return A / (2.0 * m * n + 1.0);
  return A * (n - 1.0) / (n * (2.0 * m + 1.0) - 1.0);
}

CoeffTriple coeff_triple(const SeriesSpec& spec, long m) {
  return {m, central_binomial_ratio(m), coeff(spec, m)};
}

double tail_bound(const SeriesSpec& spec, long M, double r) {
  if (M < 0) throw DomainError("tail index must be >= 0");
  if (r < 0 || r > 1) throw DomainError("tail radius must lie in [0, 1]");
  const double rho = series_rho(spec);
  // A_m <= 1/sqrt(pi m), so coeff_m <= rho / (sqrt(pi) m^{3/2})
  const double s = M >= 1 ? 2.0 / std::sqrt(double(M)) : 3.0;
  double b = rho / std::sqrt(kPi) * s * std::pow(r, double(M + 1));
  if (r < 1.0) {
    const double c1 = coeff(spec, M + 1);
    b = std::min(b, c1 * std::pow(r, double(M + 1)) / (1.0 - r));
  }
  return b;
}

SeriesResult series_at_one(const SeriesSpec& spec) {
  check_spec(spec);
  constexpr long N = 40;
  const ldouble rho = series_rho(spec);
  ldouble sum = 0, A = 1;
  for (long m = 0; m <= N; ++m) {
    if (m > 0) A *= (2.0L * m - 1.0L) / (2.0L * m);
    sum += rho * A / (m + rho);
  }
  const ldouble A1 = A * (2.0L * N + 1.0L) / (2.0L * N + 2.0L);  // A_{N+1}
  // sum_{m>N} coeff_m = rho sum_k (1-rho)_{k-1} A_{N+1} / ((k-1/2) prod_{j=2}^{k}(N+j)) + R
  ldouble poch = 1, prod = 1, remainder = 0;
  long k = 1;
  for (; k < 400; ++k) {
    if (k >= 2) {
      poch *= (k - 1 - rho) + 0.0L;  // (1-rho)_{k-1}
      prod *= (N + k);
    }
    sum += rho * poch * A1 / ((k - 0.5L) * prod);
    ldouble pochK = poch * (k - rho);  // (1-rho)_k
    remainder = rho * pochK * A1 / ((N + 1 + rho) * (k - 0.5L) * prod);
    if (remainder < 1e-19L) break;
  }
  double err = static_cast<double>(remainder) + 8.0 * std::numeric_limits<double>::epsilon();
  return {cplx(static_cast<double>(sum), 0.0), err, N + 1 + k, SeriesMethod::Connection};
}

SeriesResult eval_series_detailed(const SeriesSpec& spec, cplx z) {
  check_spec(spec);
  cplx w = project_to_disk(z);
  if (std::abs(w) <= 0.5) return eval_direct(spec, w);
  if (std::abs(1.0 - w) <= 0.5) return eval_connection(spec, w, 1.0 - w);
  return eval_transformed(spec, w);
}

SeriesResult eval_series_complement(const SeriesSpec& spec, cplx x) {
  check_spec(spec);
  if (std::abs(x) <= 0.5) {
    cplx w = 1.0 - x;
    double r = std::abs(w);
    if (!(r <= 1.0 + kDomainEps))
      throw DomainError("series argument outside the closed unit disk: |w| = " +
                        std::to_string(r));
    return eval_connection(spec, w, x);
  }
  return eval_series_detailed(spec, 1.0 - x);
}

cplx eval_series(const SeriesSpec& spec, cplx z) { return eval_series_detailed(spec, z).value; }

EndpointValues endpoint_values(int n) {
  if (n < 2) throw DomainError("endpoint_values requires n >= 2");
  const double a = 1.0 / (2.0 * n);
  const double K = std::sqrt(kPi) * gamma_real(1.0 + a) / gamma_real(0.5 + a);
  return {K, (n - 1) * std::tan(kPi * a) * K};
}

// Lanczos approximation, g = 607/128 with Godfrey's 15 coefficients.
double gamma_real(double x) {
  if (!(x > 0)) throw DomainError("gamma_real requires x > 0");
  if (x < 0.5) return gamma_real(x + 1.0) / x;
  static constexpr double g = 607.0 / 128.0;
  static constexpr std::array<double, 15> c = {
      0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
      14.136097974741747174,      -0.49191381609762019978,   3.3994649984811888699e-5,
      4.6523628927048575665e-5,   -9.8374475304879564677e-5, 1.5808870322491248884e-4,
      -2.1026444172410488319e-4,  2.1743961811521264320e-4,  -1.6431810653676389022e-4,
      8.4418223983852743293e-5,   -2.6190838401581408670e-5, 3.6899182659531622704e-6};
  const double z = x - 1.0;
  double s = c[0];
  for (std::size_t k = 1; k < c.size(); ++k) s += c[k] / (z + double(k));
  const double t = z + g + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t / std::exp(1.0), z + 0.5) * std::exp(-g) * s;
}

std::string to_string(SeriesKind k) { return k == SeriesKind::H ? "H" : "G"; }

std::string to_string(SeriesMethod m) {
  switch (m) {
  case SeriesMethod::Direct: return "direct";
  case SeriesMethod::Connection: return "connection";
  case SeriesMethod::Transformed: return "transformed";
  }
  return "?";
}

} // namespace rosette
