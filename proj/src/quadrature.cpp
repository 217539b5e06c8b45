#include "rosette/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "rosette/errors.hpp"

namespace rosette {

namespace {

using cplx = std::complex<double>;

// QUADPACK qk15 abscissae and weights
constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
  double a, b;
  cplx value;
  double err;
  bool operator<(const Piece& o) const { return err < o.err; }
};

Piece rule(const std::function<cplx(double)>& fn, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const cplx fc = fn(c);
  cplx kron = fc * wgk[7];
  cplx gauss = fc * wg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * xgk[j];
    const cplx s = fn(c - dx) + fn(c + dx);
    kron += wgk[j] * s;
    if (j % 2 == 1) gauss += wg[j / 2] * s;
  }
  kron *= h;
  gauss *= h;
  return {a, b, kron, std::abs(kron - gauss)};
}

} // namespace

QuadratureResult integrate_gk15(const std::function<cplx(double)>& fn, double a, double b,
                                const QuadratureOptions& opt) {
  if (a == b) return {0.0, 0.0, 0, 0};
  std::priority_queue<Piece> heap;
  heap.push(rule(fn, a, b));
  cplx total = heap.top().value;
  double err = heap.top().err;
  int evals = 15;
  while (err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
    if (static_cast<int>(heap.size()) >= opt.max_subintervals)
      throw QuadratureFailure("adaptive quadrature exhausted its subinterval budget");
    Piece worst = heap.top();
    heap.pop();
    const double m = 0.5 * (worst.a + worst.b);
    if (!(m > worst.a && m < worst.b))
      throw QuadratureFailure("adaptive quadrature cannot subdivide further");
    Piece l = rule(fn, worst.a, m), r = rule(fn, m, worst.b);
    evals += 30;
    total += l.value + r.value - worst.value;
    err += l.err + r.err - worst.err;
    heap.push(l);
    heap.push(r);
  }
  // re-sum to shed the drift of the running updates
  cplx sum = 0;
  double esum = 0;
  const int pieces = static_cast<int>(heap.size());
  while (!heap.empty()) {
    sum += heap.top().value;
    esum += heap.top().err;
    heap.pop();
  }
  return {sum, esum, pieces, evals};
}

} // namespace rosette
