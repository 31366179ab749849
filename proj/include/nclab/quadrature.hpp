#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

#include "nclab/errors.hpp"

namespace nclab {

// Gauss-Kronrod 15(7) nodes and weights on [-1,1] (QUADPACK dqk15).
namespace gk {
inline constexpr double xk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
inline constexpr double wk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};
}  // namespace gk

inline double quad_norm(double v) { return std::abs(v); }
inline double quad_norm(const std::complex<double>& v) { return std::abs(v); }
inline double quad_norm(const Eigen::MatrixXcd& v) {
  return v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
}

template <typename T>
struct QuadResult {
  T value{};
  double error = 0.0;  // achieved error estimate
  long evals = 0;
  bool converged = false;
};

namespace detail {

template <typename F>
auto gk15_panel(F&& f, double a, double b, double& err)
    -> decltype(f(0.0)) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  using T = decltype(f(0.0));
  T fc = f(c);
  T kron = gk::wk[7] * fc;
  T gauss = gk::wg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    T lo = f(c - h * gk::xk[i]);
    T hi = f(c + h * gk::xk[i]);
    T pair = lo + hi;
    kron = kron + gk::wk[i] * pair;
    if (i % 2 == 1) gauss = gauss + gk::wg[i / 2] * pair;
  }
  kron = h * kron;
  gauss = h * gauss;
  err = quad_norm(T(kron - gauss));
  // QUADPACK-style sharpening of the raw difference
  err = std::min(err, std::pow(200.0 * err, 1.5) + 1e-300);
  return kron;
}

}  // namespace detail

// Adaptive Gauss-Kronrod on [a,b]; absolute tolerance, hard cap on
// function evaluations (default 2^16). Works for double, complex and
// Eigen matrix integrands.
template <typename F>
auto adaptive_gk(F&& f, double a, double b, double abs_tol,
                 long max_evals = 1 << 16)
    -> QuadResult<decltype(f(0.0))> {
  using T = decltype(f(0.0));
  struct Seg {
    double a, b, err;
    T val;
    bool operator<(const Seg& o) const { return err < o.err; }
  };
  QuadResult<T> out;
  if (!(b > a)) {
    out.converged = true;
    return out;
  }
  std::priority_queue<Seg> heap;
  double err0 = 0.0;
  T val0 = detail::gk15_panel(f, a, b, err0);
  out.evals = 15;
  heap.push({a, b, err0, val0});
  double total_err = err0;
  T total_val = val0;
  while (total_err > abs_tol && out.evals + 30 <= max_evals) {
    Seg worst = heap.top();
    if (worst.err <= 0.0) break;
    heap.pop();
    double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {  // interval exhausted
      heap.push(worst);
      break;
    }
    double el = 0.0, er = 0.0;
    T vl = detail::gk15_panel(f, worst.a, mid, el);
    T vr = detail::gk15_panel(f, mid, worst.b, er);
    out.evals += 30;
    total_err += el + er - worst.err;
    total_val = total_val + (vl + vr - worst.val);
    heap.push({worst.a, mid, el, vl});
    heap.push({mid, worst.b, er, vr});
  }
  out.value = total_val;
  out.error = total_err;
  out.converged = total_err <= abs_tol;
  return out;
}

// Adaptive rule with the panel queue pre-seeded at given breakpoints
// (period boundaries for oscillatory integrands, step discontinuities...).
template <typename F>
auto adaptive_gk_segmented(F&& f, const std::vector<double>& knots,
                           double abs_tol, long max_evals = 1 << 18)
    -> QuadResult<decltype(f(0.0))> {
  using T = decltype(f(0.0));
  struct Seg {
    double a, b, err;
    T val;
    bool operator<(const Seg& o) const { return err < o.err; }
  };
  QuadResult<T> out;
  if (knots.size() < 2) {
    out.converged = true;
    return out;
  }
  std::priority_queue<Seg> heap;
  double total_err = 0.0;
  T total_val{};
  bool first = true;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    if (!(knots[i + 1] > knots[i])) continue;
    double e = 0.0;
    T v = detail::gk15_panel(f, knots[i], knots[i + 1], e);
    out.evals += 15;
    if (first) {
      total_val = v;
      first = false;
    } else {
      total_val = total_val + v;
    }
    total_err += e;
    heap.push({knots[i], knots[i + 1], e, v});
  }
  while (total_err > abs_tol && out.evals + 30 <= max_evals &&
         !heap.empty()) {
    Seg worst = heap.top();
    if (worst.err <= 0.0) break;
    heap.pop();
    double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      heap.push(worst);
      break;
    }
    double el = 0.0, er = 0.0;
    T vl = detail::gk15_panel(f, worst.a, mid, el);
    T vr = detail::gk15_panel(f, mid, worst.b, er);
    out.evals += 30;
    total_err += el + er - worst.err;
    total_val = total_val + (vl + vr - worst.val);
    heap.push({worst.a, mid, el, vl});
    heap.push({mid, worst.b, er, vr});
  }
  out.value = total_val;
  out.error = total_err;
  out.converged = total_err <= abs_tol;
  return out;
}

// Decay window of a nonnegative envelope on the real line: locate the peak
// by coarse scan, then expand outward until the envelope stays below
// cutoff * peak (three consecutive probes). decayed_* = false means the
// envelope never dropped below the cutoff before the hard range cap
// (the divergence screen hook).
struct Window {
  double lo = 0.0, hi = 0.0;
  double peak = 0.0;
  double peak_at = 0.0;
  bool decayed_lo = false, decayed_hi = false;
};

inline Window find_decay_window(const std::function<double(double)>& envelope,
                                double scan_lo = -60.0, double scan_hi = 60.0,
                                double cutoff = 1e-14, double range_cap = 700.0) {
  Window w;
  const double scan_step = 0.5;
  w.peak = 0.0;
  w.peak_at = 0.5 * (scan_lo + scan_hi);
  for (double v = scan_lo; v <= scan_hi; v += scan_step) {
    double g = envelope(v);
    if (std::isfinite(g) && g > w.peak) {
      w.peak = g;
      w.peak_at = v;
    }
  }
  if (w.peak <= 0.0) {  // identically ~0 envelope: nothing to integrate
    w.lo = -1.0;
    w.hi = 1.0;
    w.decayed_lo = w.decayed_hi = true;
    w.peak = 0.0;
    return w;
  }
  const double floor = cutoff * w.peak;
  const double step = 2.0;
  auto expand = [&](double dir) -> std::pair<double, bool> {
    double v = w.peak_at;
    int below = 0;
    while (std::abs(v) < range_cap) {
      v += dir * step;
      double g = envelope(v);
      below = (std::isfinite(g) && g <= floor) ? below + 1 : 0;
      if (below >= 3) return {v, true};
    }
    return {dir > 0 ? range_cap : -range_cap, false};
  };
  auto [hi, dec_hi] = expand(+1.0);
  auto [lo, dec_lo] = expand(-1.0);
  w.lo = lo;
  w.hi = hi;
  w.decayed_lo = dec_lo;
  w.decayed_hi = dec_hi;
  return w;
}

// int_0^inf f(t) dt/t via t = e^w. `envelope` must dominate |f(e^w)| up to a
// constant; used for window/divergence detection only.
template <typename F>
auto integrate_halfline_mult(F&& f, const std::function<double(double)>& envelope,
                             double abs_tol, Window* window_out = nullptr,
                             long max_evals = 1 << 16)
    -> QuadResult<decltype(f(1.0))> {
  Window w = find_decay_window(envelope);
  if (window_out) *window_out = w;
  auto g = [&](double v) { return f(std::exp(v)); };
  return adaptive_gk(g, w.lo, w.hi, abs_tol, max_evals);
}

// int f(t) dt over (0,inf): same substitution with the e^w Jacobian.
template <typename F>
auto integrate_halfline(F&& f, const std::function<double(double)>& envelope,
                        double abs_tol, Window* window_out = nullptr,
                        long max_evals = 1 << 16)
    -> QuadResult<decltype(f(1.0))> {
  Window w = find_decay_window(envelope);
  if (window_out) *window_out = w;
  auto g = [&](double v) {
    double t = std::exp(v);
    return f(t) * t;
  };
  return adaptive_gk(g, w.lo, w.hi, abs_tol, max_evals);
}

// Fourier-type window integral int_lo^hi h(v) e^{-iuv} dv, panels seeded at
// period boundaries of the oscillation (plain adaptive rules stall for
// large |u|).
template <typename H>
QuadResult<std::complex<double>> fourier_window(H&& h, double u, double lo,
                                                double hi, double abs_tol,
                                                long max_evals = 1 << 18) {
  std::vector<double> knots;
  double len = hi - lo;
  double period = std::abs(u) > 1e-12
                      ? 2.0 * M_PI / std::abs(u)
                      : std::numeric_limits<double>::infinity();
  double seg = std::min(len, period);
  int count = std::max(1, std::min(8192, int(std::ceil(len / seg))));
  knots.reserve(count + 1);
  for (int i = 0; i <= count; ++i) knots.push_back(lo + len * i / count);
  auto f = [&](double v) {
    return h(v) * std::exp(std::complex<double>(0.0, -u * v));
  };
  return adaptive_gk_segmented(f, knots, abs_tol, max_evals);
}

}  // namespace nclab
