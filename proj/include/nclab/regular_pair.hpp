#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "nclab/errors.hpp"
#include "nclab/quadrature.hpp"

namespace nclab {

enum class PairFamily { Power, PowerRatio, PowerLog, Custom };

// A growth function phi on (0,inf) and a holomorphic symbol psi on the open
// right half-plane, expected to satisfy the regularity conditions (1)-(6).
// The built-in families:
//   power:       phi = t^a,                 psi = z^a
//   power-ratio: phi = t^a (1+t)^(b-a),     psi = z^b (1+z)^(a-b)
//   power-log:   phi = t^a log(2+t)^b,      psi = z^a log(2+1/z)^(-b)
struct RegularPair {
  std::function<double(double)> phi;
  std::function<Complex(Complex)> psi;
  PairFamily family = PairFamily::Custom;
  double alpha = 1.0;
  double beta = 0.0;
};

inline RegularPair make_power_pair(double alpha) {
  if (!(alpha > 0.0)) throw ValidationError("power pair needs alpha > 0");
  RegularPair p;
  p.family = PairFamily::Power;
  p.alpha = alpha;
  p.phi = [alpha](double t) { return std::pow(t, alpha); };
  p.psi = [alpha](Complex z) { return std::pow(z, Complex(alpha)); };
  return p;
}

inline RegularPair make_power_ratio_pair(double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw ValidationError("power-ratio pair needs alpha, beta > 0");
  RegularPair p;
  p.family = PairFamily::PowerRatio;
  p.alpha = alpha;
  p.beta = beta;
  p.phi = [alpha, beta](double t) {
    return std::pow(t, alpha) * std::pow(1.0 + t, beta - alpha);
  };
  p.psi = [alpha, beta](Complex z) {
    return std::pow(z, Complex(beta)) * std::pow(1.0 + z, Complex(alpha - beta));
  };
  return p;
}

inline RegularPair make_power_log_pair(double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw ValidationError("power-log pair needs alpha, beta > 0");
  RegularPair p;
  p.family = PairFamily::PowerLog;
  p.alpha = alpha;
  p.beta = beta;
  p.phi = [alpha, beta](double t) {
    return std::pow(t, alpha) * std::pow(std::log(2.0 + t), beta);
  };
  p.psi = [alpha, beta](Complex z) {
    return std::pow(z, Complex(alpha)) *
           std::pow(std::log(2.0 + 1.0 / z), Complex(-beta));
  };
  return p;
}

// Gamma_{R,omega} = { R < Re z < 2R, |arg z| < omega }
struct SectorSpec {
  double omega = M_PI / 4.0;
  double R = 1.0;

  SectorSpec() = default;
  SectorSpec(double omega_, double R_) : omega(omega_), R(R_) {
    if (!(omega > 0.0 && omega < M_PI / 2.0))
      throw ValidationError("sector angle must lie strictly inside (0, pi/2)");
    if (!(R > 0.0)) throw ValidationError("sector scale R must be positive");
  }
};

// Delta_2 constant witnessed on a grid: max phi(2t)/phi(t).
inline double delta2_constant(const RegularPair& pair,
                              const std::vector<double>& t_grid) {
  double best = 0.0;
  for (double t : t_grid) {
    if (!(t > 0.0)) throw DomainError("delta2 grid must be positive");
    double lo = pair.phi(t), hi = pair.phi(2.0 * t);
    if (!(lo > 0.0) || !std::isfinite(lo))
      throw DomainError("phi must be positive on the grid");
    best = std::max(best, hi / lo);
  }
  return best;
}

namespace detail {

// adaptive integral with relative control on top of the absolute GK loop
template <typename F>
double integrate_rel(F&& f, double lo, double hi, double rel_tol,
                     double abs_floor = 1e-13) {
  auto first = adaptive_gk(f, lo, hi, abs_floor);
  double scale = std::abs(first.value);
  if (first.converged || first.error <= rel_tol * std::max(scale, abs_floor))
    return first.value;
  auto second = adaptive_gk(f, lo, hi, rel_tol * std::max(scale, abs_floor),
                            1 << 18);
  return second.value;
}

}  // namespace detail

// Condition (3) constant D_{phi,theta} witnessed on a grid: the larger of
//   max_t  [int_0^t phi^theta ds/s] / phi(t)^theta        (head)
//   max_t  [int_t^inf phi^{-theta} ds/s] / phi(t)^{-theta} (tail)
// Head and tail are computed in w = log s with decay-probed truncation; a
// family violating (3) (e.g. constant phi) trips the divergence screen.
inline double integral_condition(const RegularPair& pair, double theta,
                                 const std::vector<double>& t_grid) {
  if (!(theta > 0.0)) throw DomainError("integral_condition requires theta > 0");
  double worst = 0.0;
  for (double t : t_grid) {
    if (!(t > 0.0)) throw DomainError("grid must be positive");
    const double wt = std::log(t);
    auto head_f = [&](double w) { return std::pow(pair.phi(std::exp(w)), theta); };
    auto tail_f = [&](double w) { return std::pow(pair.phi(std::exp(w)), -theta); };
    // decay screen: integrand must fall below 1e-14 of its value at t
    double ref_head = head_f(wt);
    double w_lo = wt;
    bool dec = false;
    while (w_lo > -700.0) {
      w_lo -= 5.0;
      if (head_f(w_lo) <= 1e-14 * ref_head) {
        dec = true;
        break;
      }
    }
    if (!dec)
      throw DivergenceError(
          "condition (3) head integral diverges at the 0 endpoint");
    double head = detail::integrate_rel(head_f, w_lo, wt, 1e-10);

    double ref_tail = tail_f(wt);
    double w_hi = wt;
    dec = false;
    while (w_hi < 700.0) {
      w_hi += 5.0;
      if (tail_f(w_hi) <= 1e-14 * ref_tail) {
        dec = true;
        break;
      }
    }
    if (!dec)
      throw DivergenceError(
          "condition (3) tail integral diverges at the infinity endpoint");
    double tail = detail::integrate_rel(tail_f, wt, w_hi, 1e-10);

    double phit = std::pow(pair.phi(t), theta);
    worst = std::max({worst, head / phit, tail * phit});
  }
  return worst;
}

// Condition (5) witness on one box: inf|psi| / sup|psi| over a quasi-uniform
// sample of Gamma_{R,omega} (default split 32 rays x samples/32 abscissae).
inline double sector_ratio(const RegularPair& pair, const SectorSpec& sector,
                           int samples = 2048) {
  if (samples < 100)
    throw DomainError("sector_ratio needs at least 100 samples");
  const int rays = 32;
  const int radii = std::max(4, samples / rays);
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (int i = 0; i < rays; ++i) {
    double theta = -sector.omega + 2.0 * sector.omega * (i + 0.5) / rays;
    for (int j = 0; j < radii; ++j) {
      double x = sector.R *
                 std::exp(std::log(2.0) * (j + 0.5) / radii);  // log-spaced in [R,2R]
      Complex z(x, x * std::tan(theta));
      double a = std::abs(pair.psi(z));
      if (!(a > 0.0))
        throw EvaluationError("psi vanishes at a sector sample point");
      lo = std::min(lo, a);
      hi = std::max(hi, a);
    }
  }
  return lo / hi;
}

// Laplace companion psi_theta(z) = int_0^inf e^{-zt} phi_theta(t) dt/t with
// the default representative phi_theta = phi^theta. Oscillation from Im z is
// handled by seeding panels at phase-period boundaries in w = log t.
inline Complex psi_theta(const RegularPair& pair, double theta, Complex z,
                         double abs_tol = 1e-9) {
  if (!(theta > 0.0)) throw DomainError("psi_theta requires theta > 0");
  if (!(z.real() > 0.0))
    throw DomainError("psi_theta is defined on the open right half-plane");
  auto envelope = [&](double w) {
    double t = std::exp(w);
    return std::exp(-z.real() * t) * std::pow(pair.phi(t), theta);
  };
  Window win = find_decay_window(envelope);
  if (!win.decayed_lo || !win.decayed_hi)
    throw AccuracyError("psi_theta integrand failed the decay screen");
  auto f = [&](double w) -> Complex {
    double t = std::exp(w);
    return std::exp(-z * t) * std::pow(pair.phi(t), theta);
  };
  std::vector<double> knots{win.lo};
  const double im = std::abs(z.imag());
  if (im > 1e-12) {
    // phase Im(z) e^w advances by 2 pi between consecutive knots
    for (int j = 1; j <= 100000; ++j) {
      double w = std::log(2.0 * M_PI * j / im);
      if (w <= win.lo) continue;
      if (w >= win.hi) break;
      knots.push_back(w);
      if (knots.size() > 8192) break;
    }
  }
  knots.push_back(win.hi);
  auto q = adaptive_gk_segmented(f, knots, abs_tol, 1 << 18);
  if (!q.converged)
    throw AccuracyError("psi_theta quadrature did not converge to tolerance");
  return q.value;
}

// Condition (6) bracket: (min, max) of |psi(z)^theta psi_theta(z)| over rays
// in Gamma_omega; witnessed when the bracket is positive and finite.
struct EquivalenceBracket {
  double lower = 0.0;
  double upper = 0.0;
};

inline EquivalenceBracket equivalence_check(const RegularPair& pair,
                                            double theta, double omega,
                                            int samples = 50) {
  if (!(theta > 0.0)) throw DomainError("equivalence_check requires theta > 0");
  if (!(omega > 0.0 && omega < M_PI / 2.0))
    throw DomainError("equivalence_check requires omega in (0, pi/2)");
  const int rays = 5;
  const int per_ray = std::max(1, samples / rays);
  EquivalenceBracket br;
  br.lower = std::numeric_limits<double>::infinity();
  for (int i = 0; i < rays; ++i) {
    double ang = -omega + 2.0 * omega * i / double(rays - 1);
    for (int j = 0; j < per_ray; ++j) {
      double r = std::exp(std::log(1e-2) +
                          (std::log(1e2) - std::log(1e-2)) *
                              (j + 0.5) / per_ray);
      Complex z = std::polar(r, ang);
      Complex val = std::pow(pair.psi(z), Complex(theta)) *
                    psi_theta(pair, theta, z);
      double a = std::abs(val);
      br.lower = std::min(br.lower, a);
      br.upper = std::max(br.upper, a);
    }
  }
  return br;
}

// Constant C_phi with phi(ts) >= C_phi phi(t) phi(s): min over grid pairs.
inline double submultiplicative_constant(const RegularPair& pair,
                                         const std::vector<double>& grid) {
  double best = std::numeric_limits<double>::infinity();
  for (double t : grid)
    for (double s : grid) {
      double denom = pair.phi(t) * pair.phi(s);
      if (denom > 0.0) best = std::min(best, pair.phi(t * s) / denom);
    }
  return best;
}

// sup over (t,z) grids of phi(t)^alpha |psi(z)|^alpha e^{-tz}, z real
// positive; the quantity that must stay bounded for the semigroup bound.
inline double phi_psi_bound_constant(const RegularPair& pair, double alpha,
                                     const std::vector<double>& t_grid,
                                     const std::vector<double>& z_grid) {
  double sup = 0.0;
  for (double t : t_grid)
    for (double z : z_grid) {
      double v = std::pow(pair.phi(t), alpha) *
                 std::pow(std::abs(pair.psi(Complex(z, 0.0))), alpha) *
                 std::exp(-t * z);
      sup = std::max(sup, v);
    }
  return sup;
}

// Numeric inverse of phi on (0, inf); phi is increasing continuous
// surjective by condition (1).
inline double phi_inverse(const RegularPair& pair, double value) {
  if (!(value > 0.0)) throw DomainError("phi_inverse needs a positive value");
  double lo = 1.0, hi = 1.0;
  while (pair.phi(lo) > value && lo > 1e-300) lo *= 0.5;
  while (pair.phi(hi) < value && hi < 1e300) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    double mid = std::sqrt(lo * hi);
    if (pair.phi(mid) < value)
      lo = mid;
    else
      hi = mid;
  }
  return std::sqrt(lo * hi);
}

}  // namespace nclab
