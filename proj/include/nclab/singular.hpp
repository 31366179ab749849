#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "nclab/errors.hpp"
#include "nclab/tracial.hpp"

namespace nclab {

// mu_t(x) as a right-continuous step function on [0,1): value values[k] on
// [breakpoints[k-1], breakpoints[k]), with breakpoints[last] = tau(1) = 1.
struct SingularFunction {
  std::vector<double> breakpoints;  // strictly increasing, ends at 1
  std::vector<double> values;       // weakly decreasing, nonnegative

  double at(double t) const {
    if (t < 0.0 || t >= 1.0) throw DomainError("mu_t defined on [0,1)");
    for (std::size_t k = 0; k < breakpoints.size(); ++k)
      if (t < breakpoints[k]) return values[k];
    return values.back();
  }

  // integral of mu_t(x)^p over [0,1), exact on the step function
  double power_integral(double p) const {
    double acc = 0.0, left = 0.0;
    for (std::size_t k = 0; k < breakpoints.size(); ++k) {
      acc += std::pow(values[k], p) * (breakpoints[k] - left);
      left = breakpoints[k];
    }
    return acc;
  }
};

inline Eigen::VectorXd singular_values_desc(const Element& x) {
  Eigen::JacobiSVD<Matrix> svd(x.mat);
  return svd.singularValues();  // Eigen returns them descending
}

// Generalized singular numbers: the k-th plateau on [(k-1)/n, k/n) is the
// k-th largest singular value of x.
inline SingularFunction singular_numbers(const Element& x) {
  const int n = x.dim();
  Eigen::VectorXd sv = singular_values_desc(x);
  SingularFunction f;
  f.breakpoints.reserve(n);
  f.values.reserve(n);
  for (int k = 0; k < n; ++k) {
    f.breakpoints.push_back(double(k + 1) / n);
    f.values.push_back(std::max(sv(k), 0.0));
  }
  f.breakpoints.back() = 1.0;
  return f;
}

// lambda_s(x) = tau(1_{(s,inf)}(|x|)) = (# singular values > s)/n
inline double distribution(const Element& x, double s) {
  if (s < 0.0) throw DomainError("distribution level s must be >= 0");
  Eigen::VectorXd sv = singular_values_desc(x);
  int count = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > s) ++count;
  return double(count) / x.dim();
}

// ||x||_p = tau(|x|^p)^(1/p); p = inf gives the operator norm. 0 < p < 1 is
// the same trace formula (a quasi-norm; no triangle inequality claimed).
inline double lp_norm(const Element& x, double p) {
  if (!(p > 0.0))
    throw DomainError("lp_norm requires p > 0 (or infinity)");
  Eigen::VectorXd sv = singular_values_desc(x);
  if (std::isinf(p)) return sv.size() ? sv(0) : 0.0;
  double acc = 0.0;
  for (int i = 0; i < sv.size(); ++i) acc += std::pow(sv(i), p);
  acc /= x.dim();
  return std::pow(acc, 1.0 / p);
}

// Lorentz norm ||x||_{p,q}; q = inf is the weak-L_p functional
// sup_s s*lambda_s(x)^(1/p). Closed form over the singular step function.
inline double lorentz_norm(const Element& x, double p, double q) {
  if (std::isinf(p))
    throw UnsupportedParameterError("L_{inf,q} is not defined here");
  if (!(p > 0.0) || !(q > 0.0))
    throw DomainError("lorentz_norm requires p, q > 0");
  const int n = x.dim();
  Eigen::VectorXd sv = singular_values_desc(x);
  if (std::isinf(q)) {
    // sup over s of s*lambda_s^{1/p}: attained approaching a jump from the
    // left, i.e. max_k sigma_k (k/n)^{1/p} over descending sigma.
    double best = 0.0;
    for (int k = 0; k < n; ++k)
      best = std::max(best, sv(k) * std::pow(double(k + 1) / n, 1.0 / p));
    return best;
  }
  // integral of (t^{1/p} mu_t)^q dt/t = sum_k sigma_k^q (p/q)(t_k^{q/p} - t_{k-1}^{q/p})
  double acc = 0.0, left = 0.0;
  for (int k = 0; k < n; ++k) {
    double right = double(k + 1) / n;
    acc += std::pow(sv(k), q) * (p / q) *
           (std::pow(right, q / p) - std::pow(left, q / p));
    left = right;
  }
  return std::pow(acc, 1.0 / q);
}

namespace detail {
// eigenvalues of a PSD element with the clipping convention of
// positive_power; throws PositivityError below -1e-12 * scale
inline Eigen::VectorXd psd_eigenvalues(const Element& x, double tol = 1e-12) {
  if (!is_hermitian(x.mat, 1e-10))
    throw PositivityError("element is not Hermitian");
  Eigen::VectorXd ev = hermitian_eigenvalues(x.mat);
  double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  for (int i = 0; i < ev.size(); ++i) {
    if (ev(i) < -tol * scale)
      throw PositivityError("element is not positive semidefinite");
    ev(i) = std::max(ev(i), 0.0);
  }
  return ev;
}
}  // namespace detail

// tau(x^q log x) for PSD x, with the convention 0 * log 0 = 0.
inline double power_log_moment(const Element& x, double q) {
  if (!(q > 0.0)) throw DomainError("power_log_moment requires q > 0");
  Eigen::VectorXd ev = detail::psd_eigenvalues(x);
  double acc = 0.0;
  for (int i = 0; i < ev.size(); ++i)
    if (ev(i) > 0.0) acc += std::pow(ev(i), q) * std::log(ev(i));
  return acc / x.dim();
}

// tau(x^2 log x) - ||x||_2^2 log ||x||_2 (nonnegative by Jensen)
inline double entropy_gap(const Element& x) {
  Eigen::VectorXd ev = detail::psd_eigenvalues(x);
  double l2sq = 0.0, moment = 0.0;
  for (int i = 0; i < ev.size(); ++i) {
    l2sq += ev(i) * ev(i);
    if (ev(i) > 0.0) moment += ev(i) * ev(i) * std::log(ev(i));
  }
  l2sq /= x.dim();
  moment /= x.dim();
  if (l2sq <= 0.0) throw DegenerateInputError("entropy_gap of zero element");
  return moment - l2sq * std::log(std::sqrt(l2sq));
}

}  // namespace nclab
