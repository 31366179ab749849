#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "nclab/errors.hpp"
#include "nclab/rng.hpp"
#include "nclab/singular.hpp"
#include "nclab/superoperator.hpp"

namespace nclab {

struct NormEstimate {
  double value = 0.0;
  bool exact = false;       // true only for the (2,2) singular-value route
  Element witness;          // attaining (or best found) input
};

namespace detail {

// Norm-attaining Hoelder partner: given z and exponent p, returns y with
// ||y||_{p'} = 1 and tau(y* z) = ||z||_p. Conventions: p = 1 gives the
// polar unitary U V*, p = inf the scaled rank-one n u1 v1*.
inline Matrix holder_witness(const Matrix& z, double p, int n) {
  Eigen::JacobiSVD<Matrix> svd(z, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::VectorXd sv = svd.singularValues();
  const double top = sv.size() ? sv(0) : 0.0;
  if (top <= 0.0) {
    // z = 0: any unit-norm partner will do
    Matrix y = Matrix::Zero(n, n);
    y(0, 0) = std::isinf(p) ? double(n) : 1.0;
    return y;
  }
  if (std::isinf(p)) {
    return double(n) * svd.matrixU().col(0) * svd.matrixV().col(0).adjoint();
  }
  Eigen::VectorXd d(sv.size());
  if (p == 1.0) {
    d.setOnes();
  } else {
    double normp = 0.0;
    for (int i = 0; i < sv.size(); ++i) normp += std::pow(sv(i) / top, p);
    normp = top * std::pow(normp / n, 1.0 / p);
    for (int i = 0; i < sv.size(); ++i)
      d(i) = std::pow(sv(i) / normp, p - 1.0);
  }
  return svd.matrixU() * d.asDiagonal() * svd.matrixV().adjoint();
}

}  // namespace detail

// Certified lower bound for |||T|||_{p -> q} by alternating Hoelder-witness
// ascent over random restarts; each iterate is feasible, so all reported
// values are true lower bounds. (p,q) = (2,2) is exact: the largest singular
// value of the action matrix in the tau-orthonormal representation.
// For p = 1 the iterates are exactly the extreme points n*u v* of the unit
// ball of L_1, so the ascent ranges over the rank-one parametrization.
inline NormEstimate operator_norm(const Superoperator& T, double p, double q,
                                  int restarts = 64,
                                  std::uint64_t seed = 0x5eed) {
  const int n = T.dim();
  if (p == 2.0 && q == 2.0) {
    Eigen::JacobiSVD<Matrix> svd(T.mat, Eigen::ComputeFullV);
    NormEstimate est;
    est.value = svd.singularValues()(0);
    est.exact = true;
    Vector v = svd.matrixV().col(0) * std::sqrt(double(n));
    est.witness = Element(unvec(v, n), T.algebra);
    return est;
  }
  const double p_dual = std::isinf(p) ? 1.0 : (p == 1.0 ? std::numeric_limits<double>::infinity() : p / (p - 1.0));
  NormEstimate best;
  best.witness = Element(T.algebra.identity(), T.algebra);
  auto run_from = [&](Matrix x) {
    double nx = lp_norm(Element(x, T.algebra), p);
    if (nx <= 0.0) return;
    x /= nx;
    double val = 0.0;
    for (int it = 0; it < 200; ++it) {
      Matrix z = T.apply(x);
      double nz = lp_norm(Element(z, T.algebra), q);
      if (nz <= 0.0) break;
      Matrix y = detail::holder_witness(z, q, n);
      Matrix w = T.adjoint().apply(y);
      Matrix xn = detail::holder_witness(w, p_dual, n);
      double gain = nz - val;
      val = nz;
      x = xn;
      if (it > 0 && gain <= 1e-10 * std::max(1.0, val)) break;
    }
    // one last evaluation on the final iterate
    double final_val = lp_norm(Element(T.apply(x), T.algebra), q) /
                       lp_norm(Element(x, T.algebra), p);
    if (final_val > best.value) {
      best.value = final_val;
      best.witness = Element(x, T.algebra);
    }
    if (val > best.value) best.value = val;
  };
  // deterministic structured starts, then seeded random restarts
  run_from(T.algebra.identity());
  {
    Matrix e = Matrix::Zero(n, n);
    e(0, 0) = 1.0;
    run_from(e);
  }
  for (int r = 0; r < restarts; ++r) {
    Rng rng(mix_seed(seed, r));
    run_from(rng.ginibre(n, n));
    if (p == 1.0) {
      // extreme-point start c u v*
      Matrix x = double(n) * rng.unit_vector(n) * rng.unit_vector(n).adjoint();
      run_from(x);
    }
  }
  return best;
}

// Lower-bound estimate of a weak-type norm |||T|||_{p -> (r,inf)}: same
// witness search with the Lorentz functional as objective. There is no
// smooth Hoelder partner for L_{r,inf}, so this reuses strong-type ascent
// witnesses plus random rank-one candidates and a local polish.
inline NormEstimate weak_type_norm(const Superoperator& T, double p, double r,
                                   int samples = 256,
                                   std::uint64_t seed = 0x5eed) {
  const int n = T.dim();
  auto objective = [&](const Matrix& x) -> double {
    double nx = lp_norm(Element(x, T.algebra), p);
    if (nx <= 0.0) return 0.0;
    return lorentz_norm(Element(T.apply(x), T.algebra), r,
                        std::numeric_limits<double>::infinity()) /
           nx;
  };
  NormEstimate best;
  best.witness = Element(T.algebra.identity(), T.algebra);
  auto consider = [&](const Matrix& x) {
    double v = objective(x);
    if (v > best.value) {
      best.value = v;
      best.witness = Element(x, T.algebra);
    }
  };
  consider(T.algebra.identity());
  // strong-type witnesses for nearby exponents are good starting guesses
  for (double q : {r, 1.5 * r, 3.0 * r}) {
    NormEstimate st = operator_norm(T, p, q, 16, seed);
    consider(st.witness.mat);
  }
  for (int k = 0; k < samples; ++k) {
    Rng rng(mix_seed(seed ^ 0x77, k));
    consider(rng.ginibre(n, n));
    consider(double(n) * rng.unit_vector(n) * rng.unit_vector(n).adjoint());
  }
  // local polish: random perturbations with shrinking step
  Matrix x = best.witness.mat;
  double step = 0.5;
  Rng rng(mix_seed(seed ^ 0xabc, 1));
  for (int it = 0; it < 400; ++it) {
    Matrix cand = x + step * rng.ginibre(n, n);
    double v = objective(cand);
    if (v > best.value) {
      best.value = v;
      best.witness = Element(cand, T.algebra);
      x = cand;
    } else {
      step *= 0.97;
    }
  }
  return best;
}

}  // namespace nclab
