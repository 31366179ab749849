#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <sstream>
#include <vector>

#include "nclab/errors.hpp"
#include "nclab/quadrature.hpp"
#include "nclab/tracial.hpp"

namespace nclab {

// Row-major vectorization: vec(x)[i*n+j] = x(i,j). With this convention the
// action matrix of a superoperator coincides with its matrix in the
// orthonormal basis {sqrt(n) E_ij} of the tau inner product, so
// tau-self-adjointness is literal Hermitian symmetry of `mat`.
inline Vector vec_of(const Matrix& x) {
  const int n = static_cast<int>(x.rows());
  Vector v(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v(i * n + j) = x(i, j);
  return v;
}

inline Matrix unvec(const Vector& v, int n) {
  Matrix x(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x(i, j) = v(i * n + j);
  return x;
}

struct Superoperator {
  Matrix mat;  // n^2 x n^2 acting on vec(x)
  TracialAlgebra algebra;

  Superoperator() = default;
  Superoperator(Matrix m, TracialAlgebra alg)
      : mat(std::move(m)), algebra(alg) {
    const int d = algebra.n * algebra.n;
    if (mat.rows() != d || mat.cols() != d)
      throw DimensionError("superoperator matrix must be n^2 x n^2");
  }

  int dim() const { return algebra.n; }

  Element apply(const Element& x) const {
    if (!(x.algebra == algebra))
      throw DimensionError("element/superoperator algebra mismatch");
    return Element(unvec(mat * vec_of(x.mat), algebra.n), algebra);
  }

  Matrix apply(const Matrix& x) const {
    if (x.rows() != algebra.n || x.cols() != algebra.n)
      throw DimensionError("element/superoperator dimension mismatch");
    return unvec(mat * vec_of(x), algebra.n);
  }

  // adjoint w.r.t. <a,b> = tau(a* b)
  Superoperator adjoint() const {
    return Superoperator(mat.adjoint(), algebra);
  }

  bool is_self_adjoint(double tol = 1e-10) const {
    double scale = std::max(1.0, mat.cwiseAbs().maxCoeff());
    return (mat - mat.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
  }

  static Superoperator identity(TracialAlgebra alg) {
    return Superoperator(Matrix::Identity(alg.n * alg.n, alg.n * alg.n), alg);
  }
};

inline Superoperator compose(const Superoperator& s, const Superoperator& t) {
  if (!(s.algebra == t.algebra))
    throw DimensionError("composing superoperators over different algebras");
  return Superoperator(s.mat * t.mat, s.algebra);
}

struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;  // ascending
  Matrix eigenvectors;          // orthonormal columns, vec coordinates
  TracialAlgebra algebra;
  int kernel_dim = 0;

  // eigen-element k as a matrix, normalized so tau(e* e) = 1
  Element eigen_element(int k) const {
    Vector v = eigenvectors.col(k) * std::sqrt(double(algebra.n));
    return Element(unvec(v, algebra.n), algebra);
  }

  Superoperator reconstruct(const std::function<Complex(double)>& f) const {
    const int d = static_cast<int>(eigenvalues.size());
    Matrix m = Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k)
      m += f(eigenvalues(k)) * eigenvectors.col(k) *
           eigenvectors.col(k).adjoint();
    return Superoperator(m, algebra);
  }
};

inline constexpr double kKernelTol = 1e-10;

inline SpectralDecomposition eigendecompose(const Superoperator& L) {
  if (!L.is_self_adjoint())
    throw SymmetryError("eigendecompose requires a tau-self-adjoint map");
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (L.mat + L.mat.adjoint()));
  SpectralDecomposition sd;
  sd.eigenvalues = es.eigenvalues();
  sd.eigenvectors = es.eigenvectors();
  sd.algebra = L.algebra;
  sd.kernel_dim = 0;
  for (int k = 0; k < sd.eigenvalues.size(); ++k)
    if (std::abs(sd.eigenvalues(k)) <= kKernelTol) ++sd.kernel_dim;
  return sd;
}

// m(L) = sum m(lambda_k) P_k. Throws if m is undefined or non-finite at an
// eigenvalue, naming it.
inline Superoperator apply_function(
    const std::function<Complex(double)>& m, const SpectralDecomposition& sd) {
  const int d = static_cast<int>(sd.eigenvalues.size());
  Matrix out = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    Complex val = m(sd.eigenvalues(k));
    if (!std::isfinite(val.real()) || !std::isfinite(val.imag())) {
      std::ostringstream os;
      os << "multiplier symbol is not finite at eigenvalue "
         << sd.eigenvalues(k);
      throw EvaluationError(os.str());
    }
    out += val * sd.eigenvectors.col(k) * sd.eigenvectors.col(k).adjoint();
  }
  return Superoperator(out, sd.algebra);
}

inline Superoperator apply_function(const std::function<Complex(double)>& m,
                                    const Superoperator& L) {
  return apply_function(m, eigendecompose(L));
}

struct ImaginaryPower {
  Superoperator op;
  int kernel_dim = 0;  // the kernel component is mapped to 0 and flagged
};

// L^{iu} on range(I - P_0); eigenvalues e^{iu log lambda}, kernel killed.
inline ImaginaryPower imaginary_power(const SpectralDecomposition& sd,
                                      double u) {
  ImaginaryPower out;
  out.kernel_dim = sd.kernel_dim;
  out.op = apply_function(
      [u](double lam) -> Complex {
        if (std::abs(lam) <= kKernelTol) return 0.0;
        return std::exp(Complex(0.0, u * std::log(lam)));
      },
      sd);
  return out;
}

inline ImaginaryPower imaginary_power(const Superoperator& L, double u) {
  return imaginary_power(eigendecompose(L), u);
}

// Balakrishnan resolvent integral for L^alpha, 0 < alpha < 1:
//   (sin(alpha pi)/pi) int_0^inf s^{alpha-1} (sI+L)^{-1} L ds,
// evaluated by adaptive quadrature after s = e^w (acts as 0 on the kernel).
// This is the route checked against spectral lambda^alpha, so it performs
// the actual resolvent solves rather than reusing the eigenbasis.
inline Superoperator fractional_power_resolvent(const Superoperator& L,
                                                double alpha,
                                                double abs_tol = 1e-9,
                                                long max_evals = 1 << 16) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("fractional power exponent must lie in (0,1)");
  if (!L.is_self_adjoint())
    throw SymmetryError("fractional power requires a self-adjoint generator");
  const int d = static_cast<int>(L.mat.rows());
  double norm_l = L.mat.cwiseAbs().maxCoeff();
  if (norm_l == 0.0) return Superoperator(Matrix::Zero(d, d), L.algebra);

  // integrand in w: e^{alpha w} (e^w I + L)^{-1} L; decays like e^{alpha w}
  // to the left and ||L|| e^{(alpha-1) w} to the right
  double w_lo = std::log(1e-18) / alpha;
  double w_hi = (std::log(norm_l) - std::log(1e-18)) / (1.0 - alpha) + 1.0;
  auto integrand = [&](double w) -> Matrix {
    double s = std::exp(w);
    Matrix res = (s * Matrix::Identity(d, d) + L.mat).lu().solve(L.mat);
    return std::pow(s, alpha) * res;
  };
  auto q = adaptive_gk(integrand, w_lo, w_hi, abs_tol, max_evals);
  if (!q.converged) {
    std::ostringstream os;
    os << "resolvent quadrature did not reach tolerance " << abs_tol
       << " (achieved " << q.error << ")";
    throw AccuracyError(os.str());
  }
  Matrix out = (std::sin(alpha * M_PI) / M_PI) * q.value;
  return Superoperator(out, L.algebra);
}

}  // namespace nclab
