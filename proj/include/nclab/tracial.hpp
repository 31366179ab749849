#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>

#include "nclab/errors.hpp"

namespace nclab {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Complex = std::complex<double>;

// n x n matrices with the normalized trace tau = Tr/n, so tau(1) = 1.
// Everything downstream (L_p, Lorentz, semigroups) lives over this trace.
struct TracialAlgebra {
  int n = 1;

  TracialAlgebra() = default;
  explicit TracialAlgebra(int dim) : n(dim) {
    if (dim < 1) throw DimensionError("algebra dimension must be >= 1");
  }

  double trace_normalization() const { return 1.0 / n; }

  Complex trace(const Matrix& x) const { return x.trace() / double(n); }

  // <a,b> = tau(a* b)
  Complex inner(const Matrix& a, const Matrix& b) const {
    return (a.adjoint() * b).trace() / double(n);
  }

  Matrix identity() const { return Matrix::Identity(n, n); }

  bool operator==(const TracialAlgebra& o) const { return n == o.n; }
};

struct Element {
  Matrix mat;
  TracialAlgebra algebra;

  Element() = default;
  Element(Matrix m, TracialAlgebra alg) : mat(std::move(m)), algebra(alg) {
    if (mat.rows() != mat.cols())
      throw DimensionError("element matrix must be square");
    if (mat.rows() != algebra.n)
      throw DimensionError("element dimension does not match algebra");
  }

  int dim() const { return algebra.n; }
  Complex trace() const { return algebra.trace(mat); }
};

inline Element make_element(const Matrix& m) {
  return Element(m, TracialAlgebra(static_cast<int>(m.rows())));
}

inline void require_same_algebra(const Element& a, const Element& b) {
  if (!(a.algebra == b.algebra))
    throw DimensionError("elements belong to different algebras");
}

// Eigenvalues of a Hermitian matrix, ascending. Hermiticity is the caller's
// contract; we symmetrize to wash out representation roundoff.
inline Eigen::VectorXd hermitian_eigenvalues(const Matrix& x) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (x + x.adjoint()));
  return es.eigenvalues();
}

inline bool is_hermitian(const Matrix& x, double tol = 1e-10) {
  double scale = std::max(1.0, x.cwiseAbs().maxCoeff());
  return (x - x.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

// min eigenvalue >= -tol; the PSD certificate used everywhere
inline bool is_positive_semidefinite(const Matrix& x, double tol = 1e-12) {
  if (!is_hermitian(x, 1e-10)) return false;
  Eigen::VectorXd ev = hermitian_eigenvalues(x);
  double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  return ev.minCoeff() >= -tol * scale;
}

// Spectral power of a PSD matrix. Eigenvalues in [-tol, 0) are clipped to 0
// before fractional powers / logs; anything more negative is a genuine
// positivity violation and throws.
inline Matrix positive_power(const Matrix& x, double p, double tol = 1e-12) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (x + x.adjoint()));
  Eigen::VectorXd ev = es.eigenvalues();
  double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  Eigen::VectorXd powed(ev.size());
  for (int i = 0; i < ev.size(); ++i) {
    double lam = ev(i);
    if (lam < -tol * scale)
      throw PositivityError("matrix is not positive semidefinite");
    lam = std::max(lam, 0.0);
    powed(i) = (lam == 0.0 && p == 0.0) ? 1.0 : std::pow(lam, p);
  }
  return es.eigenvectors() * powed.asDiagonal() *
         es.eigenvectors().adjoint();
}

// |x| = (x* x)^(1/2)
inline Matrix abs_of(const Matrix& x) {
  return positive_power(x.adjoint() * x, 0.5);
}

}  // namespace nclab
