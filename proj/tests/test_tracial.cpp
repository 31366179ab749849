#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "nclab/rng.hpp"
#include "nclab/singular.hpp"
#include "nclab/tracial.hpp"

using namespace nclab;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

Element diag2(double a, double b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return make_element(m);
}

// independent route for tau(|x|^p)^{1/p}: eigenvalues of x* x through the
// symmetric eigensolver rather than the SVD
double lp_via_gram(const Element& x, double p) {
  Eigen::VectorXd ev = hermitian_eigenvalues(x.mat.adjoint() * x.mat);
  double acc = 0.0;
  for (int i = 0; i < ev.size(); ++i)
    acc += std::pow(std::max(ev(i), 0.0), p / 2.0);
  return std::pow(acc / x.dim(), 1.0 / p);
}

TEST(TracialAlgebra, NormalizedTrace) {
  TracialAlgebra alg(3);
  EXPECT_DOUBLE_EQ(alg.trace(alg.identity()).real(), 1.0);
  EXPECT_DOUBLE_EQ(alg.trace(alg.identity()).imag(), 0.0);
}

TEST(TracialAlgebra, TraceIsTracialAndPositive) {
  Rng rng(7);
  TracialAlgebra alg(4);
  for (int k = 0; k < 20; ++k) {
    Matrix x = rng.ginibre(4, 4), y = rng.ginibre(4, 4);
    EXPECT_NEAR(std::abs(alg.trace(x * y) - alg.trace(y * x)), 0.0, 1e-12);
    EXPECT_GE(alg.trace(x.adjoint() * x).real(), -1e-12);
  }
}

TEST(SingularNumbers, DiagonalPlateaus) {
  Element x = diag2(3.0, 1.0);
  SingularFunction mu = singular_numbers(x);
  EXPECT_DOUBLE_EQ(mu.at(0.0), 3.0);
  EXPECT_DOUBLE_EQ(mu.at(0.49), 3.0);
  EXPECT_DOUBLE_EQ(mu.at(0.5), 1.0);
  EXPECT_DOUBLE_EQ(mu.at(0.99), 1.0);
  EXPECT_DOUBLE_EQ(mu.breakpoints.back(), 1.0);
}

TEST(SingularNumbers, ZeroAndUnitary) {
  Element zero = make_element(Matrix::Zero(3, 3));
  SingularFunction mu0 = singular_numbers(zero);
  for (double v : mu0.values) EXPECT_DOUBLE_EQ(v, 0.0);

  Rng rng(11);
  Element u = make_element(rng.unitary(3));
  SingularFunction mu1 = singular_numbers(u);
  for (double v : mu1.values) EXPECT_NEAR(v, 1.0, 1e-12);
}

TEST(SingularNumbers, WeaklyDecreasing) {
  Rng rng(3);
  for (int k = 0; k < 10; ++k) {
    Element x = make_element(rng.ginibre(5, 5));
    SingularFunction mu = singular_numbers(x);
    for (std::size_t i = 1; i < mu.values.size(); ++i)
      EXPECT_LE(mu.values[i], mu.values[i - 1] + 1e-14);
  }
}

TEST(Distribution, DiagonalCases) {
  Element x = diag2(3.0, 1.0);
  EXPECT_DOUBLE_EQ(distribution(x, 2.0), 0.5);
  EXPECT_DOUBLE_EQ(distribution(x, 5.0), 0.0);
  EXPECT_DOUBLE_EQ(distribution(x, 0.0), 1.0);
  EXPECT_THROW(distribution(x, -1.0), DomainError);
}

TEST(LpNorm, HandComputed) {
  Element x = diag2(3.0, 1.0);
  EXPECT_NEAR(lp_norm(x, 1.0), 2.0, 1e-14);
  EXPECT_NEAR(lp_norm(x, 2.0), std::sqrt(5.0), 1e-14);
  EXPECT_DOUBLE_EQ(lp_norm(x, kInf), 3.0);
  Element one = make_element(Matrix::Identity(4, 4));
  for (double p : {0.5, 1.0, 2.0, 7.0})
    EXPECT_NEAR(lp_norm(one, p), 1.0, 1e-14);
  EXPECT_DOUBLE_EQ(lp_norm(one, kInf), 1.0);
}

TEST(LpNorm, RearrangementIdentity) {
  Rng rng(17);
  for (int k = 0; k < 50; ++k) {
    int n = 2 + (k % 7);
    Element x = make_element(rng.ginibre(n, n));
    for (double p : {0.5, 1.0, 2.0, 3.0, 10.0}) {
      double via_trace = lp_via_gram(x, p);
      double via_mu = std::pow(singular_numbers(x).power_integral(p), 1.0 / p);
      EXPECT_NEAR(via_mu, via_trace, 1e-10 * std::max(1.0, via_trace));
    }
  }
}

TEST(LpNorm, MonotoneInPWithNormalizedTrace) {
  Rng rng(23);
  for (int k = 0; k < 30; ++k) {
    Element x = make_element(rng.ginibre(4, 4));
    double prev = lp_norm(x, 0.5);
    for (double p : {1.0, 1.5, 2.0, 4.0, 16.0}) {
      double cur = lp_norm(x, p);
      EXPECT_GE(cur - prev, -1e-12 * std::max(1.0, cur));
      prev = cur;
    }
    EXPECT_GE(lp_norm(x, kInf) - prev, -1e-12);
  }
}

TEST(LpNorm, Hoelder) {
  Rng rng(29);
  for (double p : {1.5, 2.0, 3.0}) {
    double pc = p / (p - 1.0);
    for (int k = 0; k < 30; ++k) {
      Element x = make_element(rng.ginibre(4, 4));
      Element y = make_element(rng.ginibre(4, 4));
      double lhs = std::abs(x.algebra.trace(x.mat * y.mat));
      double rhs = lp_norm(x, p) * lp_norm(y, pc);
      EXPECT_LE(lhs, rhs + 1e-10 * std::max(1.0, rhs));
    }
  }
}

TEST(LorentzNorm, IdentityClosedForm) {
  Element one = make_element(Matrix::Identity(5, 5));
  for (double p : {0.7, 1.0, 2.0, 3.5}) {
    for (double q : {0.5, 1.0, 2.0, 8.0}) {
      double expected = std::pow(p / q, 1.0 / q);
      EXPECT_NEAR(lorentz_norm(one, p, q), expected, 1e-12 * expected);
    }
  }
}

TEST(LorentzNorm, WeakNormDiagonal) {
  EXPECT_DOUBLE_EQ(lorentz_norm(diag2(3.0, 1.0), 1.0, kInf), 1.5);
}

TEST(LorentzNorm, LppEqualsLp) {
  Rng rng(31);
  for (int k = 0; k < 40; ++k) {
    int n = 2 + (k % 5);
    Element x = make_element(rng.ginibre(n, n));
    for (double p : {0.8, 1.0, 2.0, 5.0}) {
      double lp = lp_norm(x, p);
      EXPECT_NEAR(lorentz_norm(x, p, p), lp, 1e-12 * std::max(1.0, lp));
    }
  }
}

TEST(LorentzNorm, RejectsInfiniteP) {
  EXPECT_THROW(lorentz_norm(diag2(1, 1), kInf, 2.0),
               UnsupportedParameterError);
}

TEST(PowerLogMoment, AnalyticDiagonal) {
  Element x = diag2(std::exp(1.0), 1.0);
  for (double q : {0.5, 1.0, 2.0, 3.0})
    EXPECT_NEAR(power_log_moment(x, q), std::exp(q) / 2.0, 1e-12 * std::exp(q));
  Element one = make_element(Matrix::Identity(3, 3));
  EXPECT_NEAR(power_log_moment(one, 2.0), 0.0, 1e-14);
}

TEST(PowerLogMoment, FiniteDifferenceOracle) {
  Rng rng(37);
  const double h = 1e-4;
  for (int k = 0; k < 20; ++k) {
    Element x = Element(rng.strictly_positive(4), TracialAlgebra(4));
    double q = 2.0;
    auto qq = [&](double qv) { return std::pow(lp_norm(x, qv), qv); };
    double fd = (qq(q + h) - qq(q - h)) / (2.0 * h);
    double formula = power_log_moment(x, q);
    EXPECT_NEAR(fd, formula, 1e-6 * std::max(1.0, std::abs(formula)));
  }
}

TEST(PowerLogMoment, RejectsNegativeSpectrum) {
  EXPECT_THROW(power_log_moment(diag2(1.0, -0.5), 2.0), PositivityError);
}

TEST(EntropyGap, TrivialAndAnalytic) {
  Element one = make_element(Matrix::Identity(2, 2));
  EXPECT_NEAR(entropy_gap(one), 0.0, 1e-14);
  EXPECT_NEAR(entropy_gap(diag2(2.5, 2.5)), 0.0, 1e-13);

  // x = diag(e,1): tau(x^2 log x) = e^2/2, ||x||_2^2 = (e^2+1)/2
  double e2 = std::exp(2.0);
  double expected = e2 / 2.0 -
                    ((e2 + 1.0) / 2.0) * std::log(std::sqrt((e2 + 1.0) / 2.0));
  EXPECT_NEAR(entropy_gap(diag2(std::exp(1.0), 1.0)), expected, 1e-12);
}

TEST(EntropyGap, ZeroElementRejected) {
  EXPECT_THROW(entropy_gap(make_element(Matrix::Zero(2, 2))),
               DegenerateInputError);
}

TEST(EntropyGap, Nonnegative) {
  Rng rng(41);
  for (int k = 0; k < 30; ++k) {
    Element x = Element(rng.positive(4), TracialAlgebra(4));
    EXPECT_GE(entropy_gap(x), -1e-10);
  }
}

TEST(Element, DimensionChecks) {
  EXPECT_THROW(Element(Matrix::Zero(2, 3), TracialAlgebra(2)), DimensionError);
  EXPECT_THROW(Element(Matrix::Zero(3, 3), TracialAlgebra(2)), DimensionError);
}

}  // namespace
