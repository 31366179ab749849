#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "nclab/quadrature.hpp"

using namespace nclab;

namespace {

TEST(AdaptiveGk, Polynomial) {
  auto q = adaptive_gk([](double x) { return x * x * x - 2.0 * x; }, -1.0,
                       3.0, 1e-12);
  EXPECT_TRUE(q.converged);
  EXPECT_NEAR(q.value, 12.0, 1e-10);
}

TEST(AdaptiveGk, NarrowPeak) {
  // int exp(-1000 (x-0.3)^2) dx = sqrt(pi/1000)
  auto q = adaptive_gk(
      [](double x) { return std::exp(-1000.0 * (x - 0.3) * (x - 0.3)); }, 0.0,
      1.0, 1e-12);
  EXPECT_TRUE(q.converged);
  EXPECT_NEAR(q.value, std::sqrt(M_PI / 1000.0), 1e-11);
}

TEST(AdaptiveGk, ComplexIntegrand) {
  auto q = adaptive_gk(
      [](double x) {
        return std::exp(std::complex<double>(0.0, x));
      },
      0.0, M_PI, 1e-12);
  EXPECT_NEAR(q.value.real(), 0.0, 1e-10);
  EXPECT_NEAR(q.value.imag(), 2.0, 1e-10);
}

TEST(HalflineMult, GammaIntegral) {
  // int_0^inf t^3 e^{-t} dt/t = Gamma(3) = 2
  auto q = integrate_halfline_mult(
      [](double t) { return t * t * t * std::exp(-t); },
      [](double w) {
        double t = std::exp(w);
        return t * t * t * std::exp(-t);
      },
      1e-11);
  EXPECT_TRUE(q.converged);
  EXPECT_NEAR(q.value, 2.0, 1e-9);
}

TEST(Halfline, GaussianMass) {
  auto density = [](double t) {
    return std::exp(-0.5 * (std::log(t)) * (std::log(t))) /
           (t * std::sqrt(2.0 * M_PI));
  };
  auto q = integrate_halfline(
      density,
      [&](double w) { return density(std::exp(w)) * std::exp(w); }, 1e-11);
  EXPECT_TRUE(q.converged);
  EXPECT_NEAR(q.value, 1.0, 1e-9);  // lognormal density integrates to 1
}

TEST(DecayWindow, FlagsNonDecay) {
  Window w = find_decay_window([](double) { return 1.0; });
  EXPECT_FALSE(w.decayed_lo);
  EXPECT_FALSE(w.decayed_hi);
}

TEST(FourierWindow, GaussianTransform) {
  // int e^{-v^2/2} e^{-iuv} dv = sqrt(2 pi) e^{-u^2/2}
  for (double u : {0.0, 1.0, 5.0, 40.0}) {
    auto q = fourier_window([](double v) { return std::exp(-0.5 * v * v); },
                            u, -12.0, 12.0, 1e-12);
    double expected = std::sqrt(2.0 * M_PI) * std::exp(-0.5 * u * u);
    EXPECT_TRUE(q.converged);
    EXPECT_NEAR(q.value.real(), expected, 1e-10);
    EXPECT_NEAR(q.value.imag(), 0.0, 1e-10);
  }
}

TEST(FourierWindow, HighFrequencyStaysAccurate) {
  // envelope 1 on [0,1]: transform (1 - e^{-iu})/(iu)
  double u = 200.0;
  auto q = fourier_window([](double) { return 1.0; }, u, 0.0, 1.0, 1e-12);
  std::complex<double> expected =
      (1.0 - std::exp(std::complex<double>(0.0, -u))) /
      std::complex<double>(0.0, u);
  EXPECT_NEAR(std::abs(q.value - expected), 0.0, 1e-10);
}

}  // namespace
