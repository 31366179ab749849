#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>

namespace nclab {

// splitmix64; used to derive independent per-sample seeds so that sample
// loops produce identical streams whether they run serially or in parallel.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // log-uniform over [lo, hi], lo > 0
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }
  std::complex<double> cnormal() { return {normal(), normal()}; }

  Eigen::MatrixXcd ginibre(int rows, int cols) {
    Eigen::MatrixXcd g(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) g(i, j) = cnormal();
    return g;
  }

  Eigen::MatrixXcd hermitian(int n) {
    Eigen::MatrixXcd g = ginibre(n, n);
    return 0.5 * (g + g.adjoint());
  }

  // positive semidefinite, generically full rank
  Eigen::MatrixXcd positive(int n) {
    Eigen::MatrixXcd g = ginibre(n, n);
    return g.adjoint() * g;
  }

  // strictly positive: PSD plus a floor proportional to its scale
  Eigen::MatrixXcd strictly_positive(int n, double floor = 0.05) {
    Eigen::MatrixXcd p = positive(n);
    double scale = p.trace().real() / n;
    return p + floor * std::max(scale, 1e-8) *
                   Eigen::MatrixXcd::Identity(n, n);
  }

  Eigen::VectorXcd unit_vector(int n) {
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = cnormal();
    v.normalize();
    return v;
  }

  Eigen::MatrixXcd unitary(int n) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre(n, n));
    Eigen::MatrixXcd q = qr.householderQ();
    // fix the phase ambiguity so the distribution is Haar
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i) {
      std::complex<double> d = r(i, i);
      if (std::abs(d) > 0) q.col(i) *= d / std::abs(d);
    }
    return q;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace nclab
