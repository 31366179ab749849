#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "nclab/errors.hpp"
#include "nclab/operator_norm.hpp"
#include "nclab/parallel.hpp"
#include "nclab/rng.hpp"
#include "nclab/superoperator.hpp"

namespace nclab {

enum class GeneratorFamily { Schur, FourierFiniteAbelianGroup, Depolarizing, Custom };

struct GeneratorSpec {
  GeneratorFamily family = GeneratorFamily::Depolarizing;
  int n = 2;                          // algebra dimension (group order for fourier)
  Eigen::MatrixXd schur_symbol;       // schur: real symmetric, >= 0, zero diagonal
  std::vector<double> length_function;  // fourier: psi(g), g = 0..m-1
  Matrix custom_matrix;               // custom: raw n^2 x n^2 action matrix
  double shift = 0.0;                 // replaces L by L + shift*I
};

inline Superoperator depolarizing_generator(TracialAlgebra alg) {
  // L(x) = x - tau(x) 1, the projection onto trace-zero elements
  const int n = alg.n, d = n * n;
  Vector vid = vec_of(alg.identity());
  Matrix m = Matrix::Identity(d, d) - (vid * vid.adjoint()) / double(n);
  return Superoperator(m, alg);
}

inline Superoperator schur_generator(const Eigen::MatrixXd& symbol,
                                     TracialAlgebra alg) {
  const int n = alg.n;
  if (symbol.rows() != n || symbol.cols() != n)
    throw ValidationError("schur symbol must be n x n");
  if ((symbol - symbol.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw ValidationError("schur symbol must be symmetric");
  if (symbol.minCoeff() < 0.0)
    throw ValidationError("schur symbol entries must be nonnegative");
  for (int i = 0; i < n; ++i)
    if (std::abs(symbol(i, i)) > 1e-14)
      throw ValidationError(
          "schur symbol must have zero diagonal (unital semigroup)");
  Matrix m = Matrix::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i * n + j, i * n + j) = symbol(i, j);
  return Superoperator(m, alg);
}

// Fourier multiplier on Z_m realized as the Herz-Schur multiplier with
// circulant symbol psi(g-h); on the circulant subalgebra it acts as
// lambda_g -> psi(g) lambda_g, so the eigenvalue set is {psi(g)}.
inline Superoperator fourier_generator(const std::vector<double>& psi,
                                       TracialAlgebra alg) {
  const int m = alg.n;
  if (static_cast<int>(psi.size()) != m)
    throw ValidationError("length function must have one value per group element");
  if (std::abs(psi[0]) > 1e-14)
    throw ValidationError("length function must vanish at the identity element");
  for (int g = 1; g < m; ++g)
    if (std::abs(psi[g] - psi[(m - g) % m]) > 1e-12)
      throw ValidationError("length function must be symmetric under inversion");
  Eigen::MatrixXd symbol(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) symbol(i, j) = psi[((i - j) % m + m) % m];
  // circulant symbol has zero diagonal by psi(0) = 0
  Matrix out = Matrix::Zero(m * m, m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out(i * m + j, i * m + j) = symbol(i, j);
  return Superoperator(out, alg);
}

inline Superoperator build_generator(const GeneratorSpec& spec) {
  TracialAlgebra alg(spec.n);
  Superoperator L;
  switch (spec.family) {
    case GeneratorFamily::Depolarizing:
      L = depolarizing_generator(alg);
      break;
    case GeneratorFamily::Schur:
      L = schur_generator(spec.schur_symbol, alg);
      break;
    case GeneratorFamily::FourierFiniteAbelianGroup:
      L = fourier_generator(spec.length_function, alg);
      break;
    case GeneratorFamily::Custom: {
      L = Superoperator(spec.custom_matrix, alg);
      if (!L.is_self_adjoint())
        throw ValidationError(
            "custom generator must be symmetric in the tau inner product");
      break;
    }
  }
  if (spec.shift < 0.0) throw ValidationError("shift must be nonnegative");
  if (spec.shift > 0.0)
    L.mat += spec.shift * Matrix::Identity(L.mat.rows(), L.mat.cols());
  // generators are positive: eigenvalues >= -1e-10
  Eigen::VectorXd ev = hermitian_eigenvalues(L.mat);
  if (ev.minCoeff() < -1e-10 * std::max(1.0, ev.cwiseAbs().maxCoeff()))
    throw ValidationError("generator must be positive semidefinite");
  return L;
}

inline Superoperator semigroup_at(const SpectralDecomposition& sd, double t) {
  if (t < 0.0) throw DomainError("semigroup time must be nonnegative");
  return apply_function(
      [t](double lam) -> Complex { return std::exp(-t * lam); }, sd);
}

inline Superoperator semigroup_at(const Superoperator& L, double t) {
  return semigroup_at(eigendecompose(L), t);
}

// Choi matrix [T(E_ij)]_{ij}; positive semidefinite iff T is completely
// positive.
inline Matrix choi_matrix(const Superoperator& T) {
  const int n = T.dim();
  Matrix c(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix e = Matrix::Zero(n, n);
      e(i, j) = 1.0;
      Matrix te = T.apply(e);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) c(i * n + k, j * n + l) = te(k, l);
    }
  return c;
}

// Markov conditions (i)-(iv) at each sample time; failures are data.
struct MarkovDiagnostics {
  struct PerTime {
    double t = 0.0;
    double inf_contraction_estimate = 0.0;  // (i)  |||T_t|||_{inf->inf}
    double trace_increase = 0.0;            // (ii) worst tau(Tx) - tau(x), x >= 0
    double choi_min_eigenvalue = 0.0;       // (iii) complete positivity
    double symmetry_defect = 0.0;           // (iv) worst |tau(T(y)*x) - tau(y*T(x))|
    double unitality_defect = 0.0;          // ||T(1) - 1||_inf, reported as data
    bool contraction_ok = false, trace_ok = false, positive_ok = false,
         symmetric_ok = false;
  };
  std::vector<PerTime> samples;
  bool all_passed = false;
};

inline MarkovDiagnostics markov_check(const Superoperator& L,
                                      const std::vector<double>& t_samples,
                                      int random_pairs = 16,
                                      std::uint64_t seed = 0x5eed) {
  if (!L.is_self_adjoint())
    throw SymmetryError("markov_check requires a self-adjoint generator");
  SpectralDecomposition sd = eigendecompose(L);
  MarkovDiagnostics diag;
  diag.samples.resize(t_samples.size());
  parallel_for(static_cast<int>(t_samples.size()), [&](int idx) {
    const double t = t_samples[idx];
    Superoperator T = semigroup_at(sd, t);
    auto& rec = diag.samples[idx];
    rec.t = t;
    rec.inf_contraction_estimate =
        operator_norm(T, std::numeric_limits<double>::infinity(),
                      std::numeric_limits<double>::infinity(), 24,
                      mix_seed(seed, idx))
            .value;
    rec.contraction_ok = rec.inf_contraction_estimate <= 1.0 + 1e-8;
    Rng rng(mix_seed(seed ^ 0x11, idx));
    double worst_trace = -std::numeric_limits<double>::infinity();
    double worst_sym = 0.0;
    for (int k = 0; k < random_pairs; ++k) {
      Matrix x = rng.positive(L.dim());
      double scale = std::max(1.0, std::abs(L.algebra.trace(x).real()));
      worst_trace =
          std::max(worst_trace, (L.algebra.trace(T.apply(x)).real() -
                                 L.algebra.trace(x).real()) /
                                    scale);
      Matrix y = rng.ginibre(L.dim(), L.dim());
      Matrix x2 = rng.ginibre(L.dim(), L.dim());
      Complex lhs = L.algebra.trace(T.apply(y).adjoint() * x2);
      Complex rhs = L.algebra.trace(y.adjoint() * T.apply(x2));
      worst_sym = std::max(
          worst_sym, std::abs(lhs - rhs) /
                         std::max(1.0, std::abs(lhs) + std::abs(rhs)));
    }
    rec.trace_increase = worst_trace;
    rec.trace_ok = worst_trace <= 1e-10;
    Matrix choi = choi_matrix(T);
    Eigen::VectorXd cev = hermitian_eigenvalues(choi);
    rec.choi_min_eigenvalue = cev.minCoeff();
    rec.positive_ok =
        rec.choi_min_eigenvalue >= -1e-10 * std::max(1.0, cev.cwiseAbs().maxCoeff());
    rec.symmetry_defect = worst_sym;
    rec.symmetric_ok = worst_sym <= 1e-10;
    rec.unitality_defect = lp_norm(
        Element(T.apply(L.algebra.identity()) - L.algebra.identity(),
                L.algebra),
        std::numeric_limits<double>::infinity());
  });
  diag.all_passed = true;
  for (const auto& rec : diag.samples)
    diag.all_passed = diag.all_passed && rec.contraction_ok && rec.trace_ok &&
                      rec.positive_ok && rec.symmetric_ok;
  return diag;
}

struct UltracontractivityProfile {
  std::vector<double> t_grid;
  std::vector<double> norms;        // |||T_t|||_{1->inf} lower-bound estimates
  std::vector<bool> certificates;   // true = exact (never for 1->inf), false = estimate
  // sup over the grid of phi(t) * norm(t); the constant A when a profile
  // weight phi is supplied
  double sup_weighted = 0.0;
  double argmax_t = 0.0;
};

inline std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i)
    g[i] = std::exp(std::log(lo) +
                    (std::log(hi) - std::log(lo)) * i / double(points - 1));
  return g;
}

inline std::vector<double> default_t_grid() { return log_grid(1e-3, 1e3, 61); }

inline UltracontractivityProfile ultracontractivity_profile(
    const Superoperator& L, const std::vector<double>& t_grid,
    const std::function<double(double)>& phi = nullptr, int restarts = 32,
    std::uint64_t seed = 0x5eed) {
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > 0.0))
      throw DomainError("profile grid must be positive");
    if (i > 0 && !(t_grid[i] > t_grid[i - 1]))
      throw DomainError("profile grid must be strictly increasing");
  }
  SpectralDecomposition sd = eigendecompose(L);
  UltracontractivityProfile prof;
  prof.t_grid = t_grid;
  prof.norms.resize(t_grid.size());
  prof.certificates.assign(t_grid.size(), false);
  parallel_for(static_cast<int>(t_grid.size()), [&](int i) {
    Superoperator T = semigroup_at(sd, t_grid[i]);
    prof.norms[i] = operator_norm(T, 1.0,
                                  std::numeric_limits<double>::infinity(),
                                  restarts, mix_seed(seed, i))
                        .value;
  });
  if (phi) {
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
      double w = phi(t_grid[i]) * prof.norms[i];
      if (w > prof.sup_weighted) {
        prof.sup_weighted = w;
        prof.argmax_t = t_grid[i];
      }
    }
  }
  return prof;
}

}  // namespace nclab
