#include "sfwit/chain.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace sfwit {

namespace {

MatXd dynamical_matrix(const ChainConfig& c) {
  int n = c.n_ions;
  MatXd k = MatXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    k(i, i) = c.trap_k;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      double spring = c.coulomb_k / std::pow(std::abs(double(i - j)), 3.0);
      k(i, i) += spring;
      k(i, j) -= spring;
    }
  }
  return k / c.mass;
}

}  // namespace

ModeDecomposition decompose(const ChainConfig& config) {
  MatXd d = dynamical_matrix(config);
  Eigen::SelfAdjointEigenSolver<MatXd> es(d);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw UnstableConfigurationError(
        "decompose: dynamical matrix is not positive definite");

  ModeDecomposition out;
  int n = config.n_ions;
  out.r = es.eigenvectors();  // eigenvalues already ascending
  out.omegas = es.eigenvalues().cwiseSqrt();

  // Fix the sign convention (first non-negligible entry positive) and label
  // the parity by the mode vector's symmetry under index reversal.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (std::abs(out.r(i, k)) < 1e-12) continue;
      if (out.r(i, k) < 0) out.r.col(k) *= -1.0;
      break;
    }

    double sym = 0.0, asym = 0.0;
    for (int i = 0; i < n; ++i) {
      sym += std::pow(out.r(i, k) - out.r(n - 1 - i, k), 2);
      asym += std::pow(out.r(i, k) + out.r(n - 1 - i, k), 2);
    }
    out.parity.push_back(sym <= asym ? ModeParity::even : ModeParity::odd);
  }
  return out;
}

PhiVector phi(const ModeDecomposition& decomp, const ChainConfig& config,
              int n, int m) {
  if (n == m) throw InvalidStateError("phi: degenerate pair n == m");
  if (n < 0 || m < 0 || n >= config.n_ions || m >= config.n_ions)
    throw DimensionError("phi: ion index out of range");
  PhiVector out;
  for (int k = 0; k < decomp.n_modes(); ++k) {
    double pref = std::sqrt(config.hbar /
                            (config.n_ions * config.mass * decomp.omegas(k)));
    out.values.push_back(pref * (decomp.r(n, k) - decomp.r(m, k)));
  }
  return out;
}

EtaParameter eta_from_physical(double spacing_a, double mass, double charge,
                               double hbar, const std::string& unit_system) {
  if (spacing_a <= 0 || mass <= 0 || charge <= 0 || hbar <= 0)
    throw InvalidStateError("eta_from_physical: inputs must be > 0");
  double eta = std::pow(spacing_a, -0.25) *
               std::sqrt(hbar / (charge * std::sqrt(8.0 * mass)));
  return {eta, unit_system};
}

}  // namespace sfwit
