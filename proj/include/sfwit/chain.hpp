#pragma once

#include <string>
#include <vector>

#include "sfwit/common.hpp"

namespace sfwit {

/// Uniform harmonic chain: on-site trap stiffness plus Coulomb-derived
/// pairwise springs k_c / |n-m|^3 (k_c is the nearest-neighbour spring
/// constant of the quadratic expansion around the uniform spacing).
struct ChainConfig {
  int n_ions;
  double mass = 1.0;
  double spacing_a = 1.0;
  double trap_k = 1.0;     // on-site stiffness
  double coulomb_k = 0.1;  // nearest-neighbour spring constant
  double hbar = 1.0;       // rescaled-unit prefactor in phi

  ChainConfig(int n, double m = 1.0, double a = 1.0, double k0 = 1.0,
              double kc = 0.1, double hb = 1.0)
      : n_ions(n), mass(m), spacing_a(a), trap_k(k0), coulomb_k(kc), hbar(hb) {
    if (n < 2) throw InvalidStateError("ChainConfig: need at least 2 ions");
    if (m <= 0 || a <= 0 || k0 <= 0 || kc < 0 || hb <= 0)
      throw InvalidStateError("ChainConfig: physical parameters must be > 0");
  }
};

enum class ModeParity { even, odd };

/// Result of diagonalizing the dynamical matrix: orthogonal mode matrix R
/// (rows = ions, columns = modes), frequencies sorted ascending, and the
/// parity of each mode vector under chain reflection.
struct ModeDecomposition {
  MatXd r;
  VecXd omegas;
  std::vector<ModeParity> parity;

  int n_modes() const { return static_cast<int>(omegas.size()); }
};

ModeDecomposition decompose(const ChainConfig& config);

/// Per-mode coefficients phi_k(n, m) = sqrt(hbar / (N m omega_k)) *
/// (R(n,k) - R(m,k)). Antisymmetric under n <-> m.
struct PhiVector {
  std::vector<double> values;  // one per mode, same order as omegas
};

PhiVector phi(const ModeDecomposition& decomp, const ChainConfig& config,
              int n, int m);

/// Dimensionless displacement-scale parameter. The formula is evaluated
/// verbatim in whatever unit system the caller declares; the figures of the
/// reference scenarios simply set eta directly.
struct EtaParameter {
  double eta;
  std::string unit_system;
};

EtaParameter eta_from_physical(double spacing_a, double mass, double charge,
                               double hbar = 1.0,
                               const std::string& unit_system = "rescaled");

}  // namespace sfwit
