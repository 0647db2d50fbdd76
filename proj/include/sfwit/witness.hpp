#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sfwit/chain.hpp"
#include "sfwit/coefficients.hpp"
#include "sfwit/fock.hpp"
#include "sfwit/gaussian.hpp"
#include "sfwit/spin.hpp"
#include "sfwit/tensor.hpp"

namespace sfwit {

enum class WitnessFlavor { classical, gaussian, ion_chain };

/// Non-spin factor of one structure-factor term: either a dense operator on
/// the mode space or a diagonal phase over a position grid.
struct ModeFactor {
  bool is_scalar = true;
  bool is_diagonal = false;
  Complex scalar{1.0, 0.0};
  MatXc mat;    // dense mode operator (ion-chain flavor)
  VecXc diag;   // diagonal phase over the joint position grid (gaussian)
};

/// One term of the symmetrized structure-factor sum, weight included
/// (c_alpha / B(N,2), the 1/2 of the +-q symmetrization, and any scalar
/// phase are folded into `weight` and `mode`).
struct WitnessTerm {
  MatXc spin_op;
  ModeFactor mode;
  Complex weight;
};

struct WitnessMeta {
  WitnessFlavor flavor;
  double q = 0.0;
  int n_spins = 2;
  WitnessCoefficients c = WitnessCoefficients::all_minus();
};

/// W(q) = 1 - Sigma(q), stored in structured form so that large composite
/// spaces (position grids, hot thermal modes) never require materializing
/// the full matrix. dense() is available for desk-scale dimensions.
class WitnessOperator {
 public:
  WitnessOperator(HilbertSpec spec, long spin_dim, long mode_dim,
                  std::vector<WitnessTerm> terms, WitnessMeta meta);

  double expectation(const StateVector& psi) const;
  double expectation(const DensityMatrix& rho) const;
  /// Expectation on sigma_spins (x) rho_mode without building the composite
  /// density matrix. Blocks are contracted against the actual term matrices.
  double expectation_product(const DensityMatrix& spin_rho,
                             const MatXc& mode_rho) const;

  MatXc dense(long max_dim = 8192) const;

  const HilbertSpec& spec() const { return spec_; }
  const WitnessMeta& meta() const { return meta_; }
  const std::vector<WitnessTerm>& terms() const { return terms_; }
  long dim() const { return spec_.total_dim(); }

 private:
  Complex sigma_expectation(const StateVector& psi) const;
  Complex sigma_expectation(const DensityMatrix& rho) const;

  HilbertSpec spec_;
  long spin_dim_, mode_dim_;
  std::vector<WitnessTerm> terms_;
  WitnessMeta meta_;
};

/// Classical-position witness: spins only, scalar phases e^{iq(r_j - r_i)}.
WitnessOperator witness_classical(double q, const std::vector<double>& positions,
                                  const WitnessCoefficients& c, int n_spins);

/// Quantized-position witness on a discretized double-well pair (N = 2).
WitnessOperator witness_gaussian(double q,
                                 const std::vector<GaussianWavepacket>& packets,
                                 const WitnessCoefficients& c,
                                 const PositionGrid& grid);

/// Trapped-ion witness on 2^N (x) prod_k (n_max+1), assembled from the
/// normal-mode displacement factorization.
WitnessOperator witness_bc(double qprime, const ModeDecomposition& decomp,
                           const ChainConfig& config,
                           const std::vector<int>& mode_indices,
                           const FockSpace& space, const WitnessCoefficients& c,
                           GuardPolicy policy = GuardPolicy::relaxed);

/// Two ions coupled to one collective mode with displacement scale eta:
/// pair factor e^{iq'(n-m)} D(i q' eta).
WitnessOperator witness_bc_single_mode(double qprime, double eta,
                                       const FockSpace& space,
                                       const WitnessCoefficients& c,
                                       GuardPolicy policy = GuardPolicy::relaxed);

/// Characteristic-function shortcut, valid on factorized spin (x) mode
/// states: cos/sin split of Re{ e^{iq'(n-m)} <D> }.
double expect_via_charfn(double qprime, const DensityMatrix& spin_state,
                         const std::vector<ModeState>& modes,
                         const std::function<std::vector<double>(int, int)>&
                             pair_phi,
                         const WitnessCoefficients& c, int n_spins,
                         GuardPolicy policy = GuardPolicy::relaxed);

double expect_via_charfn_single_mode(double qprime,
                                     const DensityMatrix& spin_state,
                                     const ModeState& mode, double eta,
                                     const WitnessCoefficients& c,
                                     GuardPolicy policy = GuardPolicy::relaxed);

/// <W_BC> on Psi+ (x) thermal(Delta):
/// 1 - exp(-q'^2 eta^2 coth(Delta/2) / 2) (c_x + c_y - c_z) cos q'.
double closed_form_thermal(double qprime, double eta, double delta,
                           const WitnessCoefficients& c);

/// The three hybrid closed forms. For state 1 the published line is odd in
/// q' when alpha has an imaginary part; it is evaluated verbatim here and
/// the full-operator route is authoritative in that regime.
double closed_form_hybrid1(double qprime, double eta, Complex alpha,
                           const WitnessCoefficients& c);
double closed_form_hybrid2(double qprime, double eta,
                           const WitnessCoefficients& c);
double closed_form_hybrid3(double qprime, double eta, double p,
                           const WitnessCoefficients& c);

/// Composite 2-spin (x) 1-mode scenario states.
struct HybridScenarioState {
  std::string tag;
  std::optional<StateVector> pure;
  std::optional<DensityMatrix> rho;

  const DensityMatrix& density() const;
  DensityMatrix spin_reduced() const;
};

HybridScenarioState hybrid_phi1(Complex alpha, const FockSpace& space,
                                GuardPolicy policy = GuardPolicy::strict);
HybridScenarioState hybrid_phi2(const FockSpace& space);
HybridScenarioState hybrid_phi3(double p, const FockSpace& space);

}  // namespace sfwit
