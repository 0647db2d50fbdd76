#include "sfwit/witness.hpp"

#include <cmath>

namespace sfwit {

namespace {

double binom2(int n) { return 0.5 * n * (n - 1); }

Complex block_dot(const VecXc& bra, const ModeFactor& f, const VecXc& ket) {
  if (f.is_scalar) return f.scalar * bra.dot(ket);
  if (f.is_diagonal) return bra.dot(f.diag.cwiseProduct(ket));
  return bra.dot(f.mat * ket);
}

Complex block_trace(const ModeFactor& f,
                    const Eigen::Ref<const MatXc>& rho_block) {
  if (f.is_scalar) return f.scalar * rho_block.trace();
  if (f.is_diagonal) return f.diag.cwiseProduct(rho_block.diagonal()).sum();
  return f.mat.cwiseProduct(rho_block.transpose()).sum();
}

MatXc factor_matrix(const ModeFactor& f, long mode_dim) {
  if (f.is_scalar)
    return f.scalar * MatXc::Identity(mode_dim, mode_dim);
  if (f.is_diagonal) return MatXc(f.diag.asDiagonal());
  return f.mat;
}

}  // namespace

WitnessOperator::WitnessOperator(HilbertSpec spec, long spin_dim, long mode_dim,
                                 std::vector<WitnessTerm> terms,
                                 WitnessMeta meta)
    : spec_(std::move(spec)),
      spin_dim_(spin_dim),
      mode_dim_(mode_dim),
      terms_(std::move(terms)),
      meta_(meta) {
  if (spin_dim_ * mode_dim_ != spec_.total_dim())
    throw DimensionError("WitnessOperator: inconsistent factorization");
}

Complex WitnessOperator::sigma_expectation(const StateVector& psi) const {
  if (psi.dim() != dim())
    throw DimensionError("WitnessOperator: state dimension mismatch");
  Complex acc = 0.0;
  const VecXc& a = psi.amplitudes();
  for (const WitnessTerm& t : terms_) {
    Complex term = 0.0;
    for (long s = 0; s < spin_dim_; ++s)
      for (long sp = 0; sp < spin_dim_; ++sp) {
        Complex w = t.spin_op(s, sp);
        if (w == Complex(0.0)) continue;
        term += w * block_dot(a.segment(s * mode_dim_, mode_dim_), t.mode,
                              a.segment(sp * mode_dim_, mode_dim_));
      }
    acc += t.weight * term;
  }
  return acc;
}

Complex WitnessOperator::sigma_expectation(const DensityMatrix& rho) const {
  if (rho.dim() != dim())
    throw DimensionError("WitnessOperator: state dimension mismatch");
  Complex acc = 0.0;
  const MatXc& m = rho.matrix();
  for (const WitnessTerm& t : terms_) {
    Complex term = 0.0;
    for (long s = 0; s < spin_dim_; ++s)
      for (long sp = 0; sp < spin_dim_; ++sp) {
        Complex w = t.spin_op(s, sp);
        if (w == Complex(0.0)) continue;
        term += w * block_trace(t.mode, m.block(sp * mode_dim_, s * mode_dim_,
                                                mode_dim_, mode_dim_));
      }
    acc += t.weight * term;
  }
  return acc;
}

namespace {
double one_minus(Complex sigma) {
  if (std::abs(sigma.imag()) > tol::imag_residue)
    throw InvalidStateError("witness expectation: imaginary residue " +
                            std::to_string(sigma.imag()));
  return 1.0 - sigma.real();
}
}  // namespace

double WitnessOperator::expectation(const StateVector& psi) const {
  return one_minus(sigma_expectation(psi));
}

double WitnessOperator::expectation(const DensityMatrix& rho) const {
  return one_minus(sigma_expectation(rho));
}

double WitnessOperator::expectation_product(const DensityMatrix& spin_rho,
                                            const MatXc& mode_rho) const {
  if (spin_rho.dim() != spin_dim_ || mode_rho.rows() != mode_dim_)
    throw DimensionError("WitnessOperator: product-state dimension mismatch");
  Complex acc = 0.0;
  for (const WitnessTerm& t : terms_) {
    Complex spin_part = 0.0;
    for (long s = 0; s < spin_dim_; ++s)
      for (long sp = 0; sp < spin_dim_; ++sp) {
        Complex w = t.spin_op(s, sp);
        if (w != Complex(0.0)) spin_part += w * spin_rho.matrix()(sp, s);
      }
    acc += t.weight * spin_part * block_trace(t.mode, mode_rho);
  }
  return one_minus(acc);
}

MatXc WitnessOperator::dense(long max_dim) const {
  if (dim() > max_dim)
    throw DimensionError("WitnessOperator::dense: dimension " +
                         std::to_string(dim()) + " above materialization cap");
  MatXc w = MatXc::Identity(dim(), dim());
  for (const WitnessTerm& t : terms_)
    w -= t.weight * kron(t.spin_op, factor_matrix(t.mode, mode_dim_));
  return w;
}

// ---------------------------------------------------------------------------

WitnessOperator witness_classical(double q, const std::vector<double>& positions,
                                  const WitnessCoefficients& c, int n_spins) {
  if (n_spins < 2) throw DimensionError("witness_classical: need >= 2 spins");
  if (static_cast<int>(positions.size()) != n_spins)
    throw DimensionError("witness_classical: positions length != N");
  std::vector<int> dims(n_spins, 2);
  HilbertSpec spec(dims);
  double b = binom2(n_spins);
  std::vector<WitnessTerm> terms;
  const double cs[3] = {c.cx, c.cy, c.cz};
  const PauliAxis axes[3] = {PauliAxis::x, PauliAxis::y, PauliAxis::z};
  for (int i = 0; i < n_spins; ++i)
    for (int j = i + 1; j < n_spins; ++j)
      for (int a = 0; a < 3; ++a) {
        if (cs[a] == 0.0) continue;
        MatXc op = embed(pauli(axes[a]), i, spec) * embed(pauli(axes[a]), j, spec);
        for (double sgn : {1.0, -1.0}) {
          WitnessTerm t;
          t.spin_op = op;
          t.mode.is_scalar = true;
          t.mode.scalar = 1.0;
          t.weight = 0.5 * cs[a] / b *
                     std::exp(Complex(0.0, sgn * q * (positions[j] - positions[i])));
          terms.push_back(std::move(t));
        }
      }
  WitnessMeta meta{WitnessFlavor::classical, q, n_spins, c};
  return WitnessOperator(spec, spec.total_dim(), 1, std::move(terms), meta);
}

WitnessOperator witness_gaussian(double q,
                                 const std::vector<GaussianWavepacket>& packets,
                                 const WitnessCoefficients& c,
                                 const PositionGrid& grid) {
  if (packets.size() != 2)
    throw DimensionError("witness_gaussian: only the two-particle case is built");
  if (q != 0.0 && grid.step() > M_PI / (4.0 * std::abs(q)))
    throw GridResolutionError("witness_gaussian: grid does not resolve 2 pi / q");
  HilbertSpec spec({2, 2, grid.n, grid.n});
  long npos = long(grid.n) * grid.n;
  std::vector<WitnessTerm> terms;
  const double cs[3] = {c.cx, c.cy, c.cz};
  const PauliAxis axes[3] = {PauliAxis::x, PauliAxis::y, PauliAxis::z};
  for (double sgn : {1.0, -1.0}) {
    VecXc phase(npos);
    for (int i = 0; i < grid.n; ++i)
      for (int j = 0; j < grid.n; ++j)
        phase(long(i) * grid.n + j) =
            std::exp(Complex(0.0, sgn * q * (grid.point(i) - grid.point(j))));
    for (int a = 0; a < 3; ++a) {
      if (cs[a] == 0.0) continue;
      WitnessTerm t;
      t.spin_op = kron(pauli(axes[a]), pauli(axes[a]));
      t.mode.is_scalar = false;
      t.mode.is_diagonal = true;
      t.mode.diag = phase;
      t.weight = 0.5 * cs[a];  // B(2,2) = 1
      terms.push_back(std::move(t));
    }
  }
  WitnessMeta meta{WitnessFlavor::gaussian, q, 2, c};
  return WitnessOperator(spec, 4, npos, std::move(terms), meta);
}

namespace {

WitnessOperator assemble_bc(double qprime, int n_spins,
                            const std::function<std::vector<double>(int, int)>&
                                pair_phi,
                            int n_sel_modes, const FockSpace& space,
                            const WitnessCoefficients& c, GuardPolicy policy) {
  std::vector<int> dims(n_spins, 2);
  HilbertSpec spin_spec(dims);
  for (int k = 0; k < n_sel_modes; ++k) dims.push_back(space.dim());
  HilbertSpec spec(dims);
  long mode_dim = 1;
  for (int k = 0; k < n_sel_modes; ++k) mode_dim *= space.dim();

  double b = binom2(n_spins);
  const double cs[3] = {c.cx, c.cy, c.cz};
  const PauliAxis axes[3] = {PauliAxis::x, PauliAxis::y, PauliAxis::z};
  std::vector<WitnessTerm> terms;
  for (int n = 0; n < n_spins; ++n)
    for (int m = n + 1; m < n_spins; ++m) {
      std::vector<double> phis = pair_phi(n, m);
      if (static_cast<int>(phis.size()) != n_sel_modes)
        throw DimensionError("witness_bc: phi vector length != mode count");
      for (double sgn : {1.0, -1.0}) {
        MatXc mode_op = MatXc::Identity(1, 1);
        for (double ph : phis)
          mode_op = kron(mode_op,
                         displacement(Complex(0.0, sgn * qprime * ph), space,
                                      policy));
        // paper convention: ion labels are 1-based, n - m = -(m - n)
        Complex phase = std::exp(Complex(0.0, sgn * qprime * double(n - m)));
        for (int a = 0; a < 3; ++a) {
          if (cs[a] == 0.0) continue;
          WitnessTerm t;
          t.spin_op = embed(pauli(axes[a]), n, spin_spec) *
                      embed(pauli(axes[a]), m, spin_spec);
          t.mode.is_scalar = false;
          t.mode.mat = mode_op;
          t.weight = 0.5 * cs[a] / b * phase;
          terms.push_back(std::move(t));
        }
      }
    }
  WitnessMeta meta{WitnessFlavor::ion_chain, qprime, n_spins, c};
  return WitnessOperator(spec, spin_spec.total_dim(), mode_dim,
                         std::move(terms), meta);
}

}  // namespace

WitnessOperator witness_bc(double qprime, const ModeDecomposition& decomp,
                           const ChainConfig& config,
                           const std::vector<int>& mode_indices,
                           const FockSpace& space, const WitnessCoefficients& c,
                           GuardPolicy policy) {
  for (int k : mode_indices)
    if (k < 0 || k >= decomp.n_modes())
      throw DimensionError("witness_bc: mode index out of range");
  auto pair_phi = [&](int n, int m) {
    PhiVector full = phi(decomp, config, n, m);
    std::vector<double> sel;
    for (int k : mode_indices) sel.push_back(full.values[k]);
    return sel;
  };
  return assemble_bc(qprime, config.n_ions, pair_phi,
                     static_cast<int>(mode_indices.size()), space, c, policy);
}

WitnessOperator witness_bc_single_mode(double qprime, double eta,
                                       const FockSpace& space,
                                       const WitnessCoefficients& c,
                                       GuardPolicy policy) {
  auto pair_phi = [eta](int, int) { return std::vector<double>{eta}; };
  return assemble_bc(qprime, 2, pair_phi, 1, space, c, policy);
}

double expect_via_charfn(double qprime, const DensityMatrix& spin_state,
                         const std::vector<ModeState>& modes,
                         const std::function<std::vector<double>(int, int)>&
                             pair_phi,
                         const WitnessCoefficients& c, int n_spins,
                         GuardPolicy policy) {
  CorrelatorTable table = correlators(spin_state, n_spins);
  double b = binom2(n_spins);
  const double cs[3] = {c.cx, c.cy, c.cz};
  const PauliAxis axes[3] = {PauliAxis::x, PauliAxis::y, PauliAxis::z};
  double sigma = 0.0;
  for (int n = 0; n < n_spins; ++n)
    for (int m = n + 1; m < n_spins; ++m) {
      std::vector<double> phis = pair_phi(n, m);
      if (phis.size() != modes.size())
        throw DimensionError("expect_via_charfn: phi length != mode count");
      Complex cw = 1.0;
      for (size_t k = 0; k < modes.size(); ++k)
        cw *= char_fn(modes[k], Complex(0.0, qprime * phis[k]), policy);
      double arg = qprime * double(n - m);
      double re_part = std::cos(arg) * cw.real() - std::sin(arg) * cw.imag();
      double spin_sum = 0.0;
      for (int a = 0; a < 3; ++a)
        spin_sum += cs[a] * table.at(n, m, axes[a]);
      sigma += spin_sum * re_part / b;
    }
  return 1.0 - sigma;
}

double expect_via_charfn_single_mode(double qprime,
                                     const DensityMatrix& spin_state,
                                     const ModeState& mode, double eta,
                                     const WitnessCoefficients& c,
                                     GuardPolicy policy) {
  auto pair_phi = [eta](int, int) { return std::vector<double>{eta}; };
  return expect_via_charfn(qprime, spin_state, {mode}, pair_phi, c, 2, policy);
}

// ---------------------------------------------------------------------------

double closed_form_thermal(double qprime, double eta, double delta,
                           const WitnessCoefficients& c) {
  if (delta <= 0 || eta <= 0)
    throw InvalidStateError("closed_form_thermal: eta, delta must be > 0");
  double damp = std::exp(-0.5 * qprime * qprime * eta * eta /
                         std::tanh(0.5 * delta));
  return 1.0 - damp * (c.cx + c.cy - c.cz) * std::cos(qprime);
}

double closed_form_hybrid1(double qprime, double eta, Complex alpha,
                           const WitnessCoefficients& c) {
  double g = std::exp(-0.5 * qprime * qprime * eta * eta);
  double bracket =
      c.cz * std::cos(2.0 * qprime * eta * alpha.real()) -
      (c.cx + c.cy) *
          std::exp(-2.0 * std::norm(alpha) - 2.0 * qprime * eta * alpha.imag());
  return 1.0 + g * bracket * std::cos(qprime);
}

double closed_form_hybrid2(double qprime, double eta,
                           const WitnessCoefficients& c) {
  double qe = qprime * eta;
  double g = std::exp(-0.5 * qe * qe);
  return 1.0 + 0.5 * g *
                   (c.cz * (2.0 - qe * qe) * std::cos(qprime) -
                    2.0 * (c.cx + c.cy) * qe * std::sin(qprime));
}

double closed_form_hybrid3(double qprime, double eta, double p,
                           const WitnessCoefficients& c) {
  if (p < 0.0 || p > 1.0)
    throw InvalidStateError("closed_form_hybrid3: p must be in [0, 1]");
  double qe = qprime * eta;
  double g = std::exp(-0.5 * qe * qe);
  double bracket = c.cz * (p * (2.0 - qe * qe) + qe * qe - 1.0) -
                   p * (c.cx + c.cy);
  return 1.0 + g * bracket * std::cos(qprime);
}

// ---------------------------------------------------------------------------

const DensityMatrix& HybridScenarioState::density() const {
  if (!rho) throw InvalidStateError("HybridScenarioState: no density stored");
  return *rho;
}

DensityMatrix HybridScenarioState::spin_reduced() const {
  if (pure) return partial_trace(*pure, {0, 1});
  return partial_trace(density(), {0, 1});
}

namespace {
HybridScenarioState make_pure(std::string tag, HilbertSpec spec, VecXc amps) {
  HybridScenarioState st;
  st.tag = std::move(tag);
  st.pure = StateVector::normalized(std::move(spec), std::move(amps));
  st.rho = DensityMatrix::from_pure(*st.pure);
  return st;
}
}  // namespace

HybridScenarioState hybrid_phi1(Complex alpha, const FockSpace& space,
                                GuardPolicy policy) {
  int d = space.dim();
  VecXc up_dn = coherent_amplitudes(alpha, space, policy);
  VecXc dn_up = coherent_amplitudes(-alpha, space, policy);
  HilbertSpec spec({2, 2, d});
  VecXc amps = VecXc::Zero(spec.total_dim());
  amps.segment(1 * d, d) = up_dn;
  amps.segment(2 * d, d) = dn_up;
  return make_pure("phi1", std::move(spec), std::move(amps));
}

HybridScenarioState hybrid_phi2(const FockSpace& space) {
  int d = space.dim();
  HilbertSpec spec({2, 2, d});
  VecXc amps = VecXc::Zero(spec.total_dim());
  amps(1 * d + 0) = 1.0;  // |up,down, n=0>
  amps(2 * d + 1) = 1.0;  // |down,up, n=1>
  return make_pure("phi2", std::move(spec), std::move(amps));
}

HybridScenarioState hybrid_phi3(double p, const FockSpace& space) {
  if (p < 0.0 || p > 1.0)
    throw InvalidStateError("hybrid_phi3: p must be in [0, 1]");
  int d = space.dim();
  HilbertSpec spec({2, 2, d});
  StateVector psi_plus = canonical_state(TwoSpinState::psi_plus);
  MatXc spin_plus = psi_plus.amplitudes() * psi_plus.amplitudes().adjoint();
  MatXc spin_dd = MatXc::Zero(4, 4);
  spin_dd(3, 3) = 1.0;
  MatXc m0 = MatXc::Zero(d, d), m1 = MatXc::Zero(d, d);
  m0(0, 0) = 1.0;
  m1(1, 1) = 1.0;
  MatXc rho = p * kron(spin_plus, m0) + (1.0 - p) * kron(spin_dd, m1);
  HybridScenarioState st;
  st.tag = "phi3";
  st.rho = DensityMatrix(std::move(spec), std::move(rho));
  return st;
}

WitnessCoefficients optimal_coefficients(double tx, double ty, double tz) {
  auto pick = [](double t) { return t >= 0.0 ? 1.0 : -1.0; };
  return {pick(tx), pick(ty), pick(tz)};
}

}  // namespace sfwit
