#include <doctest.h>

#include "sfwit/witness.hpp"

using namespace sfwit;

TEST_CASE("classical witness on pinned positions") {
  WitnessCoefficients c = WitnessCoefficients::all_minus();
  StateVector singlet = canonical_state(TwoSpinState::singlet);

  WitnessOperator w0 = witness_classical(0.0, {0.5, -0.5}, c, 2);
  CHECK(w0.expectation(singlet) == doctest::Approx(-2.0).epsilon(1e-12));

  // q (r1 - r2) = pi/2: 1 - 3 cos(pi/2) ... the cosine term vanishes
  WitnessOperator wq = witness_classical(M_PI / 2.0, {1.0, 0.0}, c, 2);
  CHECK(wq.expectation(singlet) == doctest::Approx(1.0).epsilon(1e-12));

  // zero coefficients give the identity
  WitnessOperator wid =
      witness_classical(1.3, {0.0, 1.0}, WitnessCoefficients(0, 0, 0), 2);
  CHECK(wid.dense().isApprox(MatXc::Identity(4, 4)));
}

TEST_CASE("quantized-position witness matches the closed forms") {
  WitnessCoefficients c = WitnessCoefficients::all_minus();
  double y = 1.2;
  for (double x : {-3.0, -1.0, 0.0, 0.5, 2.0}) {
    GaussianScenario sc(x, y, c);
    auto [pa, pb] = scenario_packets(sc);
    PositionGrid grid = default_grid(pa, pb, 1024);
    double q = x / y;
    WitnessOperator w = witness_gaussian(q, {pa, pb}, c, grid);
    for (int id : {2, 3}) {
      StateVector psi = discretized_state(id, sc, grid);
      CHECK(w.expectation(psi) ==
            doctest::Approx(closed_form_w(id, sc)).epsilon(1e-6));
    }
  }
}

TEST_CASE("biseparable bound for the quantized-position witness") {
  WitnessCoefficients c(0.4, -0.8, 0.9);
  PositionGrid grid(-6.0, 6.0, 64);
  GaussianWavepacket pa(-0.6, 1.0), pb(0.6, 1.0);
  WitnessOperator w = witness_gaussian(1.1, {pa, pb}, c, grid);

  // |up,up> (x) symmetric product of the two packets
  VecXc ga = discretized_packet(pa, grid), gb = discretized_packet(pb, grid);
  VecXc pos = kron(ga, gb).col(0);
  VecXc amps = VecXc::Zero(4 * grid.n * grid.n);
  amps.segment(0, grid.n * grid.n) = pos;  // spin index 0
  StateVector psi(HilbertSpec({2, 2, grid.n, grid.n}), amps);
  CHECK(w.expectation(psi) >= -1e-8);
}

TEST_CASE("trapped-ion witness matches the thermal closed form") {
  WitnessCoefficients c = WitnessCoefficients::xy_plus_z_minus();
  FockSpace sp(60);
  DensityMatrix psi_plus =
      DensityMatrix::from_pure(canonical_state(TwoSpinState::psi_plus));
  for (double delta : {100.0, 1.0}) {
    ModeState th = thermal_state(delta, sp);
    for (double q : {-2.0, -0.7, 0.0, 1.3, 3.0}) {
      WitnessOperator w = witness_bc_single_mode(q, 1.0, sp, c);
      double expect = w.expectation_product(psi_plus, th.rho());
      CHECK(expect ==
            doctest::Approx(closed_form_thermal(q, 1.0, delta, c))
                .epsilon(1e-6));
    }
  }
}

TEST_CASE("thermal closed form properties") {
  WitnessCoefficients c = WitnessCoefficients::xy_plus_z_minus();
  for (double delta : {100.0, 1.0, 0.01})
    CHECK(closed_form_thermal(0.0, 0.7, delta, c) == doctest::Approx(-2.0));
  // Delta -> infinity limit: coth -> 1
  double q = 1.1, eta = 1.0;
  double limit = 1.0 - std::exp(-0.5 * q * q * eta * eta) *
                           (c.cx + c.cy - c.cz) * std::cos(q);
  CHECK(closed_form_thermal(q, eta, 100.0, c) ==
        doctest::Approx(limit).epsilon(1e-4));
}

TEST_CASE("characteristic-function evaluation matches the full operator") {
  WitnessCoefficients c = WitnessCoefficients::xy_plus_z_minus();
  FockSpace sp(40);
  DensityMatrix psi_plus =
      DensityMatrix::from_pure(canonical_state(TwoSpinState::psi_plus));
  ModeState th = thermal_state(1.0, sp);
  for (double q : {-1.5, 0.4, 1.0}) {
    double fast = expect_via_charfn_single_mode(q, psi_plus, th, 1.0, c);
    WitnessOperator w = witness_bc_single_mode(q, 1.0, sp, c);
    CHECK(fast ==
          doctest::Approx(w.expectation_product(psi_plus, th.rho()))
              .epsilon(1e-10));
  }

  // spin product state: the bound holds whatever the mode state is
  VecXc up_up = VecXc::Zero(4);
  up_up(0) = 1.0;
  DensityMatrix prod =
      DensityMatrix::from_pure(StateVector(HilbertSpec({2, 2}), up_up));
  for (double q : {-2.0, 0.9})
    CHECK(expect_via_charfn_single_mode(q, prod, th, 1.0, c) >= -1e-10);
}

TEST_CASE("hybrid scenario states") {
  FockSpace sp(60);
  WitnessCoefficients c = WitnessCoefficients::xy_plus_z_minus();

  // phi2 amplitudes: 1/sqrt(2) on (up-down, n=0) and (down-up, n=1)
  HybridScenarioState phi2 = hybrid_phi2(sp);
  REQUIRE(phi2.pure.has_value());
  const VecXc& amps = phi2.pure->amplitudes();
  double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(amps(1 * sp.dim() + 0) - Complex(r)) < 1e-12);
  CHECK(std::abs(amps(2 * sp.dim() + 1) - Complex(r)) < 1e-12);
  CHECK(amps.norm() == doctest::Approx(1.0));

  // phi1 with alpha = 0 is a spin-motion product state
  HybridScenarioState phi1 = hybrid_phi1(Complex(0.0), sp);
  WitnessOperator w0 = witness_bc_single_mode(0.0, 1.0, sp, c);
  CHECK(w0.expectation(*phi1.pure) == doctest::Approx(-2.0).epsilon(1e-10));

  // phi2 at q' = 0 evaluates to 1 + cz = 0
  CHECK(w0.expectation(*phi2.pure) == doctest::Approx(0.0).epsilon(1e-10));

  // phi3: mixed state with unit trace and separable spin marginal
  HybridScenarioState phi3 = hybrid_phi3(0.75, sp);
  CHECK(phi3.density().matrix().trace().real() == doctest::Approx(1.0));
  CHECK(concurrence(phi2.spin_reduced()) == doctest::Approx(0.0));
}

TEST_CASE("hybrid closed forms") {
  WitnessCoefficients c = WitnessCoefficients::xy_plus_z_minus();
  CHECK(closed_form_hybrid1(0.0, 1.0, Complex(0.0), c) ==
        doctest::Approx(-2.0));
  for (double p : {0.0, 0.4, 0.5, 1.0})
    CHECK(closed_form_hybrid3(0.0, 1.0, p, c) ==
          doctest::Approx(2.0 - 4.0 * p));
  CHECK(closed_form_hybrid2(0.0, 1.0, c) == doctest::Approx(0.0));
}

TEST_CASE("multi-mode assembly agrees with the single-mode shortcut") {
  // two-ion chain whose center-of-mass mode decouples from the pair phase
  ChainConfig cfg(2, 1.0, 1.0, 1.0, 0.3);
  ModeDecomposition dec = decompose(cfg);
  FockSpace sp(24);
  WitnessCoefficients c = WitnessCoefficients::xy_plus_z_minus();
  double qp = 0.8;
  WitnessOperator w_full = witness_bc(qp, dec, cfg, {0, 1}, sp, c);

  double eta_stretch = std::abs(phi(dec, cfg, 0, 1).values[1]);
  WitnessOperator w_single = witness_bc_single_mode(qp, eta_stretch, sp, c);

  DensityMatrix psi_plus =
      DensityMatrix::from_pure(canonical_state(TwoSpinState::psi_plus));
  ModeState th = thermal_state(1.0, sp);
  MatXc two_mode_rho = kron(th.rho(), th.rho());
  double full = w_full.expectation_product(psi_plus, two_mode_rho);
  double single = w_single.expectation_product(psi_plus, th.rho());
  CHECK(full == doctest::Approx(single).epsilon(1e-8));
}
