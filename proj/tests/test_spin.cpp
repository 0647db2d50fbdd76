#include <doctest.h>

#include "sfwit/coefficients.hpp"
#include "sfwit/spin.hpp"

using namespace sfwit;

TEST_CASE("Pauli algebra") {
  VecXc up = VecXc::Zero(2);
  up(0) = 1.0;
  CHECK((pauli(PauliAxis::z) * up - up).norm() < 1e-15);
  CHECK((pauli(PauliAxis::x) * pauli(PauliAxis::x) - MatXc::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() < 1e-15);
  CHECK((pauli(PauliAxis::x) * pauli(PauliAxis::y) - kI * pauli(PauliAxis::z))
            .cwiseAbs()
            .maxCoeff() < 1e-15);
}

TEST_CASE("canonical two-spin states") {
  VecXc s = canonical_state(TwoSpinState::singlet).amplitudes();
  double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(s(0)) < 1e-15);
  CHECK(s(1).real() == doctest::Approx(r));
  CHECK(s(2).real() == doctest::Approx(-r));
  CHECK(std::abs(s(3)) < 1e-15);

  VecXc p = canonical_state(TwoSpinState::psi_plus).amplitudes();
  CHECK(p(1).real() == doctest::Approx(r));
  CHECK(p(2).real() == doctest::Approx(r));

  for (auto name : {"singlet", "psi_plus", "up_down", "down_up", "down_down"})
    CHECK(canonical_state(name).amplitudes().norm() == doctest::Approx(1.0));
}

TEST_CASE("pair correlators of the canonical states") {
  CorrelatorTable t = correlators(canonical_state(TwoSpinState::singlet), 2);
  CHECK(t.at(0, 1, PauliAxis::x) == doctest::Approx(-1.0));
  CHECK(t.at(0, 1, PauliAxis::y) == doctest::Approx(-1.0));
  CHECK(t.at(0, 1, PauliAxis::z) == doctest::Approx(-1.0));

  t = correlators(canonical_state(TwoSpinState::psi_plus), 2);
  CHECK(t.at(0, 1, PauliAxis::x) == doctest::Approx(1.0));
  CHECK(t.at(0, 1, PauliAxis::y) == doctest::Approx(1.0));
  CHECK(t.at(0, 1, PauliAxis::z) == doctest::Approx(-1.0));

  VecXc up_up = VecXc::Zero(4);
  up_up(0) = 1.0;
  t = correlators(StateVector(HilbertSpec({2, 2}), up_up), 2);
  CHECK(t.at(0, 1, PauliAxis::x) == doctest::Approx(0.0));
  CHECK(t.at(0, 1, PauliAxis::y) == doctest::Approx(0.0));
  CHECK(t.at(0, 1, PauliAxis::z) == doctest::Approx(1.0));
}

TEST_CASE("concurrence of reference states") {
  DensityMatrix singlet =
      DensityMatrix::from_pure(canonical_state(TwoSpinState::singlet));
  CHECK(concurrence(singlet) == doctest::Approx(1.0).epsilon(1e-10));

  // X-shaped reduced state of the delocalized double well at y = 2:
  // diag (0, 1/2, 1/2, 0) with off-diagonal -e^{-y^2/4}/2 = -e^{-1}/2
  double off = std::exp(-1.0);
  MatXc x_state = MatXc::Zero(4, 4);
  x_state(1, 1) = x_state(2, 2) = 0.5;
  x_state(1, 2) = x_state(2, 1) = -0.5 * off;
  CHECK(concurrence(DensityMatrix(HilbertSpec({2, 2}), x_state)) ==
        doctest::Approx(off).epsilon(1e-10));

  MatXc mixed = 0.25 * MatXc::Identity(4, 4);
  CHECK(concurrence(DensityMatrix(HilbertSpec({2, 2}), mixed)) ==
        doctest::Approx(0.0));
}

TEST_CASE("optimal coefficients from per-axis aggregates") {
  WitnessCoefficients c = optimal_coefficients(-1.0, -1.0, -1.0);
  CHECK(c.cx == -1.0);
  CHECK(c.cy == -1.0);
  CHECK(c.cz == -1.0);
  c = optimal_coefficients(1.0, 1.0, -1.0);
  CHECK(c.cx == 1.0);
  CHECK(c.cy == 1.0);
  CHECK(c.cz == -1.0);
  c = optimal_coefficients(0.0, 0.0, 0.0);  // ties resolve to +1
  CHECK(c.cx == 1.0);
  CHECK(c.cy == 1.0);
  CHECK(c.cz == 1.0);
}
