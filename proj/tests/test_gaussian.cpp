#include <doctest.h>

#include "sfwit/gaussian.hpp"
#include "sfwit/oracle.hpp"
#include "sfwit/tensor.hpp"

using namespace sfwit;

TEST_CASE("packet overlaps against quadrature") {
  GaussianWavepacket a(0.0, 1.0), same(0.0, 1.0);
  CHECK(overlap(a, same) == doctest::Approx(1.0));

  GaussianWavepacket b(2.0, 1.0);  // y = 2
  CHECK(overlap(a, b) == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
  CHECK(std::abs(overlap(a, b) - quad_overlap(a, b)) < 1e-10);

  GaussianWavepacket far(15.0, 1.0);
  CHECK(overlap(a, far) < 1e-12);
}

TEST_CASE("phase elements against quadrature") {
  GaussianWavepacket a(-1.0, 1.0), b(1.0, 1.0);
  CHECK(std::abs(phase_element(a, b, 0.0) - Complex(overlap(a, b))) < 1e-14);

  double q = 0.7;
  CHECK(std::abs(phase_element(a, a, q)) ==
        doctest::Approx(std::exp(-0.5 * q * q)).epsilon(1e-12));
  CHECK(std::abs(phase_element(a, b, q) - quad_phase_element(a, b, q)) <
        1e-10);

  // cross-term product is real: e^{-y^2/4} e^{-q^2 sigma^2}
  double y = 2.0;
  GaussianWavepacket pa(-y / 2, 1.0), pb(y / 2, 1.0);
  Complex cross = phase_element(pa, pb, q) * phase_element(pb, pa, -q);
  CHECK(std::abs(cross.imag()) < 1e-14);
  CHECK(cross.real() ==
        doctest::Approx(std::exp(-y * y / 4.0) * std::exp(-q * q))
            .epsilon(1e-12));
}

TEST_CASE("closed-form witness values at x = 0") {
  WitnessCoefficients c = WitnessCoefficients::all_minus();
  CHECK(closed_form_w(1, GaussianScenario(0.0, 1.0, c)) ==
        doctest::Approx(-2.0));
  CHECK(closed_form_w(2, GaussianScenario(0.0, 0.37, c)) ==
        doctest::Approx(-2.0));
  CHECK(closed_form_w(2, GaussianScenario(0.0, 7.0, c)) ==
        doctest::Approx(-2.0));
  CHECK(closed_form_w(3, GaussianScenario(0.0, 1.2, c)) ==
        doctest::Approx(-2.0 * std::exp(-0.36) - 0.0 + 1.0 - 1.0)
            .epsilon(1e-12));
  CHECK(closed_form_w(3, GaussianScenario(0.0, 1.2, c)) ==
        doctest::Approx(1.0 - 2.0 * std::exp(-0.36) - 1.0).epsilon(1e-12));
}

TEST_CASE("discretized states") {
  WitnessCoefficients c = WitnessCoefficients::all_minus();
  GaussianScenario sc(0.0, 1.2, c);
  auto [pa, pb] = scenario_packets(sc);
  PositionGrid grid = default_grid(pa, pb, 512);

  for (int id : {2, 3}) {
    StateVector psi = discretized_state(id, sc, grid);
    CHECK(psi.amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-10));
  }
  CHECK_THROWS_AS(discretized_state(1, sc, grid), InvalidStateError);

  // the non-entangling state factorizes: its position marginal is pure, so
  // (by the Schmidt decomposition) the spin marginal has purity 1 as well
  StateVector psi2 = discretized_state(2, sc, grid);
  DensityMatrix spin = partial_trace(psi2, {0, 1});
  double purity = (spin.matrix() * spin.matrix()).trace().real();
  CHECK(purity == doctest::Approx(1.0).epsilon(1e-8));

  // under-resolved grids are rejected
  CHECK_THROWS_AS(discretized_state(2, sc, PositionGrid(-8.0, 8.0, 16)),
                  GridResolutionError);
}

TEST_CASE("grid oracle matches the closed forms") {
  WitnessCoefficients c = WitnessCoefficients::all_minus();
  for (double x : {-2.0, -0.5, 0.0, 1.0, 3.0}) {
    CHECK(gaussian_grid_expectation(1, x, 1.2, c, 1024) ==
          doctest::Approx(closed_form_w(1, GaussianScenario(x, 1.2, c)))
              .epsilon(1e-8));
    CHECK(gaussian_grid_expectation(2, x, 1.2, c, 1024) ==
          doctest::Approx(closed_form_w(2, GaussianScenario(x, 1.2, c)))
              .epsilon(1e-7));
    CHECK(gaussian_grid_expectation(3, x, 1.2, c, 1024) ==
          doctest::Approx(closed_form_w(3, GaussianScenario(x, 1.2, c)))
              .epsilon(1e-7));
  }
}
