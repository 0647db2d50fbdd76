#pragma once

#include <vector>

#include "sfwit/coefficients.hpp"
#include "sfwit/tensor.hpp"

namespace sfwit {

/// Ground-state wavepacket of one harmonic well: amplitude sqrt(f(x)) with
/// f(x) = exp(-(x-center)^2 / 2 sigma^2) / sqrt(2 pi sigma^2).
struct GaussianWavepacket {
  double center;
  double sigma;
  GaussianWavepacket(double c, double s) : center(c), sigma(s) {
    if (s <= 0) throw InvalidStateError("GaussianWavepacket: sigma must be > 0");
  }
};

/// Rescaled parameters of the double-well scenarios: x = q r is the rescaled
/// momentum, y = r / sigma the delocalization ratio.
struct GaussianScenario {
  double x;
  double y;
  WitnessCoefficients c;
  GaussianScenario(double x_, double y_, WitnessCoefficients c_)
      : x(x_), y(y_), c(c_) {
    if (y <= 0) throw InvalidStateError("GaussianScenario: y must be > 0");
  }
};

/// <f_a|f_b> for equal-width packets: exp(-(x_a-x_b)^2 / 8 sigma^2).
double overlap(const GaussianWavepacket& a, const GaussianWavepacket& b);

/// <f_a| e^{i q x} |f_b>.
Complex phase_element(const GaussianWavepacket& a, const GaussianWavepacket& b,
                      double q);

/// Closed-form witness expectation for the three double-well states.
double closed_form_w(int state_id, const GaussianScenario& scenario);

/// Uniform position grid for the discretized oracle representation.
struct PositionGrid {
  double lo, hi;
  int n;
  PositionGrid(double lo_, double hi_, int n_) : lo(lo_), hi(hi_), n(n_) {
    if (n < 2 || hi <= lo) throw GridResolutionError("PositionGrid: bad range");
  }
  double step() const { return (hi - lo) / (n - 1); }
  double point(int i) const { return lo + i * step(); }
};

/// Grid spanning 8 sigma beyond both packet centers.
PositionGrid default_grid(const GaussianWavepacket& a,
                          const GaussianWavepacket& b, int n = 2048);

/// sqrt(f(x_i) h), normalized to unit 2-norm on the grid.
VecXc discretized_packet(const GaussianWavepacket& p, const PositionGrid& grid);

/// Discretized spin (x) position state on (2,2,n,n) for state_id in {2,3}.
/// Conventions: sigma = 1, centers at +-y/2 (so r = y). State 1 has no
/// position wavefunction and is rejected here.
StateVector discretized_state(int state_id, const GaussianScenario& scenario,
                              const PositionGrid& grid);

/// The packets realizing a scenario in the sigma = 1 convention.
std::pair<GaussianWavepacket, GaussianWavepacket> scenario_packets(
    const GaussianScenario& scenario);

}  // namespace sfwit
