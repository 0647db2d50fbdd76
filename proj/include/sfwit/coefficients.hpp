#pragma once

#include "sfwit/common.hpp"

namespace sfwit {

/// The witness coefficient triple (c_x, c_y, c_z), each in [-1, 1].
struct WitnessCoefficients {
  double cx, cy, cz;

  WitnessCoefficients(double x, double y, double z) : cx(x), cy(y), cz(z) {
    for (double c : {cx, cy, cz})
      if (std::abs(c) > 1.0)
        throw InvalidStateError("WitnessCoefficients: |c_alpha| must be <= 1");
  }

  static WitnessCoefficients all_minus() { return {-1.0, -1.0, -1.0}; }
  /// The optimum for the hybrid scenarios: (1, 1, -1).
  static WitnessCoefficients xy_plus_z_minus() { return {1.0, 1.0, -1.0}; }
};

/// Given the per-axis aggregates T_alpha such that <Sigma> = sum_a c_a T_a,
/// returns the box vertex maximizing <Sigma> (ties resolved to +1).
WitnessCoefficients optimal_coefficients(double tx, double ty, double tz);

}  // namespace sfwit
