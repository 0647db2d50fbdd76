#pragma once

#include <map>
#include <string>
#include <tuple>

#include "sfwit/tensor.hpp"

namespace sfwit {

enum class PauliAxis { x, y, z };

/// The standard 2x2 Pauli matrix for the given axis.
MatXc pauli(PauliAxis axis);

/// Two-spin basis ordering used everywhere in this library:
///   index 0 = |up,up>, 1 = |up,down>, 2 = |down,up>, 3 = |down,down>.
/// |up> is the +1 eigenstate of pauli(z).
enum class TwoSpinState { singlet, psi_plus, up_down, down_up, down_down };

StateVector canonical_state(TwoSpinState name);
StateVector canonical_state(const std::string& name);

/// Pair correlators <sigma_i^a sigma_j^a> for i < j along all three axes.
class CorrelatorTable {
 public:
  double at(int i, int j, PauliAxis axis) const;
  void set(int i, int j, PauliAxis axis, double value);

  const std::map<std::tuple<int, int, int>, double>& entries() const {
    return entries_;
  }

 private:
  std::map<std::tuple<int, int, int>, double> entries_;
};

/// Computes all pair correlators of an N-spin state. The state may carry
/// additional bosonic factors after the spins; those are traced out first.
CorrelatorTable correlators(const DensityMatrix& state, int n_spins);
CorrelatorTable correlators(const StateVector& state, int n_spins);

/// Wootters concurrence of a two-qubit density matrix. Zero iff separable.
double concurrence(const DensityMatrix& rho);

}  // namespace sfwit
