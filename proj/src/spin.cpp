#include "sfwit/spin.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace sfwit {

MatXc pauli(PauliAxis axis) {
  MatXc m(2, 2);
  switch (axis) {
    case PauliAxis::x:
      m << 0, 1, 1, 0;
      break;
    case PauliAxis::y:
      m << 0, -kI, kI, 0;
      break;
    case PauliAxis::z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

StateVector canonical_state(TwoSpinState name) {
  VecXc a = VecXc::Zero(4);
  const double s = 1.0 / std::sqrt(2.0);
  switch (name) {
    case TwoSpinState::singlet:
      a(1) = s;
      a(2) = -s;
      break;
    case TwoSpinState::psi_plus:
      a(1) = s;
      a(2) = s;
      break;
    case TwoSpinState::up_down:
      a(1) = 1.0;
      break;
    case TwoSpinState::down_up:
      a(2) = 1.0;
      break;
    case TwoSpinState::down_down:
      a(3) = 1.0;
      break;
  }
  return StateVector(HilbertSpec({2, 2}), std::move(a));
}

StateVector canonical_state(const std::string& name) {
  if (name == "singlet") return canonical_state(TwoSpinState::singlet);
  if (name == "psi_plus") return canonical_state(TwoSpinState::psi_plus);
  if (name == "up_down") return canonical_state(TwoSpinState::up_down);
  if (name == "down_up") return canonical_state(TwoSpinState::down_up);
  if (name == "down_down") return canonical_state(TwoSpinState::down_down);
  throw InvalidStateError("canonical_state: unknown name '" + name + "'");
}

double CorrelatorTable::at(int i, int j, PauliAxis axis) const {
  auto it = entries_.find({i, j, static_cast<int>(axis)});
  if (it == entries_.end())
    throw DimensionError("CorrelatorTable: no entry for this pair");
  return it->second;
}

void CorrelatorTable::set(int i, int j, PauliAxis axis, double value) {
  entries_[{i, j, static_cast<int>(axis)}] = value;
}

namespace {

CorrelatorTable correlators_spin_only(const DensityMatrix& rho, int n_spins) {
  CorrelatorTable table;
  const HilbertSpec& spec = rho.spec();
  for (int i = 0; i < n_spins; ++i)
    for (int j = i + 1; j < n_spins; ++j)
      for (PauliAxis ax : {PauliAxis::x, PauliAxis::y, PauliAxis::z}) {
        MatXc op = embed(pauli(ax), i, spec) * embed(pauli(ax), j, spec);
        table.set(i, j, ax, real_expectation(op, rho));
      }
  return table;
}

DensityMatrix reduce_to_spins(const DensityMatrix& state, int n_spins) {
  if (state.spec().n_factors() == n_spins) return state;
  std::vector<int> keep(n_spins);
  for (int i = 0; i < n_spins; ++i) keep[i] = i;
  return partial_trace(state, keep);
}

void check_spin_count(const HilbertSpec& spec, int n_spins) {
  if (n_spins < 2) throw DimensionError("correlators: need at least 2 spins");
  if (spec.n_factors() < n_spins)
    throw DimensionError("correlators: state has fewer factors than spins");
  for (int i = 0; i < n_spins; ++i)
    if (spec.dim(i) != 2)
      throw DimensionError("correlators: factor " + std::to_string(i) +
                           " is not a qubit");
}

}  // namespace

CorrelatorTable correlators(const DensityMatrix& state, int n_spins) {
  check_spin_count(state.spec(), n_spins);
  return correlators_spin_only(reduce_to_spins(state, n_spins), n_spins);
}

CorrelatorTable correlators(const StateVector& state, int n_spins) {
  check_spin_count(state.spec(), n_spins);
  if (state.spec().n_factors() == n_spins)
    return correlators_spin_only(DensityMatrix::from_pure(state), n_spins);
  std::vector<int> keep(n_spins);
  for (int i = 0; i < n_spins; ++i) keep[i] = i;
  return correlators_spin_only(partial_trace(state, keep), n_spins);
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4 || rho.spec().n_factors() != 2)
    throw DimensionError("concurrence: expects a two-qubit density matrix");
  MatXc yy = kron(pauli(PauliAxis::y), pauli(PauliAxis::y));
  MatXc rho_tilde = yy * rho.matrix().conjugate() * yy;
  Eigen::ComplexEigenSolver<MatXc> es(rho.matrix() * rho_tilde);
  std::vector<double> lam;
  for (int k = 0; k < 4; ++k)
    lam.push_back(std::sqrt(std::max(0.0, es.eigenvalues()(k).real())));
  std::sort(lam.begin(), lam.end(), std::greater<>());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

}  // namespace sfwit
