#pragma once

#include <optional>

#include "sfwit/tensor.hpp"

namespace sfwit {

struct FockSpace {
  int n_max;  // highest retained Fock level, dimension n_max + 1
  explicit FockSpace(int n) : n_max(n) {
    if (n < 1) throw DimensionError("FockSpace: n_max must be >= 1");
  }
  int dim() const { return n_max + 1; }
};

/// Truncation guard policy for displacement-like operations.
///
/// strict:  |alpha| <= kGuardFactor * sqrt(n_max). Conservative; keeps the
///          tail mass of any displaced low-lying state below 1e-10 with a
///          wide margin.
/// relaxed: |alpha|^2 + 8|alpha| + 10 <= n_max. Tail-mass bound for states
///          supported on the low end of the space; the explicit opt-in for
///          sweeps that exceed the strict guard (e.g. |q' eta| up to 4 at
///          n_max = 60).
enum class GuardPolicy { strict, relaxed };

inline constexpr double kGuardFactor = 0.25;

int required_n_max(double abs_alpha, GuardPolicy policy);
void check_displacement_guard(Complex alpha, const FockSpace& space,
                              GuardPolicy policy);

/// Matrix with <n-1|a|n> = sqrt(n).
MatXc annihilation(const FockSpace& space);

/// Displacement operator D(alpha) = exp(alpha a^dag - conj(alpha) a) via the
/// closed-form associated-Laguerre matrix elements. Each element is the exact
/// infinite-space value restricted to the truncated block.
MatXc displacement(Complex alpha, const FockSpace& space,
                   GuardPolicy policy = GuardPolicy::strict);

/// Independent construction of the same operator by exponentiating the
/// truncated generator. Serves as the oracle for displacement().
MatXc displacement_exp(Complex alpha, const FockSpace& space,
                       GuardPolicy policy = GuardPolicy::strict);

enum class ModeKind { fock, coherent, thermal, custom };

/// State of a single bosonic mode in a truncated Fock space.
class ModeState {
 public:
  ModeState(FockSpace space, MatXc rho, ModeKind kind, double leakage);

  static ModeState fock(int n, const FockSpace& space);
  static ModeState custom(const FockSpace& space, MatXc rho);
  static ModeState custom_pure(const FockSpace& space, VecXc amplitudes);

  const FockSpace& space() const { return space_; }
  const MatXc& rho() const { return rho_; }
  ModeKind kind() const { return kind_; }
  /// Population that sat at or beyond the truncation edge before
  /// renormalization.
  double leakage() const { return leakage_; }
  double mean_occupation() const;

 private:
  FockSpace space_;
  MatXc rho_;
  ModeKind kind_;
  double leakage_;
};

/// Truncated coherent-state amplitudes, renormalized.
VecXc coherent_amplitudes(Complex alpha, const FockSpace& space,
                          GuardPolicy policy = GuardPolicy::strict);
ModeState coherent_state(Complex alpha, const FockSpace& space,
                         GuardPolicy policy = GuardPolicy::strict);

/// Gibbs state diag(e^{-n Delta}) with Delta = hbar omega / kB T.
/// Throws TruncationError when the tail beyond n_max exceeds `tail_tol`.
ModeState thermal_state(double delta, const FockSpace& space,
                        double tail_tol = 1e-10);
double thermal_mean_occupation(double delta);
/// Smallest FockSpace whose thermal tail mass is below tail_tol.
FockSpace thermal_space_for(double delta, double tail_tol = 1e-10);

/// Characteristic function C(alpha) = Tr[rho D(alpha)].
Complex char_fn(const ModeState& state, Complex alpha,
                GuardPolicy policy = GuardPolicy::strict);

}  // namespace sfwit
