#include "sfwit/fock.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace sfwit {

int required_n_max(double abs_alpha, GuardPolicy policy) {
  if (policy == GuardPolicy::strict) {
    double v = abs_alpha / kGuardFactor;
    return static_cast<int>(std::ceil(v * v));
  }
  return static_cast<int>(
      std::ceil(abs_alpha * abs_alpha + 8.0 * abs_alpha + 10.0));
}

void check_displacement_guard(Complex alpha, const FockSpace& space,
                              GuardPolicy policy) {
  double a = std::abs(alpha);
  bool ok = (policy == GuardPolicy::strict)
                ? a <= kGuardFactor * std::sqrt(double(space.n_max))
                : a * a + 8.0 * a + 10.0 <= double(space.n_max);
  if (!ok)
    throw TruncationError("displacement amplitude " + std::to_string(a) +
                              " exceeds truncation guard at n_max=" +
                              std::to_string(space.n_max),
                          required_n_max(a, policy));
}

MatXc annihilation(const FockSpace& space) {
  MatXc a = MatXc::Zero(space.dim(), space.dim());
  for (int n = 1; n <= space.n_max; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

MatXc displacement(Complex alpha, const FockSpace& space, GuardPolicy policy) {
  check_displacement_guard(alpha, space, policy);
  const int d = space.dim();
  if (alpha == Complex(0.0)) return MatXc::Identity(d, d);

  const double x = std::norm(alpha);           // |alpha|^2
  const double ln_a = std::log(std::abs(alpha));
  const Complex phase = alpha / std::abs(alpha);
  const double ln_rescale = std::log(1e150);

  MatXc out(d, d);
  Complex ph_up = 1.0, ph_dn = 1.0;  // phase^k and (-conj(phase))^k
  for (int k = 0; k < d; ++k) {
    // Scaled three-term recurrence for L_n^{(k)}(x): values stored as
    // f * e^{E} with a shared exponent to survive the factorial-scale growth.
    double f_prev = 0.0, f_cur = 1.0, E = 0.0;  // L_{-1}=0, L_0=1
    for (int n = 0; n + k < d; ++n) {
      if (n > 0) {
        double f_next = ((2.0 * n - 1.0 + k - x) * f_cur -
                         (n - 1.0 + k) * f_prev) /
                        double(n);
        f_prev = f_cur;
        f_cur = f_next;
        if (std::abs(f_cur) > 1e150) {
          f_cur *= 1e-150;
          f_prev *= 1e-150;
          E += ln_rescale;
        }
      }
      double ln_mag = 0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + k + 1.0)) +
                      k * ln_a - 0.5 * x + E;
      double val = 0.0;
      if (f_cur != 0.0)
        val = (f_cur > 0 ? 1.0 : -1.0) *
              std::exp(ln_mag + std::log(std::abs(f_cur)));
      out(n + k, n) = val * ph_up;
      if (k > 0) out(n, n + k) = val * ph_dn;
    }
    ph_up *= phase;
    ph_dn *= -std::conj(phase);
  }
  return out;
}

MatXc displacement_exp(Complex alpha, const FockSpace& space,
                       GuardPolicy policy) {
  check_displacement_guard(alpha, space, policy);
  const int d = space.dim();
  // Exponentiating the generator on the requested space alone corrupts the
  // elements within roughly |alpha| sqrt(n_max) of the truncation edge, so
  // work on a padded space and keep the top-left block.
  FockSpace padded(space.n_max +
                   required_n_max(std::abs(alpha), GuardPolicy::relaxed));
  const int dp = padded.dim();
  MatXc a = annihilation(padded);
  // G = alpha a^dag - conj(alpha) a is anti-Hermitian; exponentiate through
  // the spectral decomposition of H = iG.
  MatXc g = alpha * a.adjoint() - std::conj(alpha) * a;
  Eigen::SelfAdjointEigenSolver<MatXc> es(kI * g);
  VecXc ph(dp);
  for (int i = 0; i < dp; ++i)
    ph(i) = std::exp(Complex(0.0, -es.eigenvalues()(i)));
  MatXc full = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
  return full.topLeftCorner(d, d);
}

ModeState::ModeState(FockSpace space, MatXc rho, ModeKind kind, double leakage)
    : space_(space), rho_(std::move(rho)), kind_(kind), leakage_(leakage) {
  if (rho_.rows() != space_.dim() || rho_.cols() != space_.dim())
    throw DimensionError("ModeState: matrix dimension != Fock dimension");
  // Reuse the DensityMatrix validation path.
  DensityMatrix check(HilbertSpec({space_.dim()}), rho_);
}

ModeState ModeState::fock(int n, const FockSpace& space) {
  if (n < 0 || n > space.n_max)
    throw DimensionError("ModeState::fock: level outside the space");
  MatXc rho = MatXc::Zero(space.dim(), space.dim());
  rho(n, n) = 1.0;
  return ModeState(space, std::move(rho), ModeKind::fock,
                   n == space.n_max ? 1.0 : 0.0);
}

ModeState ModeState::custom(const FockSpace& space, MatXc rho) {
  double leak = rho(space.n_max, space.n_max).real();
  return ModeState(space, std::move(rho), ModeKind::custom, leak);
}

ModeState ModeState::custom_pure(const FockSpace& space, VecXc amplitudes) {
  amplitudes.normalize();
  double leak = std::norm(amplitudes(space.n_max));
  return ModeState(space, amplitudes * amplitudes.adjoint(), ModeKind::custom,
                   leak);
}

double ModeState::mean_occupation() const {
  double n = 0.0;
  for (int k = 0; k <= space_.n_max; ++k) n += k * rho_(k, k).real();
  return n;
}

VecXc coherent_amplitudes(Complex alpha, const FockSpace& space,
                          GuardPolicy policy) {
  check_displacement_guard(alpha, space, policy);
  VecXc amps(space.dim());
  // log-space to keep alpha^n / sqrt(n!) finite for any guarded alpha
  double ln_a = (alpha == Complex(0.0)) ? 0.0 : std::log(std::abs(alpha));
  Complex phase = (alpha == Complex(0.0)) ? 1.0 : alpha / std::abs(alpha);
  Complex ph = 1.0;
  for (int n = 0; n <= space.n_max; ++n) {
    double mag = (alpha == Complex(0.0) && n > 0)
                     ? 0.0
                     : std::exp(-0.5 * std::norm(alpha) + n * ln_a -
                                0.5 * std::lgamma(n + 1.0));
    amps(n) = mag * ph;
    ph *= phase;
  }
  return amps;
}

ModeState coherent_state(Complex alpha, const FockSpace& space,
                         GuardPolicy policy) {
  VecXc amps = coherent_amplitudes(alpha, space, policy);
  double leak = 1.0 - amps.squaredNorm() + std::norm(amps(space.n_max));
  amps.normalize();
  return ModeState(space, amps * amps.adjoint(), ModeKind::coherent, leak);
}

double thermal_mean_occupation(double delta) {
  if (delta <= 0) throw InvalidStateError("thermal: delta must be > 0");
  return 1.0 / std::expm1(delta);
}

FockSpace thermal_space_for(double delta, double tail_tol) {
  if (delta <= 0) throw InvalidStateError("thermal: delta must be > 0");
  // tail mass of the normalized Gibbs ladder beyond n_max is w^{n_max+1}
  int n = static_cast<int>(std::ceil(std::log(tail_tol) / -delta));
  return FockSpace(std::max(1, n));
}

ModeState thermal_state(double delta, const FockSpace& space,
                        double tail_tol) {
  if (delta <= 0) throw InvalidStateError("thermal: delta must be > 0");
  double w = std::exp(-delta);
  double tail = std::pow(w, double(space.n_max + 1));
  if (tail > tail_tol)
    throw TruncationError("thermal tail mass " + std::to_string(tail) +
                              " exceeds guard",
                          thermal_space_for(delta, tail_tol).n_max);
  MatXc rho = MatXc::Zero(space.dim(), space.dim());
  double norm = (1.0 - tail) / (1.0 - w);
  for (int n = 0; n <= space.n_max; ++n) rho(n, n) = std::pow(w, n) / norm;
  return ModeState(space, std::move(rho), ModeKind::thermal, tail);
}

Complex char_fn(const ModeState& state, Complex alpha, GuardPolicy policy) {
  MatXc d = displacement(alpha, state.space(), policy);
  Complex v = d.cwiseProduct(state.rho().transpose()).sum();
  if (std::abs(v) > 1.0 + tol::imag_residue)
    throw InvalidStateError("char_fn: |C| exceeds 1 beyond tolerance");
  return v;
}

}  // namespace sfwit
