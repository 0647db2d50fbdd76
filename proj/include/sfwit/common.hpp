#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace sfwit {

using Complex = std::complex<double>;
using MatXc = Eigen::MatrixXcd;
using VecXc = Eigen::VectorXcd;
using MatXd = Eigen::MatrixXd;
using VecXd = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

/// Centralized numerical tolerance constants. Every tolerance used by the
/// library lives here so that tests and implementation agree on one set.
namespace tol {
inline constexpr double norm = 1e-12;
inline constexpr double trace = 1e-12;
inline constexpr double hermitian = 1e-12;
inline constexpr double eigenvalue_floor = -1e-10;
inline constexpr double imag_residue = 1e-10;
inline constexpr double witness_hermitian = 1e-10;
}  // namespace tol

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidStateError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when a bosonic operation would exceed the accuracy the truncated
/// Fock space can deliver. Carries the truncation level that would suffice.
struct TruncationError : std::runtime_error {
  int required_n_max;
  TruncationError(const std::string& msg, int required)
      : std::runtime_error(msg + " (required n_max >= " +
                           std::to_string(required) + ")"),
        required_n_max(required) {}
};

struct GridResolutionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnstableConfigurationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sfwit
