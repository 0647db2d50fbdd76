#pragma once

#include <vector>

#include "sfwit/common.hpp"

namespace sfwit {

/// Ordered tensor-product factorization of a composite Hilbert space.
/// Convention used throughout: spin factors first, bosonic modes after.
class HilbertSpec {
 public:
  explicit HilbertSpec(std::vector<int> factor_dims);

  const std::vector<int>& factor_dims() const { return dims_; }
  int n_factors() const { return static_cast<int>(dims_.size()); }
  int dim(int site) const { return dims_.at(site); }
  long total_dim() const { return total_; }

  /// Row-major strides: the last factor is the fastest index. This matches
  /// the Kronecker-product ordering of kron() and embed().
  const std::vector<long>& strides() const { return strides_; }

  bool operator==(const HilbertSpec& o) const { return dims_ == o.dims_; }

 private:
  std::vector<int> dims_;
  std::vector<long> strides_;
  long total_;
};

class StateVector {
 public:
  /// Throws if the amplitudes are not normalized within tol::norm.
  StateVector(HilbertSpec spec, VecXc amplitudes);

  /// Normalizes the amplitudes first (used by discretizers, where the raw
  /// grid weights carry quadrature normalization error).
  static StateVector normalized(HilbertSpec spec, VecXc amplitudes);

  const HilbertSpec& spec() const { return spec_; }
  const VecXc& amplitudes() const { return amps_; }
  long dim() const { return amps_.size(); }

 private:
  HilbertSpec spec_;
  VecXc amps_;
};

class DensityMatrix {
 public:
  /// Validates Hermiticity, unit trace and (for small dimensions) spectrum
  /// positivity. Eigenvalue validation is skipped above dimension 256 where
  /// an O(d^3) solve per construction would dominate the runtime.
  DensityMatrix(HilbertSpec spec, MatXc matrix);

  static DensityMatrix from_pure(const StateVector& psi);

  const HilbertSpec& spec() const { return spec_; }
  const MatXc& matrix() const { return mat_; }
  long dim() const { return mat_.rows(); }

 private:
  HilbertSpec spec_;
  MatXc mat_;
};

MatXc kron(const MatXc& a, const MatXc& b);

/// Places `op` on factor `site` of `spec` and the identity everywhere else.
MatXc embed(const MatXc& op, int site, const HilbertSpec& spec);

Complex expectation(const MatXc& op, const StateVector& psi);
Complex expectation(const MatXc& op, const DensityMatrix& rho);

/// Expectation of a Hermitian operator; throws if the imaginary residue
/// exceeds tol::imag_residue.
double real_expectation(const MatXc& op, const StateVector& psi);
double real_expectation(const MatXc& op, const DensityMatrix& rho);

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep);

/// Reduced density matrix of a pure state without materializing the full
/// projector. Needed for grid-discretized states whose total dimension
/// makes |psi><psi| unstorable.
DensityMatrix partial_trace(const StateVector& psi,
                            const std::vector<int>& keep);

}  // namespace sfwit
