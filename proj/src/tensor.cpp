#include "sfwit/tensor.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace sfwit {

HilbertSpec::HilbertSpec(std::vector<int> factor_dims)
    : dims_(std::move(factor_dims)) {
  if (dims_.empty()) throw DimensionError("HilbertSpec: no factors");
  for (int d : dims_) {
    if (d < 2) throw DimensionError("HilbertSpec: every factor_dim must be >= 2");
  }
  strides_.assign(dims_.size(), 1);
  for (int i = static_cast<int>(dims_.size()) - 2; i >= 0; --i) {
    strides_[i] = strides_[i + 1] * dims_[i + 1];
  }
  total_ = strides_[0] * dims_[0];
}

StateVector::StateVector(HilbertSpec spec, VecXc amplitudes)
    : spec_(std::move(spec)), amps_(std::move(amplitudes)) {
  if (amps_.size() != spec_.total_dim())
    throw DimensionError("StateVector: amplitude length != total dimension");
  double n = amps_.norm();
  if (std::abs(n - 1.0) > 1e3 * tol::norm)
    throw InvalidStateError("StateVector: amplitudes not normalized (norm=" +
                            std::to_string(n) + ")");
}

StateVector StateVector::normalized(HilbertSpec spec, VecXc amplitudes) {
  double n = amplitudes.norm();
  if (n == 0.0) throw InvalidStateError("StateVector: zero vector");
  amplitudes /= n;
  return StateVector(std::move(spec), std::move(amplitudes));
}

DensityMatrix::DensityMatrix(HilbertSpec spec, MatXc matrix)
    : spec_(std::move(spec)), mat_(std::move(matrix)) {
  long d = spec_.total_dim();
  if (mat_.rows() != d || mat_.cols() != d)
    throw DimensionError("DensityMatrix: matrix dimension != total dimension");
  double herm = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e2 * tol::hermitian)
    throw InvalidStateError("DensityMatrix: not Hermitian");
  Complex tr = mat_.trace();
  if (std::abs(tr - 1.0) > 1e3 * tol::trace)
    throw InvalidStateError("DensityMatrix: trace != 1");
  if (d <= 256) {
    Eigen::SelfAdjointEigenSolver<MatXc> es(0.5 * (mat_ + mat_.adjoint()),
                                            Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < tol::eigenvalue_floor)
      throw InvalidStateError("DensityMatrix: negative eigenvalue");
  }
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
  return DensityMatrix(psi.spec(),
                       psi.amplitudes() * psi.amplitudes().adjoint());
}

MatXc kron(const MatXc& a, const MatXc& b) {
  MatXc out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

MatXc embed(const MatXc& op, int site, const HilbertSpec& spec) {
  if (site < 0 || site >= spec.n_factors())
    throw DimensionError("embed: site out of range");
  if (op.rows() != spec.dim(site) || op.cols() != spec.dim(site))
    throw DimensionError("embed: operator dimension != factor dimension");
  MatXc acc = MatXc::Identity(1, 1);
  for (int s = 0; s < spec.n_factors(); ++s) {
    if (s == site) {
      acc = kron(acc, op);
    } else {
      acc = kron(acc, MatXc::Identity(spec.dim(s), spec.dim(s)));
    }
  }
  return acc;
}

Complex expectation(const MatXc& op, const StateVector& psi) {
  if (op.rows() != psi.dim() || op.cols() != psi.dim())
    throw DimensionError("expectation: dimension mismatch");
  return psi.amplitudes().dot(op * psi.amplitudes());
}

Complex expectation(const MatXc& op, const DensityMatrix& rho) {
  if (op.rows() != rho.dim() || op.cols() != rho.dim())
    throw DimensionError("expectation: dimension mismatch");
  // Tr[op rho] without forming the product matrix.
  return op.cwiseProduct(rho.matrix().transpose()).sum();
}

namespace {
double check_real(Complex v) {
  if (std::abs(v.imag()) > tol::imag_residue)
    throw InvalidStateError("expectation: imaginary residue " +
                            std::to_string(v.imag()));
  return v.real();
}
}  // namespace

double real_expectation(const MatXc& op, const StateVector& psi) {
  return check_real(expectation(op, psi));
}

double real_expectation(const MatXc& op, const DensityMatrix& rho) {
  return check_real(expectation(op, rho));
}

namespace {

struct TraceIndexing {
  std::vector<long> keep_offsets;    // flat offset per kept multi-index
  std::vector<long> traced_offsets;  // flat offset per traced multi-index
  std::vector<int> keep_dims;
};

TraceIndexing build_indexing(const HilbertSpec& spec,
                             const std::vector<int>& keep) {
  if (keep.empty()) throw DimensionError("partial_trace: empty keep set");
  std::vector<bool> kept(spec.n_factors(), false);
  for (int s : keep) {
    if (s < 0 || s >= spec.n_factors())
      throw DimensionError("partial_trace: keep index out of range");
    if (kept[s]) throw DimensionError("partial_trace: duplicate keep index");
    kept[s] = true;
  }
  TraceIndexing ix;
  std::vector<int> keep_sites, traced_sites;
  for (int s = 0; s < spec.n_factors(); ++s)
    (kept[s] ? keep_sites : traced_sites).push_back(s);
  for (int s : keep_sites) ix.keep_dims.push_back(spec.dim(s));

  auto enumerate = [&](const std::vector<int>& sites) {
    std::vector<long> offsets{0};
    for (int s : sites) {
      std::vector<long> next;
      next.reserve(offsets.size() * spec.dim(s));
      for (long base : offsets)
        for (int i = 0; i < spec.dim(s); ++i)
          next.push_back(base + i * spec.strides()[s]);
      offsets = std::move(next);
    }
    return offsets;
  };
  ix.keep_offsets = enumerate(keep_sites);
  ix.traced_offsets = enumerate(traced_sites);
  return ix;
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep) {
  TraceIndexing ix = build_indexing(rho.spec(), keep);
  long dk = static_cast<long>(ix.keep_offsets.size());
  MatXc out = MatXc::Zero(dk, dk);
  const MatXc& m = rho.matrix();
  for (long r = 0; r < dk; ++r)
    for (long c = 0; c < dk; ++c) {
      Complex acc = 0.0;
      for (long t : ix.traced_offsets)
        acc += m(ix.keep_offsets[r] + t, ix.keep_offsets[c] + t);
      out(r, c) = acc;
    }
  return DensityMatrix(HilbertSpec(ix.keep_dims), std::move(out));
}

DensityMatrix partial_trace(const StateVector& psi,
                            const std::vector<int>& keep) {
  TraceIndexing ix = build_indexing(psi.spec(), keep);
  long dk = static_cast<long>(ix.keep_offsets.size());
  MatXc out = MatXc::Zero(dk, dk);
  const VecXc& a = psi.amplitudes();
  for (long r = 0; r < dk; ++r)
    for (long c = r; c < dk; ++c) {
      Complex acc = 0.0;
      for (long t : ix.traced_offsets)
        acc += a(ix.keep_offsets[r] + t) * std::conj(a(ix.keep_offsets[c] + t));
      out(r, c) = acc;
      out(c, r) = std::conj(acc);
    }
  return DensityMatrix(HilbertSpec(ix.keep_dims), std::move(out));
}

}  // namespace sfwit
