#include "sfwit/gaussian.hpp"

#include <cmath>

namespace sfwit {

namespace {
void check_equal_sigma(const GaussianWavepacket& a,
                       const GaussianWavepacket& b) {
  if (std::abs(a.sigma - b.sigma) > 1e-14 * std::max(a.sigma, b.sigma))
    throw InvalidStateError(
        "unequal packet widths are not supported (symmetric double well)");
}
}  // namespace

double overlap(const GaussianWavepacket& a, const GaussianWavepacket& b) {
  check_equal_sigma(a, b);
  double d = a.center - b.center;
  return std::exp(-d * d / (8.0 * a.sigma * a.sigma));
}

Complex phase_element(const GaussianWavepacket& a, const GaussianWavepacket& b,
                      double q) {
  check_equal_sigma(a, b);
  double d = a.center - b.center;
  double mid = 0.5 * (a.center + b.center);
  double s2 = a.sigma * a.sigma;
  return std::exp(-d * d / (8.0 * s2) - 0.5 * q * q * s2) *
         std::exp(Complex(0.0, q * mid));
}

double closed_form_w(int state_id, const GaussianScenario& sc) {
  double sum_c = sc.c.cx + sc.c.cy + sc.c.cz;
  double damp = std::exp(-sc.x * sc.x / (sc.y * sc.y));
  switch (state_id) {
    case 1:
      return 1.0 + sum_c * std::cos(sc.x);
    case 2:
      return 1.0 + damp * sum_c * std::cos(sc.x);
    case 3:
      return 1.0 + damp * ((sc.c.cx + sc.c.cy) * std::exp(-sc.y * sc.y / 4.0) +
                           sc.c.cz * std::cos(sc.x));
    default:
      throw InvalidStateError("closed_form_w: state_id must be 1, 2 or 3");
  }
}

PositionGrid default_grid(const GaussianWavepacket& a,
                          const GaussianWavepacket& b, int n) {
  double lo = std::min(a.center, b.center) - 8.0 * a.sigma;
  double hi = std::max(a.center, b.center) + 8.0 * a.sigma;
  return PositionGrid(lo, hi, n);
}

VecXc discretized_packet(const GaussianWavepacket& p, const PositionGrid& grid) {
  VecXc v(grid.n);
  double norm_f = 1.0 / std::sqrt(2.0 * M_PI * p.sigma * p.sigma);
  for (int i = 0; i < grid.n; ++i) {
    double x = grid.point(i);
    double f = norm_f * std::exp(-(x - p.center) * (x - p.center) /
                                 (2.0 * p.sigma * p.sigma));
    v(i) = std::sqrt(f * grid.step());
  }
  v.normalize();
  return v;
}

std::pair<GaussianWavepacket, GaussianWavepacket> scenario_packets(
    const GaussianScenario& sc) {
  return {GaussianWavepacket(+0.5 * sc.y, 1.0),
          GaussianWavepacket(-0.5 * sc.y, 1.0)};
}

namespace {
void check_grid(const GaussianScenario& sc, const PositionGrid& grid) {
  auto [pa, pb] = scenario_packets(sc);
  double lo_need = std::min(pa.center, pb.center) - 8.0;
  double hi_need = std::max(pa.center, pb.center) + 8.0;
  if (grid.lo > lo_need + 1e-9 || grid.hi < hi_need - 1e-9)
    throw GridResolutionError("grid does not span 8 sigma beyond the centers");
  if (grid.step() > 0.2)  // sigma = 1 convention: resolve the packet width
    throw GridResolutionError("grid spacing does not resolve sigma");
}
}  // namespace

StateVector discretized_state(int state_id, const GaussianScenario& sc,
                              const PositionGrid& grid) {
  if (state_id != 2 && state_id != 3)
    throw InvalidStateError(
        "discretized_state: only states 2 and 3 carry a position wavefunction");
  check_grid(sc, grid);
  auto [pa, pb] = scenario_packets(sc);
  VecXc ga = discretized_packet(pa, grid);
  VecXc gb = discretized_packet(pb, grid);

  HilbertSpec spec({2, 2, grid.n, grid.n});
  VecXc amps = VecXc::Zero(spec.total_dim());
  const double s = 1.0 / std::sqrt(2.0);
  long npos = long(grid.n) * grid.n;
  // spin index 1 = |up,down>, 2 = |down,up>; positions are the trailing pair
  auto add_branch = [&](int spin_idx, double coef, const VecXc& g1,
                        const VecXc& g2) {
    long base = spin_idx * npos;
    for (int i = 0; i < grid.n; ++i)
      for (int j = 0; j < grid.n; ++j)
        amps(base + long(i) * grid.n + j) += coef * g1(i) * g2(j);
  };
  if (state_id == 2) {
    add_branch(1, s, ga, gb);
    add_branch(2, -s, ga, gb);
  } else {
    add_branch(1, s, ga, gb);
    add_branch(2, -s, gb, ga);
  }
  return StateVector::normalized(std::move(spec), std::move(amps));
}

}  // namespace sfwit
