#pragma once

#include <string>
#include <vector>

#include "carleson/frame_bounds.hpp"

namespace carleson {

// Delta = 2 (1 - 2 log delta) / delta^4, the frame-bound constant of the
// discrete system; strictly decreasing in delta, equal to 2 at delta = 1.
Real delta_frame_bound(Real delta);

// Containment of the truncated frame-bound estimate for Lambda = N_0 in
// the window [Delta^{-1}, Delta] computed from delta_n. Since delta_n >= delta,
// the window is narrower than the guaranteed one, so containment is a stricter
// test that is still expected to hold at converged truncations.
struct SandwichReport {
  Real delta_n = 0;
  Real Delta = 0;
  Real A_hat = 0;
  Real B_hat = 0;
  bool contained = false;
  Index n = 0;
  Index K = 0;
};

SandwichReport discrete_sandwich_check(const CarlesonSpectrum& spec, Index n, Index K,
                                       Real tol = kDefaultTol, Index N = 1);

// (lower, upper) = (Delta^{-1} (1 - z0^2) / (-2 log z0), Delta) from delta_n,
// z0 the smallest modulus; continuous-frame window for {D^t g}_{t >= 0}.
std::pair<Real, Real> continuous_bounds(const CarlesonSpectrum& spec, Index n);

// Midpoint Riemann sum of int_0^T |<f, D^t g>|^2 dt with cell width dt,
// plus a crude bound on the omitted upper tail.
struct RiemannEnergy {
  Real value = 0;
  Real tail_bound = 0;
  bool tail_warning = false;  // tail_bound > 1e-6 * value
  Real dt = 0;
  Real T = 0;
};

RiemannEnergy riemann_energy(const CarlesonSpectrum& spec,
                             const Eigen::Ref<const CVec>& f, Real dt, Real T);

// T large enough that the omitted tail is negligible: 200 / (-log r_max)
// over the first `support` coordinates.
Real default_integration_cut(const CarlesonSpectrum& spec, Index support);

struct PerVectorEnergy {
  std::string f_tag;
  Real riemann_value = 0;
  Real T_cut = 0;
  Real dt = 0;
  Real tail_bound = 0;
  Real f_norm_sq = 0;
  bool within = false;  // lower ||f||^2 - tol <= value <= upper ||f||^2 + tol
};

struct ContinuousBoundReport {
  Real delta_used = 0;
  Real Delta = 0;
  Real lower_const = 0;
  Real z0 = 0;
  std::vector<PerVectorEnergy> per_vector_energies;
  bool all_within = false;
};

// Runs the continuous sandwich over seeded random finitely supported
// vectors; tol per vector is base_tol + its tail bound. T_cut <= 0 picks
// the default integration cut.
ContinuousBoundReport continuous_report(const CarlesonSpectrum& spec, Index n,
                                        Index support, Index trials, std::uint64_t seed,
                                        Real dt, Real base_tol = 1e-6, Real T_cut = 0);

}  // namespace carleson
