#include "carleson/continuous.hpp"

#include <cmath>
#include <random>

namespace carleson {

Real delta_frame_bound(Real delta) {
  if (!(delta > 0) || !(delta <= 1)) {
    throw std::invalid_argument("delta_frame_bound: delta must lie in (0, 1]");
  }
  return 2 * (1 - 2 * std::log(delta)) / (delta * delta * delta * delta);
}

SandwichReport discrete_sandwich_check(const CarlesonSpectrum& spec, Index n, Index K,
                                       Real tol, Index N) {
  SandwichReport rep;
  rep.n = n;
  rep.K = K;
  rep.delta_n = carleson_delta(spec, n).delta_n;
  rep.Delta = delta_frame_bound(rep.delta_n);
  const ExponentSet lam = ExponentSet::arithmetic(N, K);
  const FrameBoundEstimate fb = frame_bounds(synthesis_matrix(spec, lam, 0, n, K));
  rep.A_hat = fb.A_hat;
  rep.B_hat = fb.B_hat;
  rep.contained = rep.A_hat >= 1 / rep.Delta - tol && rep.B_hat <= rep.Delta + tol;
  return rep;
}

std::pair<Real, Real> continuous_bounds(const CarlesonSpectrum& spec, Index n) {
  if (!spec.flags().real_positive || !spec.flags().strictly_increasing_modulus) {
    throw std::invalid_argument(
        "continuous_bounds: spectrum must be real positive with increasing moduli");
  }
  const Real delta_n = carleson_delta(spec, n).delta_n;
  const Real Delta = delta_frame_bound(delta_n);
  const Real z0 = spec.point(0).r;
  // (z0^2 - 1) / (2 log z0): both factors negative, ratio positive
  const Real lower = spec.point(0).defect() / (-2 * std::log(z0)) / Delta;
  return {lower, Delta};
}

Real default_integration_cut(const CarlesonSpectrum& spec, Index support) {
  if (support < 1 || support > spec.size()) {
    throw std::invalid_argument("default_integration_cut: bad support");
  }
  Real r_max = 0;
  for (Index j = 0; j < support; ++j) r_max = std::max(r_max, spec.point(j).r);
  return 200 / (-std::log(r_max));
}

RiemannEnergy riemann_energy(const CarlesonSpectrum& spec,
                             const Eigen::Ref<const CVec>& f, Real dt, Real T) {
  if (!spec.flags().real_positive) {
    throw std::invalid_argument("riemann_energy: spectrum must be real positive");
  }
  if (f.size() < 1 || f.size() > spec.size()) {
    throw std::invalid_argument("riemann_energy: f outside materialized support");
  }
  if (!(dt > 0) || !(dt <= 0.01)) {
    throw std::invalid_argument("riemann_energy: require 0 < dt <= 0.01");
  }
  if (!(T > 0)) throw std::invalid_argument("riemann_energy: require T > 0");

  const Index support = f.size();
  Real r_max = 0;
  Real g_norm_sq = 0;
  for (Index j = 0; j < support; ++j) {
    r_max = std::max(r_max, spec.point(j).r);
    g_norm_sq += spec.point(j).defect();
  }

  RiemannEnergy res;
  res.dt = dt;
  res.T = T;

  // Midpoint-tagged Riemann sum over cells [m dt, (m+1) dt) covering [0, T).
  const Index steps = static_cast<Index>(T / dt);
  std::vector<Complex> w(static_cast<size_t>(support));
  std::vector<Real> p(static_cast<size_t>(support)), q(static_cast<size_t>(support));
  for (Index j = 0; j < support; ++j) {
    const Real r = spec.point(j).r;
    w[static_cast<size_t>(j)] = f(j) * std::sqrt(spec.point(j).defect());
    q[static_cast<size_t>(j)] = std::pow(r, dt);
    p[static_cast<size_t>(j)] = std::pow(r, dt / 2);  // r^{t} at the first midpoint
  }
  Real sum = 0, comp = 0;  // Kahan accumulation
  for (Index m = 0; m < steps; ++m) {
    Complex inner = 0;
    for (size_t j = 0; j < w.size(); ++j) inner += w[j] * p[j];
    const Real term = dt * std::norm(inner);
    const Real t = term - comp;
    const Real next = sum + t;
    comp = (next - sum) - t;
    sum = next;
    for (size_t j = 0; j < p.size(); ++j) p[j] *= q[j];
  }
  res.value = sum;

  const Real f_norm_sq = f.squaredNorm();
  res.tail_bound =
      f_norm_sq * g_norm_sq * std::pow(r_max, 2 * T) / (-2 * std::log(r_max));
  res.tail_warning = res.tail_bound > 1e-6 * res.value;
  return res;
}

ContinuousBoundReport continuous_report(const CarlesonSpectrum& spec, Index n,
                                        Index support, Index trials, std::uint64_t seed,
                                        Real dt, Real base_tol, Real T_cut) {
  if (support < 1 || support > n || n > spec.size()) {
    throw std::invalid_argument("continuous_report: bad support/truncation");
  }
  ContinuousBoundReport rep;
  const auto [lower, upper] = continuous_bounds(spec, n);
  rep.delta_used = carleson_delta(spec, n).delta_n;
  rep.Delta = upper;
  rep.lower_const = lower;
  rep.z0 = spec.point(0).r;

  const Real T = T_cut > 0 ? T_cut : default_integration_cut(spec, support);
  std::mt19937_64 rng(seed);
  bool all = true;
  for (Index trial = 0; trial < trials; ++trial) {
    CVec f(support);
    for (Index j = 0; j < support; ++j) {
      f(j) = Complex(2 * uniform01(rng) - 1, 2 * uniform01(rng) - 1);
    }
    const RiemannEnergy e = riemann_energy(spec, f, dt, T);
    PerVectorEnergy pv;
    pv.f_tag = "seeded(" + std::to_string(seed) + ")#" + std::to_string(trial);
    pv.riemann_value = e.value;
    pv.T_cut = T;
    pv.dt = dt;
    pv.tail_bound = e.tail_bound;
    pv.f_norm_sq = f.squaredNorm();
    const Real tol = base_tol + e.tail_bound;
    pv.within = lower * pv.f_norm_sq - tol <= e.value &&
                e.value <= upper * pv.f_norm_sq + tol;
    all = all && pv.within;
    rep.per_vector_energies.push_back(std::move(pv));
  }
  rep.all_within = all;
  return rep;
}

}  // namespace carleson
