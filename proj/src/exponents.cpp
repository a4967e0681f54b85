#include "carleson/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace carleson {

const char* ms_verdict_name(MsVerdict v) {
  switch (v) {
    case MsVerdict::DivergentAnalytic: return "divergent_analytic";
    case MsVerdict::DivergentNumericThreshold: return "divergent_numeric_threshold";
    case MsVerdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

MsSumResult ms_sum(const ExponentSet& lam, Index K, Real threshold) {
  if (K < 1 || K > lam.size()) {
    throw std::invalid_argument("ms_sum: K outside materialized count");
  }
  MsSumResult res;
  for (Index k = 0; k < K; ++k) {
    const Real l = lam.value(k);
    if (l > 0) res.partial_sum += l / (l * l + 1);
  }
  if (lam.kind() == ExponentKind::JitteredArithmetic) {
    // lambda_k <= N (k + 1), so the series dominates a harmonic tail
    res.verdict = MsVerdict::DivergentAnalytic;
  } else if (res.partial_sum > threshold) {
    res.verdict = MsVerdict::DivergentNumericThreshold;
  } else {
    res.verdict = MsVerdict::Inconclusive;
  }
  return res;
}

ThetaEstimate theta(const ExponentSet& lam, Real z, Index K) {
  if (!(z >= 0) || !(z < 1)) throw std::invalid_argument("theta: z must lie in [0, 1)");
  if (K < 1 || K > lam.size()) {
    throw std::invalid_argument("theta: K outside materialized count");
  }
  ThetaEstimate est;
  for (Index k = 0; k < K; ++k) {
    est.value += std::pow(z, lam.value(k));  // pow(0, 0) = 1 by convention
  }
  if (auto N = lam.arithmetic_step()) {
    const Real zN = std::pow(z, static_cast<Real>(*N));
    est.tail_bound = std::pow(z, static_cast<Real>(*N * K)) / (1 - zN);
  }
  return est;
}

Real theta_sup_check(const ExponentSet& lam, const Vec& grid) {
  if (grid.size() < 1) throw std::invalid_argument("theta_sup_check: empty grid");
  Real sup = 0;
  for (Index i = 0; i < grid.size(); ++i) {
    sup = std::max(sup, (1 - grid(i)) * theta(lam, grid(i), lam.size()).value);
  }
  return sup;
}

Real gamma_const(const CarlesonSpectrum& spec, const ExponentSet& lam, Index J, Index K) {
  if (!spec.flags().real_positive) {
    throw std::invalid_argument("gamma_const: spectrum must be real positive");
  }
  if (J < 1 || J > spec.size()) {
    throw std::invalid_argument("gamma_const: J-1 must be a valid index");
  }
  const DiskPoint& z = spec.point(J - 1);
  return std::sqrt(z.defect() * theta(lam, z.r * z.r, K).value);
}

DensityReport log_block_density(const ExponentSet& lam, const Vec& mu_grid,
                                const Vec& t_grid) {
  if (mu_grid.size() < 1 || t_grid.size() < 1) {
    throw std::invalid_argument("log_block_density: empty grid");
  }
  for (Index i = 0; i < mu_grid.size(); ++i) {
    if (!(mu_grid(i) > 1)) throw std::invalid_argument("log_block_density: mu must be > 1");
  }
  for (Index i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid(i) > 0)) throw std::invalid_argument("log_block_density: t must be > 0");
    if (i > 0 && !(t_grid(i) > t_grid(i - 1))) {
      throw std::invalid_argument("log_block_density: t grid must be increasing");
    }
  }

  DensityReport rep;
  rep.mu_grid = mu_grid;
  rep.t_grid = t_grid;
  rep.t_max = t_grid(t_grid.size() - 1);

  const Vec& vals = lam.values();
  const Real lam_max = vals(vals.size() - 1);
  rep.short_materialization_warning = mu_grid.maxCoeff() * rep.t_max > lam_max;

  rep.block_sums.resize(mu_grid.size(), t_grid.size());
  rep.per_mu_sup.resize(mu_grid.size());
  Real L = std::numeric_limits<Real>::infinity();
  for (Index i = 0; i < mu_grid.size(); ++i) {
    Real sup = 0;
    for (Index j = 0; j < t_grid.size(); ++j) {
      const Real t = t_grid(j);
      const Real hi = mu_grid(i) * t;
      const Real* lo_it = std::lower_bound(vals.data(), vals.data() + vals.size(), t);
      const Real* hi_it = std::upper_bound(vals.data(), vals.data() + vals.size(), hi);
      Real sum = 0;
      for (const Real* p = lo_it; p != hi_it; ++p) {
        if (*p > 0) sum += 1 / *p;
      }
      rep.block_sums(i, j) = sum;
      sup = std::max(sup, sum);
    }
    rep.per_mu_sup(i) = sup;
    L = std::min(L, sup / std::log(mu_grid(i)));
  }
  rep.L_estimate = L;

  // running Muntz-Szasz partial sums at power-of-two prefixes
  const MsSumResult full = ms_sum(lam, lam.size(), /*threshold=*/10.0);
  rep.ms_verdict = full.verdict;
  for (Index K = 1; K < lam.size(); K *= 2) {
    rep.ms_partial_sums.push_back(ms_sum(lam, K, 10.0).partial_sum);
  }
  rep.ms_partial_sums.push_back(full.partial_sum);
  return rep;
}

bool block_count_check(const ExponentSet& lam, Index N, Index M, Index k_max) {
  if (N < 1 || M < 1 || k_max < 0) {
    throw std::invalid_argument("block_count_check: N, M must be positive");
  }
  const Vec& vals = lam.values();
  if (!(vals(vals.size() - 1) >= static_cast<Real>(N * (k_max + 1)))) {
    throw std::invalid_argument("block_count_check: Lambda not materialized past N (k_max + 1)");
  }
  for (Index k = 0; k <= k_max; ++k) {
    const Real lo = static_cast<Real>(N * k);
    const Real hi = static_cast<Real>(N * (k + 1));
    const Real* lo_it = std::lower_bound(vals.data(), vals.data() + vals.size(), lo);
    const Real* hi_it = std::lower_bound(vals.data(), vals.data() + vals.size(), hi);
    const Index count = hi_it - lo_it;
    if (count < 1 || count >= M) return false;
  }
  return true;
}

ExponentSet select_subsequence(const ExponentSet& lam, Index N, Index k_max) {
  if (N < 1 || k_max < 0) throw std::invalid_argument("select_subsequence: N must be positive");
  const Vec& vals = lam.values();
  Vec jitters(k_max + 1);
  for (Index k = 0; k <= k_max; ++k) {
    const Real lo = static_cast<Real>(N * k);
    const Real hi = static_cast<Real>(N * (k + 1));
    const Real* it = std::lower_bound(vals.data(), vals.data() + vals.size(), lo);
    if (it == vals.data() + vals.size() || !(*it < hi)) {
      throw NumericError("select_subsequence: empty block at k = " + std::to_string(k));
    }
    jitters(k) = *it - lo;  // smallest element of the block
  }
  return ExponentSet::jittered(N, std::move(jitters));
}

}  // namespace carleson
