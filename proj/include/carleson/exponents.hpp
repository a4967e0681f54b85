#pragma once

#include <optional>
#include <vector>

#include "carleson/exponent_set.hpp"
#include "carleson/spectrum.hpp"

namespace carleson {

// Partial sums cannot certify convergence, so the verdict is either an
// analytic divergence (structured kinds), a numeric threshold crossing,
// or inconclusive.
enum class MsVerdict { DivergentAnalytic, DivergentNumericThreshold, Inconclusive };

const char* ms_verdict_name(MsVerdict v);

struct MsSumResult {
  Real partial_sum = 0;
  MsVerdict verdict = MsVerdict::Inconclusive;
};

// Generalized Muntz-Szasz sum: sum_{k < K, lambda_k > 0} lambda_k / (lambda_k^2 + 1).
MsSumResult ms_sum(const ExponentSet& lam, Index K, Real threshold);

struct ThetaEstimate {
  Real value = 0;
  // Analytic bound on the omitted tail, available for jittered-arithmetic
  // sets: sum_{k >= K} z^{lambda_k} <= z^{N K} / (1 - z^N).
  std::optional<Real> tail_bound;
};

// theta(z) = sum_{k < K} z^{lambda_k} on [0, 1), with 0^0 := 1.
ThetaEstimate theta(const ExponentSet& lam, Real z, Index K);

// max over the grid of (1 - z) theta(z); <= 1 for distinct nonnegative
// integer exponent sets.
Real theta_sup_check(const ExponentSet& lam, const Vec& grid);

// gamma = sqrt((1 - z_{J-1}^2) theta(z_{J-1}^2)); <= 1 for integer Lambda.
Real gamma_const(const CarlesonSpectrum& spec, const ExponentSet& lam, Index J, Index K);

struct DensityReport {
  std::vector<Real> ms_partial_sums;  // running MS sums at power-of-two prefixes
  MsVerdict ms_verdict = MsVerdict::Inconclusive;
  Real L_estimate = 0;
  Vec mu_grid;
  Vec t_grid;
  Real t_max = 0;
  Vec per_mu_sup;
  Mat block_sums;  // (mu, t) table of sum_{lambda in [t, mu t]} 1/lambda
  bool short_materialization_warning = false;
};

// Finite-grid estimate of the logarithmic block density
// L(Lambda) = inf_{mu>1} (1/log mu) limsup_t sum_{lambda in [t, mu t]} 1/lambda,
// via max over t_grid then min over mu_grid. The full table is reported
// so runs are reproducible bit for bit.
DensityReport log_block_density(const ExponentSet& lam, const Vec& mu_grid,
                                const Vec& t_grid);

// True iff every block [N k, N (k+1)), k <= k_max, holds at least one and
// fewer than M points of Lambda.
bool block_count_check(const ExponentSet& lam, Index N, Index M, Index k_max);

// Smallest element of each block [N k, N (k+1)), forming a
// jittered-arithmetic subsequence. Throws NumericError on an empty block.
ExponentSet select_subsequence(const ExponentSet& lam, Index N, Index k_max);

}  // namespace carleson
