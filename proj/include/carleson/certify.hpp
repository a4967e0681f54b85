#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "carleson/exponents.hpp"
#include "carleson/frame_bounds.hpp"

namespace carleson {

// Certificate that the defect tail past row J drops below the reference
// lower frame bound of the subsampled system, so the projected system on
// span{delta_j : j >= J} inherits a frame bound by perturbation.
struct PerturbationCertificate {
  Index J = 0;
  Real tail_value = 0;        // tail_defect(spec, J, n)
  Real A_reference = 0;       // converged A_hat of the {D^{N k} g} truncation
  Index N = 0;
  bool satisfied = false;
  Index truncation_n = 0;
  // Analytic bound on the full infinite tail past J, when the generator
  // provides one (NaN otherwise). When present it drives the J search, so
  // the certificate covers the rows beyond the truncation as well.
  Real analytic_tail_bound = std::numeric_limits<Real>::quiet_NaN();
  FrameBoundEstimate reference_bounds;
  std::string spectrum_tag;
  std::string exponent_tag;
};

struct PerturbationOptions {
  Index K_start = 256;
  Real growth_factor = 2.0;
  Real rel_tol = 0.05;
  Index max_cols = 1 << 15;
};

PerturbationCertificate perturbation_J(const CarlesonSpectrum& spec, Index N, Index n,
                                       const PerturbationOptions& opt = {});

// Least J <= n whose tail bound (analytic when the generator provides
// one, else the materialized sum) drops below A_reference. Throws
// NumericError when no J qualifies, signalling a truncation too short.
Index perturbation_cutoff(const CarlesonSpectrum& spec, Index n, Real A_reference);

// Truncated evaluation of the perturbation estimate chain bounding
// sum_k ||P_V (D^{N k} - D^{N k + j_k}) g||^2 by the defect tail.
struct PerturbationChainReport {
  Real coordinate_sum = 0;       // sum_{j >= J} |sum_k z^{N k} sqrt(1-z^2)(1-z^{j_k})|^2
  Real perturbation_energy = 0;  // sum_k ||P_V (D^{N k} g - D^{N k + j_k} g)||^2
  Real geometric_bound = 0;      // sum_{j >= J} (1-z^2)(1-z^N)^2 / (1-z^{2N})
  Real tail = 0;                 // tail_defect(spec, J, n)
  bool termwise_ok = false;      // each inequality step holds per row
  bool holds = false;            // both truncated sums below the tail
};

PerturbationChainReport verify_perturbation_chain(const CarlesonSpectrum& spec, Index N,
                                                  const Vec& jitters, Index J, Index n);

struct ExtensionStepOptions {
  Index support = 512;        // size of the Lambda prefix carrying b
  Index tail_grid = 48;       // fit points on [z_{n-1}, 1)
  Index verify_grid = 400;    // independent certification points on [z_{n-1}, 1)
  Real eps_safety = 0.9;      // epsilon = eps_safety * strict upper bound
  Real off_target_tol = 1e-8;
};

// One inductive step of the surjectivity extension: realizes the finitely
// supported b, forms c through the pseudo-inverse composition, and checks
// that the delta_{J-1} coefficient rho clears its lower bound.
struct ExtensionStepReport {
  Index J = 0;
  Real epsilon = 0;
  Vec b;                    // coefficients on the Lambda support prefix
  Vec b_support;            // the exponents carrying b
  Real c_norm = 0;
  Complex rho = 0;          // coefficient of delta_{J-1} in Phi_{Z_{J-1}} (b - c)
  Real off_target_residual = 0;
  Real lower_bound_check = 0;  // 1 - eps - gamma eps M sqrt(B)/A
  bool success = false;
  // diagnostics
  Real fit_max = 0;   // max |theta_b| over the certification points
  Real gamma = 0;
  Real M = 0;
  Real A_hat = 0;
  Real B_hat = 0;
  Real c_bound = 0;   // (sqrt(B)/A) eps M
  Index rows_n = 0;
  Index K_cols = 0;
  std::string spectrum_tag;
  std::string exponent_tag;
};

ExtensionStepReport extension_step(const CarlesonSpectrum& spec, const ExponentSet& lam,
                                   Index J, Index rows_n, Index K_cols,
                                   const ExtensionStepOptions& opt = {});

// Applies extension_step at J_start, J_start - 1, ..., 1, doubling the b
// support on failure up to K_cols. Stops early if a step cannot succeed.
std::vector<ExtensionStepReport> extension_descent(const CarlesonSpectrum& spec,
                                                   const ExponentSet& lam, Index J_start,
                                                   Index rows_n, Index K_cols,
                                                   const ExtensionStepOptions& opt = {});

// Index pairs with z_k^N == z_l^N to within tol; any hit predicts frame
// failure for Lambda = N N_0.
std::vector<std::pair<Index, Index>> degenerate_check(const CarlesonSpectrum& spec,
                                                      Index N, Real tol = 1e-12);

// The explicit null direction g_l delta_k - g_k delta_l for a detected pair.
CVec degenerate_null_vector(const CarlesonSpectrum& spec, std::pair<Index, Index> pair);

// Kernel-vector guard for extending an outer frame by one row: evaluates
// theta_c at z_{J-1} for a kernel vector c of the row-truncated synthesis.
// safe = false is a valid report (z_{J-1} may sit near the zero set of theta_c).
struct ZeroSetGuard {
  Complex theta_c_value = 0;
  bool safe = false;
  Real kernel_residual = 0;  // ||Phi c|| / ||c||
  CVec c;
  Index J = 0;
  Index rows_n = 0;
  Index K_cols = 0;
  std::string spectrum_tag;
  std::string exponent_tag;
};

ZeroSetGuard zero_set_guard(const CarlesonSpectrum& spec, const ExponentSet& lam, Index J,
                            Index rows_n, Index K_cols, Real tol = 1e-8);

// Completeness certificate for sector spectra: L(Lambda) > c / pi.
struct CompletenessCertificate {
  Real sector_half_angle_c = 0;
  Real L_estimate = 0;
  Real margin = 0;  // L_estimate - c / pi
  bool complete = false;
};

CompletenessCertificate completeness_certificate(const CarlesonSpectrum& spec,
                                                 const DensityReport& density);

// psi(omega) = sum_j b_j sqrt(1-|z_j|^2) e^{omega (log r_j - i theta_j)},
// the entire function whose zeros on Lambda witness incompleteness.
Complex psi_eval(const CarlesonSpectrum& spec, const Eigen::Ref<const CVec>& b,
                 Complex omega, Index n);

// Checks |psi(i y)| <= ||beta||_1 e^{c |y|} on a grid of imaginary heights.
struct PsiGrowthReport {
  Real coeff_l1 = 0;    // ||beta||_1
  Real max_ratio = 0;   // max |psi(i y)| e^{-c |y|}
  bool bounded = false;
};

PsiGrowthReport psi_growth_check(const CarlesonSpectrum& spec,
                                 const Eigen::Ref<const CVec>& b, Real c,
                                 const Vec& y_grid, Index n);

}  // namespace carleson
