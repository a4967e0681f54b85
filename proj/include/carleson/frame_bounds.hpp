#pragma once

#include <utility>
#include <vector>

#include "carleson/synthesis.hpp"

namespace carleson {

// Numerical frame-bound estimate from the extreme singular values of a
// truncated synthesis matrix: A_hat = sigma_min^2, B_hat = sigma_max^2.
// A_hat is nondecreasing in K_cols for fixed rows; B_hat is nondecreasing
// in K_cols for nested truncations.
struct FrameBoundEstimate {
  Real A_hat = 0;
  Real B_hat = 0;
  Index J_rows = 0;
  Index K_cols = 0;
  bool converged = false;
  std::vector<std::pair<Index, Real>> history;  // (K, A_hat) per growth step
};

FrameBoundEstimate frame_bounds(const SynthesisMatrix& m);

// Grows the column truncation geometrically until A_hat moves by less
// than rel_tol across one growth step, or max_cols is reached (in which
// case converged stays false -- the signature of a likely non-frame).
FrameBoundEstimate frame_bounds_converged(const CarlesonSpectrum& spec,
                                          const ExponentSet& lam, Index J_rows,
                                          Index K_start, Real growth_factor,
                                          Real rel_tol, Index max_cols = 1 << 15,
                                          Index row_offset = 0);

// Minimal-norm least-squares solve of (analysis of f) = samples over the
// truncated coordinate space. Throws NumericError when the truncated
// frame is rank deficient, reporting the offending sigma_min.
CVec reconstruct(const Eigen::Ref<const CVec>& samples, const SynthesisMatrix& m);

// Extreme singular values of a dense complex matrix, descending order
// convention: first = largest, second = smallest.
std::pair<Real, Real> extreme_singular_values(const CMat& m);

}  // namespace carleson
