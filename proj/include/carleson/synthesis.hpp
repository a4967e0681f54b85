#pragma once

#include <string>

#include "carleson/exponent_set.hpp"
#include "carleson/spectrum.hpp"

namespace carleson {

// z^lambda = exp(lambda (log r + i theta)) with the stored representative
// theta in [-pi, pi). One fixed branch, so power(z, a + b) = power(z, a) * power(z, b).
Complex power(const DiskPoint& z, Real lambda);

// Finite truncation of the synthesis matrix Phi: entry(j, k) =
// z_{row_offset + j}^{lambda_k} sqrt(1 - |z_{row_offset + j}|^2).
// Rows correspond to coordinates of the spectrum with the first
// row_offset points removed.
struct SynthesisMatrix {
  CMat entries;
  Index row_offset = 0;
  std::string spectrum_tag;
  std::string exponent_tag;

  Index rows() const { return entries.rows(); }
  Index cols() const { return entries.cols(); }
};

SynthesisMatrix synthesis_matrix(const CarlesonSpectrum& spec, const ExponentSet& lam,
                                 Index row_offset, Index J_rows, Index K_cols);

// Analysis samples ( <f, D^{lambda_k} g> )_{k < K} for f supported on the
// leading spectrum coordinates.
CVec analysis_apply(const CarlesonSpectrum& spec, const ExponentSet& lam,
                    const Eigen::Ref<const CVec>& f, Index K);

}  // namespace carleson
