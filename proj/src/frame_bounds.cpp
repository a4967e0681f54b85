#include "carleson/frame_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/SVD>

namespace carleson {

std::pair<Real, Real> extreme_singular_values(const CMat& m) {
  const Index mindim = std::min(m.rows(), m.cols());
  Vec svals;
  if (mindim <= 96) {
    Eigen::JacobiSVD<CMat> svd(m);
    svals = svd.singularValues();
  } else {
    Eigen::BDCSVD<CMat> svd(m);
    svals = svd.singularValues();
  }
  return {svals(0), svals(svals.size() - 1)};
}

FrameBoundEstimate frame_bounds(const SynthesisMatrix& m) {
  if (m.entries.size() == 0) throw std::invalid_argument("frame_bounds: empty matrix");
  const auto [smax, smin] = extreme_singular_values(m.entries);
  FrameBoundEstimate est;
  est.A_hat = smin * smin;
  est.B_hat = smax * smax;
  est.J_rows = m.rows();
  est.K_cols = m.cols();
  est.history.emplace_back(m.cols(), est.A_hat);
  return est;
}

FrameBoundEstimate frame_bounds_converged(const CarlesonSpectrum& spec,
                                          const ExponentSet& lam, Index J_rows,
                                          Index K_start, Real growth_factor,
                                          Real rel_tol, Index max_cols,
                                          Index row_offset) {
  if (!(rel_tol > 0)) throw std::invalid_argument("frame_bounds_converged: rel_tol must be > 0");
  if (!(growth_factor > 1)) {
    throw std::invalid_argument("frame_bounds_converged: growth_factor must be > 1");
  }
  if (K_start < 1) throw std::invalid_argument("frame_bounds_converged: K_start must be >= 1");
  const Index cap = std::min<Index>(max_cols, lam.size());
  if (K_start > cap) {
    throw std::invalid_argument("frame_bounds_converged: K_start exceeds materialized cap");
  }

  FrameBoundEstimate est = frame_bounds(synthesis_matrix(spec, lam, row_offset, J_rows, K_start));
  std::vector<std::pair<Index, Real>> history = est.history;
  Index K = K_start;
  while (K < cap) {
    const Index K_next =
        std::min<Index>(cap, std::max<Index>(K + 1, static_cast<Index>(
                                                        std::ceil(static_cast<Real>(K) * growth_factor))));
    FrameBoundEstimate next =
        frame_bounds(synthesis_matrix(spec, lam, row_offset, J_rows, K_next));
    history.emplace_back(K_next, next.A_hat);
    const Real denom = std::max(est.A_hat, std::numeric_limits<Real>::min());
    const bool settled = std::abs(next.A_hat - est.A_hat) / denom < rel_tol;
    est = next;
    K = K_next;
    if (settled) {
      est.converged = true;
      break;
    }
  }
  est.history = history;
  return est;
}

CVec reconstruct(const Eigen::Ref<const CVec>& samples, const SynthesisMatrix& m) {
  if (m.entries.size() == 0) throw std::invalid_argument("reconstruct: empty matrix");
  if (samples.size() != m.cols()) {
    throw std::invalid_argument("reconstruct: sample count does not match truncation");
  }
  // analysis map = Phi^H : coordinates -> samples
  const CMat analysis = m.entries.adjoint();
  Eigen::JacobiSVD<CMat> svd(analysis, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vec& sv = svd.singularValues();
  const Real smin = sv(sv.size() - 1);
  const Real thresh = std::numeric_limits<Real>::epsilon() *
                      static_cast<Real>(std::max(analysis.rows(), analysis.cols())) * sv(0);
  if (!(smin > thresh)) {
    throw NumericError("reconstruct: rank-deficient truncated frame, sigma_min = " +
                       std::to_string(smin));
  }
  return svd.solve(samples);
}

}  // namespace carleson
