#include "carleson/certify.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace carleson {

namespace {

constexpr Real kPi = 3.14159265358979323846264338327950288;

void require_real_increasing(const CarlesonSpectrum& spec, const char* who) {
  if (!spec.flags().real_positive || !spec.flags().strictly_increasing_modulus) {
    throw std::invalid_argument(std::string(who) +
                                ": spectrum must be real positive with increasing moduli");
  }
}

// Geometric grid of points approaching 1 from z_lo, parameterized by the
// defect 1 - z shrinking down to defect_min.
std::vector<Real> tail_grid(Real z_lo, Real defect_min, Index count) {
  std::vector<Real> pts;
  pts.reserve(static_cast<size_t>(count));
  const Real d0 = 1 - z_lo;
  const Real step = std::pow(defect_min / d0, Real(1) / static_cast<Real>(count - 1));
  Real d = d0;
  for (Index i = 0; i < count; ++i) {
    pts.push_back(1 - d);
    d *= step;
  }
  return pts;
}

Real eval_theta_at(const Vec& coef, const Vec& lams, Real z) {
  const Real logz = std::log(z);
  Real acc = 0;
  for (Index s = 0; s < coef.size(); ++s) acc += coef(s) * std::exp(lams(s) * logz);
  return acc;
}

}  // namespace

PerturbationCertificate perturbation_J(const CarlesonSpectrum& spec, Index N, Index n,
                                       const PerturbationOptions& opt) {
  require_real_increasing(spec, "perturbation_J");
  if (N < 1) throw std::invalid_argument("perturbation_J: N must be positive");
  if (n < 1 || n > spec.size()) {
    throw std::invalid_argument("perturbation_J: n outside materialized range");
  }

  const ExponentSet lam = ExponentSet::arithmetic(N, opt.max_cols);
  FrameBoundEstimate fb = frame_bounds_converged(spec, lam, n, opt.K_start,
                                                 opt.growth_factor, opt.rel_tol,
                                                 opt.max_cols);
  const Real A = fb.A_hat;
  const Index J = perturbation_cutoff(spec, n, A);
  const auto gen_tail = spec.geometric_tail();

  PerturbationCertificate cert;
  cert.J = J;
  cert.tail_value = tail_defect(spec, J, n);
  cert.A_reference = A;
  cert.N = N;
  cert.satisfied = cert.tail_value < A;
  cert.truncation_n = n;
  if (gen_tail) cert.analytic_tail_bound = gen_tail->defect_tail_bound(J);
  cert.reference_bounds = std::move(fb);
  cert.spectrum_tag = spec.generator_tag();
  cert.exponent_tag = lam.descriptor();
  return cert;
}

Index perturbation_cutoff(const CarlesonSpectrum& spec, Index n, Real A_reference) {
  if (n < 1 || n > spec.size()) {
    throw std::invalid_argument("perturbation_cutoff: n outside materialized range");
  }
  const auto gen_tail = spec.geometric_tail();
  for (Index j = 0; j <= n; ++j) {
    // The analytic bound, when the generator provides one, covers the full
    // infinite tail; the materialized sum covers only rows below n and is
    // vacuous at j = n.
    if (!gen_tail && j == n) break;
    const Real bound = gen_tail ? gen_tail->defect_tail_bound(j)
                                : tail_defect(spec, j, n);
    if (bound < A_reference) return j;
  }
  throw NumericError(
      "perturbation_cutoff: no J <= n satisfies the tail bound (truncation too short)");
}

PerturbationChainReport verify_perturbation_chain(const CarlesonSpectrum& spec, Index N,
                                                  const Vec& jitters, Index J, Index n) {
  require_real_increasing(spec, "verify_perturbation_chain");
  if (N < 1) throw std::invalid_argument("verify_perturbation_chain: N must be positive");
  if (J < 0 || J > n || n > spec.size()) {
    throw std::invalid_argument("verify_perturbation_chain: require 0 <= J <= n <= size");
  }
  for (Index k = 0; k < jitters.size(); ++k) {
    if (!(jitters(k) >= 0) || !(jitters(k) < static_cast<Real>(N))) {
      throw std::invalid_argument("verify_perturbation_chain: jitters must lie in [0, N)");
    }
  }

  PerturbationChainReport rep;
  bool termwise = true;
  for (Index j = J; j < n; ++j) {
    const Real z = spec.point(j).r;
    const Real d = spec.point(j).defect();
    const Real zN = std::pow(z, static_cast<Real>(N));
    Real s1 = 0;  // sum_k z^{N k} (1 - z^{j_k})
    Real s2 = 0;  // sum_k z^{2 N k} (1 - z^{j_k})^2
    Real p = 1;   // z^{N k}
    for (Index k = 0; k < jitters.size(); ++k) {
      const Real w = 1 - std::pow(z, jitters(k));
      s1 += p * w;
      s2 += p * p * w * w;
      p *= zN;
    }
    rep.coordinate_sum += d * s1 * s1;
    rep.perturbation_energy += d * s2;
    const Real geo = (1 - zN) * (1 - zN) / ((1 - zN) * (1 + zN));
    rep.geometric_bound += d * geo;
    const Real slack = 1e-12 * std::max<Real>(1, geo);
    if (!(s2 <= geo + slack) || !(geo <= 1 + 1e-12)) termwise = false;
  }
  rep.tail = tail_defect(spec, J, n);
  rep.termwise_ok = termwise;
  const Real tol = 1e-12 * std::max<Real>(1, rep.tail);
  rep.holds = termwise && rep.coordinate_sum <= rep.tail + tol &&
              rep.perturbation_energy <= rep.tail + tol;
  return rep;
}

ExtensionStepReport extension_step(const CarlesonSpectrum& spec, const ExponentSet& lam,
                                   Index J, Index rows_n, Index K_cols,
                                   const ExtensionStepOptions& opt) {
  require_real_increasing(spec, "extension_step");
  if (J < 1 || J >= rows_n || rows_n > spec.size()) {
    throw std::invalid_argument("extension_step: require 1 <= J < rows_n <= size");
  }
  if (K_cols < 2 || K_cols > lam.size()) {
    throw std::invalid_argument("extension_step: K_cols outside materialized exponents");
  }
  const Index S = std::min<Index>(opt.support, K_cols);
  if (S < 2) throw std::invalid_argument("extension_step: support must be >= 2");

  ExtensionStepReport rep;
  rep.J = J;
  rep.rows_n = rows_n;
  rep.K_cols = K_cols;
  rep.spectrum_tag = spec.generator_tag();
  rep.exponent_tag = lam.descriptor();

  // Outer frame bounds of the row-truncated system.
  const SynthesisMatrix m = synthesis_matrix(spec, lam, J, rows_n - J, K_cols);
  const auto [smax, smin] = extreme_singular_values(m.entries);
  rep.A_hat = smin * smin;
  rep.B_hat = smax * smax;
  if (!(rep.A_hat > 0)) {
    throw NumericError("extension_step: outer frame not bounded below on rows >= J");
  }
  rep.M = std::sqrt(tail_defect(spec, 0, rows_n));
  rep.gamma = gamma_const(spec, lam, J, K_cols);
  const Real ratio = std::sqrt(rep.B_hat) / rep.A_hat;
  rep.epsilon = opt.eps_safety * Real(0.5) / (1 + rep.gamma * rep.M * ratio);

  const Real zJ1 = spec.point(J - 1).r;
  const Real gJ1 = std::sqrt(spec.point(J - 1).defect());
  const Vec lamS = lam.values().head(S);
  rep.b_support = lamS;

  // Fit points: the spectrum rows past J plus a geometric defect grid
  // filling [z_{rows_n - 1}, 1).
  std::vector<Real> fit_pts;
  for (Index j = J; j < rows_n; ++j) fit_pts.push_back(spec.point(j).r);
  for (Real p : tail_grid(spec.point(rows_n - 1).r, 1e-12, opt.tail_grid)) {
    if (p > fit_pts.back()) fit_pts.push_back(p);
  }
  const Index P = static_cast<Index>(fit_pts.size());

  Mat G(P, S);
  for (Index p = 0; p < P; ++p) {
    const Real logz = std::log(fit_pts[static_cast<size_t>(p)]);
    for (Index s = 0; s < S; ++s) G(p, s) = std::exp(lamS(s) * logz);
  }
  Vec a0(S);
  {
    const Real logz = std::log(zJ1);
    for (Index s = 0; s < S; ++s) a0(s) = gJ1 * std::exp(lamS(s) * logz);
  }

  // Equality-constrained least squares via a Householder reflection H with
  // H a0 || e_0: write b = b0 + Z y with a0^T b0 = 1 and Z spanning the
  // constraint null space, then minimize ||G b|| over y.
  Vec v = a0;
  v(0) += std::copysign(a0.norm(), a0(0));
  v.normalize();
  Vec He0 = -2 * v(0) * v;
  He0(0) += 1;
  const Vec b0 = He0 / a0.dot(He0);
  const Mat GH = G - 2 * (G * v) * v.transpose();
  Eigen::JacobiSVD<Mat> fit_svd(GH.rightCols(S - 1),
                                Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vec y = fit_svd.solve(-(G * b0));
  Vec w = Vec::Zero(S);
  w.tail(S - 1) = y;
  rep.b = b0 + w - 2 * v * v.dot(w);

  // Certify the fit on an independent, denser grid.
  Real fit_max = 0;
  for (Index j = J; j < rows_n; ++j) {
    fit_max = std::max(fit_max, std::abs(eval_theta_at(rep.b, lamS, spec.point(j).r)));
  }
  for (Real p : tail_grid(spec.point(rows_n - 1).r, 1e-13, opt.verify_grid)) {
    fit_max = std::max(fit_max, std::abs(eval_theta_at(rep.b, lamS, p)));
  }
  rep.fit_max = fit_max;
  const bool fit_ok = fit_max < rep.epsilon;

  // c = Phi^* (Phi Phi^*)^{-1} Phi b, the minimal-norm preimage of Phi b.
  CVec b_ext = CVec::Zero(K_cols);
  b_ext.head(S) = rep.b.cast<Complex>();
  const CVec target = m.entries * b_ext;
  Eigen::JacobiSVD<CMat> msvd(m.entries, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const CVec c = msvd.solve(target);
  rep.c_norm = c.norm();
  rep.c_bound = ratio * rep.epsilon * rep.M;

  const Real theta_b_at = eval_theta_at(rep.b, lamS, zJ1);
  Complex theta_c_at = 0;
  {
    const Real logz = std::log(zJ1);
    for (Index k = 0; k < K_cols; ++k) {
      theta_c_at += c(k) * std::exp(lam.value(k) * logz);
    }
  }
  rep.rho = gJ1 * (Complex(theta_b_at, 0) - theta_c_at);
  rep.off_target_residual = (m.entries * (b_ext - c)).norm();
  rep.lower_bound_check = 1 - rep.epsilon - rep.gamma * rep.epsilon * rep.M * ratio;

  rep.success = fit_ok && rep.lower_bound_check > 0 &&
                std::abs(rep.rho) >= rep.lower_bound_check - 1e-9 &&
                rep.c_norm <= rep.c_bound + kDefaultTol &&
                rep.off_target_residual <= opt.off_target_tol;
  return rep;
}

std::vector<ExtensionStepReport> extension_descent(const CarlesonSpectrum& spec,
                                                   const ExponentSet& lam, Index J_start,
                                                   Index rows_n, Index K_cols,
                                                   const ExtensionStepOptions& opt) {
  std::vector<ExtensionStepReport> steps;
  for (Index J = J_start; J >= 1; --J) {
    ExtensionStepOptions o = opt;
    ExtensionStepReport rep = extension_step(spec, lam, J, rows_n, K_cols, o);
    while (!rep.success && 2 * o.support <= K_cols) {
      o.support *= 2;  // caller-side support escalation
      rep = extension_step(spec, lam, J, rows_n, K_cols, o);
    }
    steps.push_back(rep);
    if (!rep.success) break;
  }
  return steps;
}

std::vector<std::pair<Index, Index>> degenerate_check(const CarlesonSpectrum& spec,
                                                      Index N, Real tol) {
  if (N < 1) throw std::invalid_argument("degenerate_check: N must be positive");
  std::vector<std::pair<Index, Index>> pairs;
  std::vector<Complex> zn(static_cast<size_t>(spec.size()));
  for (Index j = 0; j < spec.size(); ++j) {
    zn[static_cast<size_t>(j)] = power(spec.point(j), static_cast<Real>(N));
  }
  for (Index k = 0; k < spec.size(); ++k) {
    for (Index l = k + 1; l < spec.size(); ++l) {
      if (std::abs(zn[static_cast<size_t>(k)] - zn[static_cast<size_t>(l)]) < tol) {
        pairs.emplace_back(k, l);
      }
    }
  }
  return pairs;
}

CVec degenerate_null_vector(const CarlesonSpectrum& spec, std::pair<Index, Index> pair) {
  const auto [k, l] = pair;
  if (k < 0 || l < 0 || k >= spec.size() || l >= spec.size() || k == l) {
    throw std::invalid_argument("degenerate_null_vector: bad index pair");
  }
  CVec f = CVec::Zero(spec.size());
  // <f, D^{Nm} g> = conj(z_k^{Nm}) (f_k g_k + f_l g_l) when z_k^N = z_l^N
  f(k) = Complex(std::sqrt(spec.point(l).defect()), 0);
  f(l) = Complex(-std::sqrt(spec.point(k).defect()), 0);
  return f;
}

ZeroSetGuard zero_set_guard(const CarlesonSpectrum& spec, const ExponentSet& lam, Index J,
                            Index rows_n, Index K_cols, Real tol) {
  if (J < 1 || J >= rows_n || rows_n > spec.size()) {
    throw std::invalid_argument("zero_set_guard: require 1 <= J < rows_n <= size");
  }
  if (K_cols <= rows_n - J) {
    throw std::invalid_argument("zero_set_guard: truncation must be redundant (K > rows)");
  }
  const SynthesisMatrix m = synthesis_matrix(spec, lam, J, rows_n - J, K_cols);
  Eigen::JacobiSVD<CMat> svd(m.entries, Eigen::ComputeFullV);
  ZeroSetGuard guard;
  guard.J = J;
  guard.rows_n = rows_n;
  guard.K_cols = K_cols;
  guard.spectrum_tag = spec.generator_tag();
  guard.exponent_tag = lam.descriptor();
  // Right singular vectors past the row count span the truncated kernel.
  guard.c = svd.matrixV().col(K_cols - 1);
  guard.kernel_residual = (m.entries * guard.c).norm() / guard.c.norm();
  const DiskPoint& zJ1 = spec.point(J - 1);
  Complex acc = 0;
  for (Index k = 0; k < K_cols; ++k) acc += guard.c(k) * power(zJ1, lam.value(k));
  guard.theta_c_value = acc;
  guard.safe = std::abs(acc) > tol;
  return guard;
}

CompletenessCertificate completeness_certificate(const CarlesonSpectrum& spec,
                                                 const DensityReport& density) {
  CompletenessCertificate cert;
  if (spec.flags().sector_half_angle_c) {
    cert.sector_half_angle_c = *spec.flags().sector_half_angle_c;
  } else if (spec.flags().real_positive) {
    cert.sector_half_angle_c = 0;
  } else {
    throw std::invalid_argument(
        "completeness_certificate: spectrum carries no sector half angle");
  }
  cert.L_estimate = density.L_estimate;
  cert.margin = cert.L_estimate - cert.sector_half_angle_c / kPi;
  cert.complete = cert.margin > 0;
  return cert;
}

Complex psi_eval(const CarlesonSpectrum& spec, const Eigen::Ref<const CVec>& b,
                 Complex omega, Index n) {
  if (n < 1 || n > spec.size() || b.size() < n) {
    throw std::invalid_argument("psi_eval: truncation outside materialized range");
  }
  Complex acc = 0;
  for (Index j = 0; j < n; ++j) {
    const DiskPoint& z = spec.point(j);
    const Complex exponent = omega * Complex(std::log(z.r), -z.theta);
    acc += b(j) * std::sqrt(z.defect()) * std::exp(exponent);
  }
  return acc;
}

PsiGrowthReport psi_growth_check(const CarlesonSpectrum& spec,
                                 const Eigen::Ref<const CVec>& b, Real c,
                                 const Vec& y_grid, Index n) {
  if (!(c >= 0) || !(c < kPi)) {
    throw std::invalid_argument("psi_growth_check: c must lie in [0, pi)");
  }
  if (n < 1 || n > spec.size() || b.size() < n) {
    throw std::invalid_argument("psi_growth_check: truncation outside materialized range");
  }
  PsiGrowthReport rep;
  for (Index j = 0; j < n; ++j) {
    rep.coeff_l1 += std::abs(b(j)) * std::sqrt(spec.point(j).defect());
  }
  for (Index i = 0; i < y_grid.size(); ++i) {
    const Real y = y_grid(i);
    const Real ratio = std::abs(psi_eval(spec, b, Complex(0, y), n)) *
                       std::exp(-c * std::abs(y));
    rep.max_ratio = std::max(rep.max_ratio, ratio);
  }
  rep.bounded = rep.max_ratio <= rep.coeff_l1 * (1 + 1e-12) + 1e-12;
  return rep;
}

}  // namespace carleson
