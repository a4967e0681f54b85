#include <doctest.h>

#include <random>

#include "carleson/certify.hpp"
#include "oracles.hpp"

using namespace carleson;

namespace {

CarlesonSpectrum antipodal_pair() {
  auto p0 = DiskPoint::from_polar(0.5, 0.0);
  auto p1 = DiskPoint::from_polar(0.5, -3.14159265358979323846);
  return CarlesonSpectrum({p0, p1}, {}, "antipodal");
}

}  // namespace

TEST_CASE("perturbation cutoff search") {
  const CarlesonSpectrum geo = make_geometric_real(0.5, 0.5, 20);

  SUBCASE("huge reference bound gives J = 0") {
    CHECK(perturbation_cutoff(geo, 20, 1e9) == 0);
  }

  SUBCASE("the analytic bound drives the search when available") {
    // 2^{1-J} < A first at J = 9 for A = 5e-3
    const Index J = perturbation_cutoff(geo, 20, 5e-3);
    CHECK(geo.geometric_tail()->defect_tail_bound(J) < 5e-3);
    CHECK(geo.geometric_tail()->defect_tail_bound(J - 1) >= 5e-3);
  }

  SUBCASE("too small a reference fails with a clear signal") {
    CHECK_THROWS_AS(perturbation_cutoff(geo, 20, 1e-9), NumericError);
  }

  SUBCASE("without generator metadata the numeric tail is used") {
    SpectrumFlags flags;
    flags.real_positive = true;
    flags.strictly_increasing_modulus = true;
    std::vector<DiskPoint> pts;
    for (Index j = 0; j < 8; ++j) {
      pts.push_back(DiskPoint::from_polar(geo.point(j).r, 0.0));
    }
    const CarlesonSpectrum plain(pts, flags, "hand-rolled");
    const Index J = perturbation_cutoff(plain, 8, 0.1);
    CHECK(tail_defect(plain, J, 8) < 0.1);
    if (J > 0) CHECK(tail_defect(plain, J - 1, 8) >= 0.1);
  }
}

TEST_CASE("perturbation certificate on the reference spectrum" * doctest::timeout(300)) {
  const CarlesonSpectrum geo = make_geometric_real(0.5, 0.5, 17);
  PerturbationOptions opt;
  opt.K_start = 1 << 16;
  opt.max_cols = 1 << 20;
  opt.rel_tol = 0.1;
  const PerturbationCertificate cert = perturbation_J(geo, 1, 17, opt);
  CHECK(cert.satisfied);
  CHECK(cert.reference_bounds.converged);
  CHECK(cert.tail_value == doctest::Approx(tail_defect(geo, cert.J, 17)).epsilon(1e-15));
  CHECK(cert.tail_value < cert.A_reference);
  // analytic oracle: 2^{1-J} < A_hat
  CHECK(std::pow(2.0, static_cast<Real>(1 - cert.J)) < cert.A_reference);
  CHECK(cert.analytic_tail_bound < cert.A_reference);

  SUBCASE("certificate soundness: rows past J stay bounded below under jitters") {
    const ExponentSet jit = ExponentSet::jittered_random(1, 1 << 18, 5);
    const SynthesisMatrix m =
        synthesis_matrix(geo, jit, cert.J, 17 - cert.J, 1 << 18);
    CHECK(frame_bounds(m).A_hat > 1e-12);
  }

  SUBCASE("a too-short truncation is reported, not silently certified") {
    CHECK_THROWS_AS(perturbation_J(geo, 1, 14, opt), NumericError);
  }
}

TEST_CASE("perturbation estimate chain") {
  const CarlesonSpectrum geo = make_geometric_real(0.5, 0.5, 48);

  SUBCASE("zero jitters collapse the chain") {
    const PerturbationChainReport rep = verify_perturbation_chain(geo, 2, Vec::Zero(64), 5, 48);
    CHECK(rep.coordinate_sum == 0.0);
    CHECK(rep.perturbation_energy == 0.0);
    CHECK(rep.holds);
  }

  SUBCASE("near-extreme jitters stay below the tail") {
    const Index N = 3;
    const PerturbationChainReport rep =
        verify_perturbation_chain(geo, N, Vec::Constant(128, 3.0 - 1e-9), 4, 48);
    CHECK(rep.perturbation_energy <= rep.tail + 1e-12);
    CHECK(rep.coordinate_sum <= rep.tail + 1e-12);
    CHECK(rep.termwise_ok);
    CHECK(rep.holds);
  }

  SUBCASE("random draws never violate the chain") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
      const Index N = 1 + static_cast<Index>(3 * uniform01(rng));
      Vec jit(256);
      for (Index k = 0; k < 256; ++k) jit(k) = static_cast<Real>(N) * uniform01(rng);
      const PerturbationChainReport rep = verify_perturbation_chain(geo, N, jit, 6, 48);
      CHECK(rep.holds);
      CHECK(rep.termwise_ok);
      CHECK(rep.geometric_bound <= rep.tail + 1e-12);
    }
  }

  SUBCASE("jitters outside [0, N) are rejected") {
    CHECK_THROWS_AS(verify_perturbation_chain(geo, 2, Vec::Constant(4, 2.0), 0, 48),
                    std::invalid_argument);
  }
}

TEST_CASE("extension step machinery" * doctest::timeout(300)) {
  const CarlesonSpectrum geo = make_geometric_real(0.5, 0.5, 10);
  const ExponentSet lam = ExponentSet::jittered_random(2, 4096, 42);

  SUBCASE("descent from J = 5 to 1 succeeds with certified inequalities") {
    const auto steps = extension_descent(geo, lam, 5, 10, 4096);
    REQUIRE(steps.size() == 5);
    for (const auto& s : steps) {
      CAPTURE(s.J);
      CHECK(s.success);
      CHECK(s.lower_bound_check > 0.0);
      CHECK(std::abs(s.rho) >= s.lower_bound_check - 1e-9);
      CHECK(s.c_norm <= s.c_bound + 1e-12);
      CHECK(s.fit_max < s.epsilon);
      CHECK(s.off_target_residual <= 1e-8);
      CHECK(s.gamma <= 1.0 + 1e-10);  // integer-dominated jittered exponents
    }

    // extension monotonicity: after the J step the system on rows >= J-1
    // is bounded below
    for (const auto& s : steps) {
      const SynthesisMatrix m = synthesis_matrix(geo, lam, s.J - 1, 10 - (s.J - 1), 4096);
      CHECK(frame_bounds(m).A_hat > 1e-12);
    }
  }

  SUBCASE("a starved support budget reports failure rather than fudging") {
    ExtensionStepOptions opt;
    opt.support = 4;
    const ExtensionStepReport rep = extension_step(geo, lam, 5, 10, 4096, opt);
    CHECK_FALSE(rep.success);
    CHECK(rep.fit_max >= rep.epsilon);
  }

  SUBCASE("preconditions") {
    CHECK_THROWS_AS(extension_step(geo, lam, 0, 10, 4096), std::invalid_argument);
    CHECK_THROWS_AS(extension_step(geo, lam, 10, 10, 4096), std::invalid_argument);
    const CarlesonSpectrum sec = make_sector({0.3, 0.5, 0.7}, 0.2, AngleRule::Alternating);
    CHECK_THROWS_AS(extension_step(sec, lam, 1, 3, 64), std::invalid_argument);
  }
}

TEST_CASE("degenerate spectra") {
  SUBCASE("antipodal pair collides under N = 2") {
    const CarlesonSpectrum bad = antipodal_pair();
    const auto pairs = degenerate_check(bad, 2);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0] == std::pair<Index, Index>{0, 1});
    CHECK(degenerate_check(bad, 1).empty());  // first powers differ

    const CVec f = degenerate_null_vector(bad, pairs[0]);
    const ExponentSet lam = ExponentSet::arithmetic(2, 400);
    const CVec samples = analysis_apply(bad, lam, f, 400);
    CHECK(samples.squaredNorm() < 1e-20 * f.squaredNorm());

    const FrameBoundEstimate fb = frame_bounds(synthesis_matrix(bad, lam, 0, 2, 400));
    CHECK(fb.A_hat < 1e-12);
  }

  SUBCASE("real increasing spectra never collide") {
    const CarlesonSpectrum geo = make_geometric_real(0.5, 0.5, 12);
    for (Index N : {1, 2, 3, 5}) CHECK(degenerate_check(geo, N).empty());
  }

  SUBCASE("null vector construction validates the pair") {
    const CarlesonSpectrum geo = make_geometric_real(0.5, 0.5, 4);
    CHECK_THROWS_AS(degenerate_null_vector(geo, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(degenerate_null_vector(geo, {0, 9}), std::invalid_argument);
  }
}

TEST_CASE("zero set guard") {
  const CarlesonSpectrum geo = make_geometric_real(0.5, 0.5, 8);
  const ExponentSet lam = ExponentSet::jittered_random(2, 256, 13);
  const Index J = 3, n = 8;

  const ZeroSetGuard guard = zero_set_guard(geo, lam, J, n, 256);
  CHECK(guard.kernel_residual < 1e-10);  // c really lies in the truncated kernel

  SUBCASE("safe certifies one more row") {
    if (guard.safe) {
      const SynthesisMatrix m = synthesis_matrix(geo, lam, J - 1, n - (J - 1), 256);
      CHECK(frame_bounds(m).A_hat > 1e-14);
    }
  }

  SUBCASE("theta_c zeros near z_{J-1} are isolated") {
    // scan |theta_c| on a window around z_{J-1}; below-tolerance points
    // must form a few short runs, not intervals
    const Real z0 = geo.point(J - 1).r;
    const Index samples = 2001;
    Index runs = 0, run_len = 0, max_run = 0, below = 0;
    for (Index i = 0; i < samples; ++i) {
      const Real z = z0 - 1e-3 + 2e-3 * static_cast<Real>(i) / (samples - 1);
      Complex acc = 0;
      for (Index k = 0; k < 256; ++k) {
        acc += guard.c(k) * std::pow(z, lam.value(k));
      }
      if (std::abs(acc) < 1e-9) {
        ++below;
        if (run_len == 0) ++runs;
        ++run_len;
        max_run = std::max(max_run, run_len);
      } else {
        run_len = 0;
      }
    }
    CHECK(runs <= 3);
    CHECK(max_run <= 20);
    CHECK(below < samples / 10);
  }

  SUBCASE("redundancy is required") {
    CHECK_THROWS_AS(zero_set_guard(geo, lam, 3, 8, 5), std::invalid_argument);
  }
}

TEST_CASE("completeness certificate and psi growth") {
  std::vector<Real> moduli;
  for (int j = 0; j < 12; ++j) moduli.push_back(1.0 - 0.5 * std::pow(0.5, j));
  const Real c = 3.14159265358979323846 / 8;
  const CarlesonSpectrum sec = make_sector(moduli, c, AngleRule::Alternating);

  Vec mu(4);
  mu << 1.5, 2.0, 3.0, 5.0;
  const ExponentSet naturals = ExponentSet::arithmetic(1, 4096);
  Vec t_grid(32);
  for (Index i = 0; i < 32; ++i) {
    t_grid(i) = 64.0 * std::pow(4095.0 / 5.0 / 64.0, static_cast<Real>(i) / 31.0);
  }
  const DensityReport dens = log_block_density(naturals, mu, t_grid);

  SUBCASE("dense exponents beat the sector angle") {
    const CompletenessCertificate cert = completeness_certificate(sec, dens);
    CHECK(cert.sector_half_angle_c == c);
    CHECK(cert.margin == doctest::Approx(dens.L_estimate - 0.125).epsilon(1e-12));
    CHECK(cert.complete);  // L ~ 1 > 1/8
  }

  SUBCASE("sparse exponents fail the density margin") {
    const ExponentSet dyadic = ExponentSet::dyadic(40);
    const Real lmax = dyadic.value(39);
    Vec t2(32);
    for (Index i = 0; i < 32; ++i) {
      t2(i) = (lmax / 64) * std::pow(64.0 / 5.0, static_cast<Real>(i) / 31.0);
    }
    const CompletenessCertificate cert =
        completeness_certificate(sec, log_block_density(dyadic, mu, t2));
    CHECK_FALSE(cert.complete);
  }

  SUBCASE("real positive spectra act as the degenerate sector") {
    const CarlesonSpectrum geo = make_geometric_real(0.5, 0.5, 8);
    const CompletenessCertificate cert = completeness_certificate(geo, dens);
    CHECK(cert.sector_half_angle_c == 0.0);
    CHECK(cert.complete);
  }

  SUBCASE("psi growth stays under the coefficient mass inside the sector") {
    std::mt19937_64 rng(19);
    CVec b(sec.size());
    for (Index j = 0; j < sec.size(); ++j) {
      b(j) = Complex(2 * uniform01(rng) - 1, 2 * uniform01(rng) - 1);
    }
    Vec y(9);
    y << -40, -20, -10, -1, 0, 1, 10, 20, 40;
    const PsiGrowthReport rep = psi_growth_check(sec, b, c, y, sec.size());
    CHECK(rep.bounded);
    CHECK(rep.max_ratio <= rep.coeff_l1 * (1 + 1e-12) + 1e-12);

    // psi at real omega reproduces the analysis samples <b, D^lambda g>
    const ExponentSet lam = ExponentSet::jittered_random(2, 16, 4);
    const CVec samples = analysis_apply(sec, lam, b, 16);
    for (Index k = 0; k < 16; ++k) {
      const Complex psi = psi_eval(sec, b, Complex(lam.value(k), 0), sec.size());
      CHECK(std::abs(psi - samples(k)) <= 1e-12);
    }
  }
}
