#include <doctest.h>

#include <random>

#include "carleson/spectrum.hpp"
#include "oracles.hpp"

using namespace carleson;

TEST_CASE("disk point construction and angle normalization") {
  const DiskPoint p = DiskPoint::from_polar(0.5, 3 * 3.14159265358979323846 / 2);
  CHECK(p.theta == doctest::Approx(-3.14159265358979323846 / 2).epsilon(1e-14));
  CHECK(p.r == 0.5);
  CHECK(std::abs(p.re - p.r * std::cos(p.theta)) <= 1e-14 * p.r);
  CHECK(std::abs(p.im - p.r * std::sin(p.theta)) <= 1e-14 * p.r);

  // pi maps to the representative -pi
  CHECK(DiskPoint::from_polar(0.3, 3.14159265358979323846).theta < 0);

  CHECK_THROWS_AS(DiskPoint::from_polar(0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(DiskPoint::from_polar(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(DiskPoint::from_polar(1.2, 0.0), std::invalid_argument);

  const DiskPoint q = DiskPoint::from_complex(Complex(0.3, -0.4));
  CHECK(q.r == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(q.value().real() == doctest::Approx(0.3).epsilon(1e-14));
}

TEST_CASE("pseudo-hyperbolic metric") {
  // denominator is 1 when one point is the origin
  CHECK(pseudo_hyperbolic(Complex(0, 0), Complex(0.5, 0)) == doctest::Approx(0.5));
  CHECK(pseudo_hyperbolic(Complex(0.3, 0.2), Complex(0.3, 0.2)) == 0.0);
  // 0.4 / 0.55, frozen from the extended-precision oracle
  CHECK(pseudo_hyperbolic(Complex(0.5, 0), Complex(0.9, 0)) ==
        doctest::Approx(0.7272727272727273).epsilon(1e-15));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex z = std::polar(uniform01(rng) * 0.999, 6.28 * uniform01(rng) - 3.14);
    const Complex w = std::polar(uniform01(rng) * 0.999, 6.28 * uniform01(rng) - 3.14);
    const Real d = pseudo_hyperbolic(z, w);
    CHECK(d >= 0.0);
    CHECK(d < 1.0);
    CHECK(d == doctest::Approx(pseudo_hyperbolic(w, z)).epsilon(1e-13));
    if (z != w) CHECK(d > 0.0);
  }
  CHECK_THROWS_AS(pseudo_hyperbolic(Complex(1.0, 0), Complex(0, 0)),
                  std::invalid_argument);
}

TEST_CASE("spectrum invariants enforced on construction") {
  auto pt = [](Real r, Real th) { return DiskPoint::from_polar(r, th); };

  CHECK_THROWS_AS(CarlesonSpectrum({}, {}, "empty"), std::invalid_argument);

  SpectrumFlags rp;
  rp.real_positive = true;
  CHECK_THROWS_AS(CarlesonSpectrum({pt(0.5, 0.1)}, rp, "bad"), std::invalid_argument);

  SpectrumFlags inc;
  inc.strictly_increasing_modulus = true;
  CHECK_THROWS_AS(CarlesonSpectrum({pt(0.5, 0), pt(0.5, 0.3)}, inc, "bad"),
                  std::invalid_argument);

  SpectrumFlags sec;
  sec.sector_half_angle_c = 0.1;
  CHECK_THROWS_AS(CarlesonSpectrum({pt(0.5, 0.2)}, sec, "bad"), std::invalid_argument);
  CHECK_NOTHROW(CarlesonSpectrum({pt(0.5, 0.05)}, sec, "ok"));
}

TEST_CASE("carleson delta: frozen values and brute-force oracle") {
  SpectrumFlags flags;
  flags.real_positive = true;
  flags.strictly_increasing_modulus = true;
  auto pt = [](Real r) { return DiskPoint::from_polar(r, 0); };

  const CarlesonSpectrum single({pt(0.5)}, flags, "single");
  const CarlesonDeltaEstimate one = carleson_delta(single, 1);
  CHECK(one.delta_n == 1.0);  // empty product

  const CarlesonSpectrum two({pt(0.25), pt(0.75)}, flags, "pair");
  const CarlesonDeltaEstimate est = carleson_delta(two, 2);
  // 0.5 / 0.8125 = 8/13, frozen from the scalar oracle
  CHECK(est.delta_n == doctest::Approx(0.6153846153846154).epsilon(1e-15));
  CHECK(est.per_k_products(0) == doctest::Approx(est.per_k_products(1)).epsilon(1e-15));

  const CarlesonSpectrum geo = make_geometric_real(0.5, 0.5, 20);
  const CarlesonDeltaEstimate d20 = carleson_delta(geo, 20);
  const auto zs = oracles::geometric_points(0.5L, 0.5L, 20);
  CHECK(d20.delta_n ==
        doctest::Approx(static_cast<Real>(oracles::carleson_delta_brute(zs))).epsilon(1e-12));
  // frozen from the extended-precision oracle
  CHECK(d20.delta_n == doctest::Approx(0.014829531235271082).epsilon(1e-12));

  SUBCASE("monotone non-increasing in the truncation") {
    Real prev = 2;
    for (Index n = 1; n <= 20; ++n) {
      const Real d = carleson_delta(geo, n).delta_n;
      CHECK(d <= prev + 1e-15);
      CHECK(d > 0.0);
      CHECK(d <= 1.0);
      prev = d;
    }
  }

  SUBCASE("coincident points are an error") {
    SpectrumFlags none;
    const CarlesonSpectrum bad({pt(0.5), pt(0.5)}, none, "coincident");
    CHECK_THROWS_AS(carleson_delta(bad, 2), NumericError);
  }
}

TEST_CASE("tail defect") {
  SpectrumFlags flags;
  flags.real_positive = true;
  const CarlesonSpectrum one({DiskPoint::from_polar(0.6, 0)}, flags, "one");
  CHECK(tail_defect(one, 0, 1) == doctest::Approx(0.64).epsilon(1e-15));
  CHECK(tail_defect(one, 1, 1) == 0.0);  // empty sum

  const CarlesonSpectrum geo = make_geometric_real(0.5, 0.5, 40);
  SUBCASE("matches the geometric closed form and the analytic bound") {
    for (Index J : {0, 3, 7, 12}) {
      const Real t = tail_defect(geo, J, 40);
      const Real closed =
          static_cast<Real>(oracles::geometric_defect_sum(0.5L, 0.5L, static_cast<int>(J), 40));
      CHECK(t == doctest::Approx(closed).epsilon(1e-13));
      CHECK(t <= std::pow(2.0, static_cast<Real>(1 - J)));
      CHECK(t <= geo.geometric_tail()->defect_tail_bound(J));
    }
  }
  SUBCASE("nondecreasing in n") {
    Real prev = 0;
    for (Index n = 0; n <= 40; ++n) {
      const Real t = tail_defect(geo, 0, n);
      CHECK(t >= prev);
      prev = t;
    }
  }
  SUBCASE("canonical vector energy equals the defect sum") {
    const FrameVector g = canonical_vector(geo, 40);
    CHECK(g.entries.squaredNorm() == doctest::Approx(tail_defect(geo, 0, 40)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(tail_defect(geo, 5, 3), std::invalid_argument);
}

TEST_CASE("blaschke product") {
  const CarlesonSpectrum geo = make_geometric_real(0.5, 0.5, 10);
  CHECK(std::abs(blaschke_product(geo, Complex(0.5, 0), 10)) <= 1e-15);  // vanishes at z_0

  SpectrumFlags flags;
  flags.real_positive = true;
  const CarlesonSpectrum single({DiskPoint::from_polar(0.5, 0)}, flags, "single");
  const Complex b = blaschke_product(single, Complex(0, 0), 1);
  CHECK(b.real() == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(b.imag() == 0.0);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Complex z = std::polar(0.995 * uniform01(rng), 6.28 * uniform01(rng) - 3.14);
    CHECK(std::abs(blaschke_product(geo, z, 10)) < 1.0);
  }
  CHECK_THROWS_AS(blaschke_product(geo, Complex(1.2, 0), 10), std::invalid_argument);
}

TEST_CASE("canonical vector") {
  SpectrumFlags flags;
  flags.real_positive = true;
  const CarlesonSpectrum s({DiskPoint::from_polar(0.6, 0)}, flags, "s");
  CHECK(canonical_vector(s, 1).entries(0) == doctest::Approx(0.8).epsilon(1e-15));

  const CarlesonSpectrum geo = make_geometric_real(0.5, 0.5, 24);
  const FrameVector g = canonical_vector(geo, 24);
  for (Index j = 0; j < 24; ++j) {
    const long double r = geo.point(j).r;
    const long double expected = std::sqrt((1 - r) * (1 + r));
    CHECK(g.entries(j) == doctest::Approx(static_cast<Real>(expected)).epsilon(1e-15));
    CHECK(g.entries(j) > 0.0);
    CHECK(g.entries(j) < 1.0);
    if (j > 0) CHECK(g.entries(j) < g.entries(j - 1));  // monotone for increasing moduli
  }
}

TEST_CASE("geometric generator") {
  const CarlesonSpectrum geo = make_geometric_real(0.5, 0.5, 3);
  CHECK(geo.point(0).r == doctest::Approx(0.5).epsilon(1e-16));
  CHECK(geo.point(1).r == doctest::Approx(0.75).epsilon(1e-16));
  CHECK(geo.point(2).r == doctest::Approx(0.875).epsilon(1e-16));
  CHECK(geo.flags().real_positive);
  CHECK(geo.flags().strictly_increasing_modulus);
  CHECK(geo.attached_delta().has_value());

  const CarlesonSpectrum single = make_geometric_real(0.3, 0.5, 1);
  CHECK(single.attached_delta()->delta_n == 1.0);

  const auto tail = geo.geometric_tail();
  REQUIRE(tail.has_value());
  CHECK(tail->base == 0.5);
  CHECK(tail->ratio == 0.5);

  CHECK_THROWS_AS(make_geometric_real(1.0, 0.5, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_geometric_real(0.5, 0.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_geometric_real(0.5, 1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_geometric_real(0.5, 0.5, 0), std::invalid_argument);
}

TEST_CASE("sector generator") {
  std::vector<Real> moduli;
  for (int j = 0; j < 15; ++j) moduli.push_back(1.0 - 0.5 * std::pow(0.6, j));

  SUBCASE("degenerate sector is real positive") {
    const CarlesonSpectrum s = make_sector(moduli, 0.0, AngleRule::Alternating);
    CHECK(s.flags().real_positive);
    CHECK(*s.flags().sector_half_angle_c == 0.0);
  }

  SUBCASE("alternating angles satisfy the sector invariant") {
    const Real c = 0.4;
    const CarlesonSpectrum s = make_sector(moduli, c, AngleRule::Alternating);
    CHECK_FALSE(s.flags().real_positive);
    for (Index j = 0; j < s.size(); ++j) {
      CHECK(std::abs(s.point(j).theta) <= c);
      CHECK(s.point(j).theta == ((j % 2 == 0) ? c : -c));
    }
    // delta against the brute-force oracle
    std::vector<oracles::CLD> zs;
    for (Index j = 0; j < s.size(); ++j) {
      zs.emplace_back(static_cast<long double>(s.point(j).re),
                      static_cast<long double>(s.point(j).im));
    }
    CHECK(carleson_delta(s, s.size()).delta_n ==
          doctest::Approx(static_cast<Real>(oracles::carleson_delta_brute(zs))).epsilon(1e-12));
  }

  SUBCASE("constant rule") {
    const CarlesonSpectrum s = make_sector(moduli, 0.25, AngleRule::Constant);
    for (Index j = 0; j < s.size(); ++j) CHECK(s.point(j).theta == 0.25);
  }

  CHECK_THROWS_AS(make_sector({0.5, 0.4}, 0.1, AngleRule::Zero), std::invalid_argument);
  CHECK_THROWS_AS(make_sector(moduli, 3.2, AngleRule::Zero), std::invalid_argument);
}
