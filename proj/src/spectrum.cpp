#include "carleson/spectrum.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace carleson {

namespace {

constexpr Real kPi = 3.14159265358979323846264338327950288;

Real wrap_angle(Real theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("DiskPoint: non-finite angle");
  Real t = std::remainder(theta, 2 * kPi);  // (-pi, pi]
  if (t >= kPi) t -= 2 * kPi;
  return t;
}

}  // namespace

DiskPoint DiskPoint::from_polar(Real r, Real theta) {
  if (!(r > 0) || !(r < 1)) {
    throw std::invalid_argument("DiskPoint: modulus must lie in (0, 1), got " +
                                std::to_string(r));
  }
  DiskPoint p;
  p.r = r;
  p.theta = wrap_angle(theta);
  p.re = r * std::cos(p.theta);
  p.im = (p.theta == Real(0)) ? Real(0) : r * std::sin(p.theta);
  return p;
}

DiskPoint DiskPoint::from_complex(Complex z) {
  return from_polar(std::abs(z), std::arg(z));
}

Real pseudo_hyperbolic(Complex z, Complex w) {
  if (std::abs(z) >= 1 || std::abs(w) >= 1) {
    throw std::invalid_argument("pseudo_hyperbolic: points must lie in the open disk");
  }
  return std::abs(z - w) / std::abs(Real(1) - std::conj(w) * z);
}

Real pseudo_hyperbolic(const DiskPoint& z, const DiskPoint& w) {
  return std::abs(z.value() - w.value()) /
         std::abs(Real(1) - std::conj(w.value()) * z.value());
}

Real GeometricTail::defect_tail_bound(Index from) const {
  // 1 - z_j^2 = base ratio^j (2 - base ratio^j) <= 2 base ratio^j
  return 2 * base * std::pow(ratio, static_cast<Real>(from)) / (1 - ratio);
}

CarlesonSpectrum::CarlesonSpectrum(std::vector<DiskPoint> points, SpectrumFlags flags,
                                   std::string generator_tag)
    : points_(std::move(points)), flags_(flags), tag_(std::move(generator_tag)) {
  if (points_.empty()) throw std::invalid_argument("CarlesonSpectrum: no points");
  for (size_t j = 0; j < points_.size(); ++j) {
    const DiskPoint& p = points_[j];
    if (!(p.r > 0) || !(p.r < 1)) {
      throw std::invalid_argument("CarlesonSpectrum: point " + std::to_string(j) +
                                  " outside (0,1) modulus range");
    }
    if (!(p.theta >= -kPi) || !(p.theta < kPi)) {
      throw std::invalid_argument("CarlesonSpectrum: point " + std::to_string(j) +
                                  " angle outside [-pi, pi)");
    }
    const Real scale = std::max(p.r, Real(1e-300));
    if (std::abs(p.re - p.r * std::cos(p.theta)) > 1e-14 * scale ||
        std::abs(p.im - p.r * std::sin(p.theta)) > 1e-14 * scale) {
      throw std::invalid_argument("CarlesonSpectrum: point " + std::to_string(j) +
                                  " has inconsistent cartesian/polar forms");
    }
    if (flags_.real_positive && p.theta != Real(0)) {
      throw std::invalid_argument("CarlesonSpectrum: real_positive flag but point " +
                                  std::to_string(j) + " has nonzero angle");
    }
    if (j > 0 && flags_.strictly_increasing_modulus &&
        !(points_[j].r > points_[j - 1].r)) {
      throw std::invalid_argument(
          "CarlesonSpectrum: strictly_increasing_modulus flag violated at index " +
          std::to_string(j));
    }
    if (flags_.sector_half_angle_c) {
      const Real c = *flags_.sector_half_angle_c;
      if (!(c >= 0) || !(c < kPi)) {
        throw std::invalid_argument("CarlesonSpectrum: sector half angle outside [0, pi)");
      }
      if (std::abs(p.theta) > c) {
        throw std::invalid_argument("CarlesonSpectrum: point " + std::to_string(j) +
                                    " outside sector half angle");
      }
    }
  }
}

std::optional<GeometricTail> CarlesonSpectrum::geometric_tail() const {
  GeometricTail t;
  if (std::sscanf(tag_.c_str(), "geometric(base=%lf,ratio=%lf)", &t.base, &t.ratio) == 2) {
    if (t.base > 0 && t.base < 1 && t.ratio > 0 && t.ratio < 1) return t;
  }
  return std::nullopt;
}

CarlesonDeltaEstimate carleson_delta(const CarlesonSpectrum& spec, Index n) {
  if (n < 1 || n > spec.size()) {
    throw std::invalid_argument("carleson_delta: truncation outside materialized range");
  }
  CarlesonDeltaEstimate est;
  est.truncation_n = n;
  est.per_k_products.resize(n);
  for (Index k = 0; k < n; ++k) {
    Real prod = 1;
    for (Index j = 0; j < n; ++j) {
      if (j == k) continue;
      const Real rho = pseudo_hyperbolic(spec.point(k), spec.point(j));
      if (rho == Real(0)) {
        throw NumericError("carleson_delta: coincident points " + std::to_string(k) +
                           " and " + std::to_string(j) + " (not a Carleson sequence)");
      }
      prod *= rho;
    }
    est.per_k_products(k) = prod;
  }
  est.delta_n = est.per_k_products.minCoeff();
  return est;
}

Real tail_defect(const CarlesonSpectrum& spec, Index J, Index n) {
  if (J < 0 || J > n || n > spec.size()) {
    throw std::invalid_argument("tail_defect: require 0 <= J <= n <= materialized length");
  }
  Real sum = 0;
  for (Index j = J; j < n; ++j) sum += spec.point(j).defect();
  return sum;
}

Complex blaschke_product(const CarlesonSpectrum& spec, Complex z, Index n) {
  if (std::abs(z) >= 1) {
    throw std::invalid_argument("blaschke_product: evaluation point outside open disk");
  }
  if (n < 1 || n > spec.size()) {
    throw std::invalid_argument("blaschke_product: truncation outside materialized range");
  }
  Complex prod = 1;
  for (Index j = 0; j < n; ++j) {
    const Complex zj = spec.point(j).value();
    prod *= (zj / std::abs(zj)) * (z - zj) / (Real(1) - std::conj(zj) * z);
  }
  return prod;
}

FrameVector canonical_vector(const CarlesonSpectrum& spec, Index n) {
  if (n < 1 || n > spec.size()) {
    throw std::invalid_argument("canonical_vector: truncation outside materialized range");
  }
  FrameVector g;
  g.truncation_n = n;
  g.entries.resize(n);
  for (Index j = 0; j < n; ++j) g.entries(j) = std::sqrt(spec.point(j).defect());
  return g;
}

CarlesonSpectrum make_geometric_real(Real base, Real ratio, Index count) {
  if (!(base > 0) || !(base < 1) || !(ratio > 0) || !(ratio < 1)) {
    throw std::invalid_argument("make_geometric_real: base and ratio must lie in (0,1)");
  }
  if (count < 1) throw std::invalid_argument("make_geometric_real: count must be positive");
  std::vector<DiskPoint> pts;
  pts.reserve(static_cast<size_t>(count));
  for (Index j = 0; j < count; ++j) {
    const Real z = 1 - base * std::pow(ratio, static_cast<Real>(j));
    if (!(z > 0)) {
      throw std::invalid_argument("make_geometric_real: parameters give z_j <= 0");
    }
    pts.push_back(DiskPoint::from_polar(z, 0));
  }
  SpectrumFlags flags;
  flags.real_positive = true;
  flags.strictly_increasing_modulus = true;
  std::ostringstream tag;
  tag.precision(17);
  tag << "geometric(base=" << base << ",ratio=" << ratio << ")";
  CarlesonSpectrum spec(std::move(pts), flags, tag.str());
  spec.attach_delta(carleson_delta(spec, std::min<Index>(count, 64)));
  return spec;
}

const char* angle_rule_name(AngleRule rule) {
  switch (rule) {
    case AngleRule::Zero: return "zero";
    case AngleRule::Constant: return "constant";
    case AngleRule::Alternating: return "alternating";
  }
  return "unknown";
}

CarlesonSpectrum make_sector(const std::vector<Real>& moduli, Real half_angle_c,
                             AngleRule rule) {
  if (!(half_angle_c >= 0) || !(half_angle_c < kPi)) {
    throw std::invalid_argument("make_sector: half angle must lie in [0, pi)");
  }
  if (moduli.empty()) throw std::invalid_argument("make_sector: no moduli");
  std::vector<DiskPoint> pts;
  pts.reserve(moduli.size());
  bool all_real = true;
  for (size_t j = 0; j < moduli.size(); ++j) {
    if (j > 0 && !(moduli[j] > moduli[j - 1])) {
      throw std::invalid_argument("make_sector: moduli must be strictly increasing");
    }
    Real theta = 0;
    switch (rule) {
      case AngleRule::Zero: theta = 0; break;
      case AngleRule::Constant: theta = half_angle_c; break;
      case AngleRule::Alternating:
        theta = (j % 2 == 0) ? half_angle_c : -half_angle_c;
        break;
    }
    if (std::abs(theta) > half_angle_c) {
      throw std::invalid_argument("make_sector: angle rule leaves the sector");
    }
    if (theta != 0) all_real = false;
    pts.push_back(DiskPoint::from_polar(moduli[j], theta));
  }
  SpectrumFlags flags;
  flags.real_positive = all_real;
  flags.strictly_increasing_modulus = true;
  flags.sector_half_angle_c = half_angle_c;
  std::ostringstream tag;
  tag.precision(17);
  tag << "sector(c=" << half_angle_c << ",rule=" << angle_rule_name(rule) << ")";
  CarlesonSpectrum spec(std::move(pts), flags, tag.str());
  spec.attach_delta(carleson_delta(spec, std::min<Index>(spec.size(), 64)));
  return spec;
}

}  // namespace carleson
