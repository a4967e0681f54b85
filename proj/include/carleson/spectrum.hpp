#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carleson/common.hpp"

namespace carleson {

// A point z = r e^{i theta} of the open unit disk, z != 0.
// Stores both cartesian and polar forms; theta is kept in [-pi, pi).
struct DiskPoint {
  Real re = 0;
  Real im = 0;
  Real r = 0;
  Real theta = 0;

  static DiskPoint from_polar(Real r, Real theta);
  static DiskPoint from_complex(Complex z);

  Complex value() const { return {re, im}; }

  // 1 - r^2, evaluated as (1 - r)(1 + r) to avoid cancellation near r = 1.
  Real defect() const { return (Real(1) - r) * (Real(1) + r); }
};

// Pseudo-hyperbolic distance |z - w| / |1 - conj(w) z| in [0, 1).
Real pseudo_hyperbolic(Complex z, Complex w);
Real pseudo_hyperbolic(const DiskPoint& z, const DiskPoint& w);

struct SpectrumFlags {
  bool real_positive = false;
  bool strictly_increasing_modulus = false;
  std::optional<Real> sector_half_angle_c;
};

// delta_n = min_k prod_{j != k, j < n} pseudo_hyperbolic(z_k, z_j).
// Non-increasing in n for nested truncations, so delta_n >= delta of the
// full sequence.
struct CarlesonDeltaEstimate {
  Real delta_n = 1;
  Index truncation_n = 0;
  Vec per_k_products;
};

// Canonical frame vector entries g_j = sqrt(1 - r_j^2).
struct FrameVector {
  Vec entries;
  Index truncation_n = 0;
};

// Analytic bound on remaining defect mass for generated spectra with
// 1 - z_j = base * ratio^j:  sum_{j >= from} (1 - z_j^2) <= 2 base ratio^from / (1 - ratio).
struct GeometricTail {
  Real base = 0;
  Real ratio = 0;
  Real defect_tail_bound(Index from) const;
};

// Materialized prefix of a Carleson spectrum plus structural flags.
// Invariants are validated on construction and on JSON ingest.
class CarlesonSpectrum {
 public:
  CarlesonSpectrum(std::vector<DiskPoint> points, SpectrumFlags flags,
                   std::string generator_tag);

  Index size() const { return static_cast<Index>(points_.size()); }
  const DiskPoint& point(Index j) const { return points_[static_cast<size_t>(j)]; }
  const std::vector<DiskPoint>& points() const { return points_; }
  const SpectrumFlags& flags() const { return flags_; }
  const std::string& generator_tag() const { return tag_; }

  // Generator metadata recovered from the tag, when the spectrum was
  // produced by make_geometric_real (directly or via JSON round trip).
  std::optional<GeometricTail> geometric_tail() const;

  const std::optional<CarlesonDeltaEstimate>& attached_delta() const { return delta_; }
  void attach_delta(CarlesonDeltaEstimate d) { delta_ = std::move(d); }

 private:
  std::vector<DiskPoint> points_;
  SpectrumFlags flags_;
  std::string tag_;
  std::optional<CarlesonDeltaEstimate> delta_;
};

// Leave-one-out separation products over the first n points. Throws
// NumericError if two points coincide (the product degenerates to 0).
CarlesonDeltaEstimate carleson_delta(const CarlesonSpectrum& spec, Index n);

// sum_{J <= j < n} (1 - r_j^2).
Real tail_defect(const CarlesonSpectrum& spec, Index J, Index n);

// prod_{j < n} (z_j / |z_j|) (z - z_j) / (1 - conj(z_j) z), |z| < 1.
Complex blaschke_product(const CarlesonSpectrum& spec, Complex z, Index n);

FrameVector canonical_vector(const CarlesonSpectrum& spec, Index n);

// z_j = 1 - base * ratio^j, real positive, strictly increasing. A delta
// estimate over the first min(count, 64) points is attached.
CarlesonSpectrum make_geometric_real(Real base, Real ratio, Index count);

enum class AngleRule { Zero, Constant, Alternating };

// Spectrum inside the sector |theta| <= c with the given moduli and a
// deterministic angle assignment.
CarlesonSpectrum make_sector(const std::vector<Real>& moduli, Real half_angle_c,
                             AngleRule rule);

const char* angle_rule_name(AngleRule rule);

}  // namespace carleson
