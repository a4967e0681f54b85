#include "carleson/synthesis.hpp"

#include <cmath>

namespace carleson {

Complex power(const DiskPoint& z, Real lambda) {
  if (!(lambda >= 0)) throw std::invalid_argument("power: exponent must be >= 0");
  const Real modulus = std::exp(lambda * std::log(z.r));
  if (z.theta == Real(0)) return {modulus, Real(0)};
  return std::polar(modulus, lambda * z.theta);
}

SynthesisMatrix synthesis_matrix(const CarlesonSpectrum& spec, const ExponentSet& lam,
                                 Index row_offset, Index J_rows, Index K_cols) {
  if (row_offset < 0 || J_rows < 1 || row_offset + J_rows > spec.size()) {
    throw std::invalid_argument("synthesis_matrix: rows outside materialized spectrum");
  }
  if (K_cols < 1 || K_cols > lam.size()) {
    throw std::invalid_argument("synthesis_matrix: cols outside materialized exponents");
  }
  SynthesisMatrix m;
  m.row_offset = row_offset;
  m.spectrum_tag = spec.generator_tag();
  m.exponent_tag = lam.descriptor();
  m.entries.resize(J_rows, K_cols);
  for (Index i = 0; i < J_rows; ++i) {
    const DiskPoint& z = spec.point(row_offset + i);
    const Real g = std::sqrt(z.defect());
    const Real logr = std::log(z.r);
    if (z.theta == Real(0)) {
      for (Index k = 0; k < K_cols; ++k) {
        m.entries(i, k) = Complex(g * std::exp(lam.value(k) * logr), Real(0));
      }
    } else {
      for (Index k = 0; k < K_cols; ++k) {
        const Real lambda = lam.value(k);
        m.entries(i, k) = std::polar(g * std::exp(lambda * logr), lambda * z.theta);
      }
    }
  }
  return m;
}

CVec analysis_apply(const CarlesonSpectrum& spec, const ExponentSet& lam,
                    const Eigen::Ref<const CVec>& f, Index K) {
  if (f.size() < 1 || f.size() > spec.size()) {
    throw std::invalid_argument("analysis_apply: f outside materialized spectrum support");
  }
  if (K < 1 || K > lam.size()) {
    throw std::invalid_argument("analysis_apply: K outside materialized exponents");
  }
  CVec samples(K);
  for (Index k = 0; k < K; ++k) {
    Complex acc = 0;
    for (Index j = 0; j < f.size(); ++j) {
      const DiskPoint& z = spec.point(j);
      acc += f(j) * std::conj(power(z, lam.value(k))) * std::sqrt(z.defect());
    }
    samples(k) = acc;
  }
  return samples;
}

}  // namespace carleson
