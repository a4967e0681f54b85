// Independent test oracles. Everything here recomputes expected values
// from first principles (long double brute force, closed forms,
// enumeration) without touching the library's computation paths.
#pragma once

#include <complex>
#include <vector>

#include "carleson/common.hpp"

namespace oracles {

using LD = long double;
using CLD = std::complex<long double>;

// |z - w| / |1 - conj(w) z| in extended precision.
inline LD pseudo_hyperbolic(CLD z, CLD w) {
  return std::abs(z - w) / std::abs(CLD(1) - std::conj(w) * z);
}

// Brute-force double loop over the leave-one-out separation products.
inline LD carleson_delta_brute(const std::vector<CLD>& zs) {
  LD best = 2;
  for (size_t k = 0; k < zs.size(); ++k) {
    LD prod = 1;
    for (size_t j = 0; j < zs.size(); ++j) {
      if (j != k) prod *= pseudo_hyperbolic(zs[k], zs[j]);
    }
    best = std::min(best, prod);
  }
  return best;
}

inline std::vector<CLD> geometric_points(LD base, LD ratio, int count) {
  std::vector<CLD> zs;
  LD d = base;
  for (int j = 0; j < count; ++j) {
    zs.emplace_back(LD(1) - d, LD(0));
    d *= ratio;
  }
  return zs;
}

// Closed form of sum_{J <= j < n} (1 - z_j^2) for 1 - z_j = base ratio^j:
// 2 base (q^J - q^n) / (1 - q) - base^2 (q^{2J} - q^{2n}) / (1 - q^2).
inline LD geometric_defect_sum(LD base, LD ratio, int J, int n) {
  const LD q = ratio;
  const LD qJ = std::pow(q, LD(J)), qn = std::pow(q, LD(n));
  return 2 * base * (qJ - qn) / (1 - q) -
         base * base * (qJ * qJ - qn * qn) / (1 - q * q);
}

// Synthesis entry from the defining formula, extended precision.
inline CLD synthesis_entry(LD r, LD theta, LD lambda) {
  const CLD w = std::exp(lambda * CLD(std::log(r), theta));
  return w * std::sqrt((LD(1) - r) * (LD(1) + r));
}

// Dimension-1 continuous energy: int_0^inf z^{2t} (1 - z^2) |f|^2 dt.
inline LD dim1_energy(LD z, LD f_abs2) {
  return (LD(1) - z * z) / (-2 * std::log(z)) * f_abs2;
}

// Block sum for the density table by direct enumeration.
inline LD block_sum_enum(const std::vector<LD>& lambda, LD t, LD mu) {
  LD sum = 0;
  for (LD l : lambda) {
    if (l >= t && l <= mu * t && l > 0) sum += 1 / l;
  }
  return sum;
}

}  // namespace oracles
