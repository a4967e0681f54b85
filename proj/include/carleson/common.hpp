#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>

#include <Eigen/Core>

namespace carleson {

using Real = double;
using Complex = std::complex<Real>;
using Index = Eigen::Index;

using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;

// Default absolute tolerance for invariant checks.
inline constexpr Real kDefaultTol = 1e-12;

inline constexpr const char* kVersion = "0.1.0";

// Thrown when a computation cannot certify or complete for numerical
// reasons (coincident spectrum points, rank deficiency, ...), as opposed
// to std::invalid_argument for violated preconditions.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 53-bit uniform draw in [0, 1). All randomness in the library goes
// through this so that seeded runs are reproducible across platforms
// (std::uniform_real_distribution is implementation-defined).
template <typename Rng>
Real uniform01(Rng& rng) {
  return static_cast<Real>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace carleson
