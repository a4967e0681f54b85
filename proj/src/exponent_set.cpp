#include "carleson/exponent_set.hpp"

#include <cmath>
#include <random>
#include <utility>

namespace carleson {

ExponentSet ExponentSet::arithmetic(Index N, Index count) {
  if (N < 1) throw std::invalid_argument("ExponentSet: N must be a positive integer");
  if (count < 1) throw std::invalid_argument("ExponentSet: count must be positive");
  ExponentSet s;
  s.kind_ = ExponentKind::JitteredArithmetic;
  s.step_ = N;
  s.jitters_ = Vec::Zero(count);
  s.values_.resize(count);
  for (Index k = 0; k < count; ++k) s.values_(k) = static_cast<Real>(N * k);
  s.descriptor_ = "arith:N=" + std::to_string(N);
  return s;
}

ExponentSet ExponentSet::jittered(Index N, Vec jitters) {
  if (N < 1) throw std::invalid_argument("ExponentSet: N must be a positive integer");
  if (jitters.size() < 1) throw std::invalid_argument("ExponentSet: count must be positive");
  ExponentSet s;
  s.kind_ = ExponentKind::JitteredArithmetic;
  s.step_ = N;
  s.values_.resize(jitters.size());
  for (Index k = 0; k < jitters.size(); ++k) {
    const Real j = jitters(k);
    if (!(j >= 0) || !(j < static_cast<Real>(N))) {
      throw std::invalid_argument("ExponentSet: jitter " + std::to_string(k) +
                                  " outside [0, N)");
    }
    s.values_(k) = static_cast<Real>(N) * static_cast<Real>(k) + j;
  }
  s.jitters_ = std::move(jitters);
  s.descriptor_ = "arith:N=" + std::to_string(N) + ",jitter=explicit";
  return s;
}

ExponentSet ExponentSet::jittered_random(Index N, Index count, std::uint64_t seed) {
  if (N < 1) throw std::invalid_argument("ExponentSet: N must be a positive integer");
  if (count < 1) throw std::invalid_argument("ExponentSet: count must be positive");
  std::mt19937_64 rng(seed);
  Vec jit(count);
  for (Index k = 0; k < count; ++k) jit(k) = static_cast<Real>(N) * uniform01(rng);
  ExponentSet s = jittered(N, std::move(jit));
  s.descriptor_ = "arith:N=" + std::to_string(N) + ",jitter=random,seed=" +
                  std::to_string(seed);
  return s;
}

ExponentSet ExponentSet::explicit_set(Vec values, std::string descriptor) {
  if (values.size() < 1) throw std::invalid_argument("ExponentSet: count must be positive");
  for (Index k = 0; k < values.size(); ++k) {
    if (!(values(k) >= 0) || !std::isfinite(values(k))) {
      throw std::invalid_argument("ExponentSet: values must be finite and >= 0");
    }
    if (k > 0 && !(values(k) > values(k - 1))) {
      throw std::invalid_argument("ExponentSet: values must be strictly increasing");
    }
  }
  ExponentSet s;
  s.kind_ = ExponentKind::Explicit;
  s.values_ = std::move(values);
  s.descriptor_ = std::move(descriptor);
  return s;
}

ExponentSet ExponentSet::dyadic(Index count) {
  if (count < 1 || count > 1023) {
    throw std::invalid_argument("ExponentSet: dyadic count must lie in [1, 1023]");
  }
  Vec v(count);
  for (Index k = 0; k < count; ++k) v(k) = std::ldexp(Real(1), static_cast<int>(k));
  ExponentSet s = explicit_set(std::move(v), "dyadic");
  return s;
}

std::optional<Index> ExponentSet::arithmetic_step() const {
  if (kind_ == ExponentKind::JitteredArithmetic) return step_;
  return std::nullopt;
}

ExponentSet ExponentSet::prefix(Index count) const {
  if (count < 1 || count > size()) {
    throw std::invalid_argument("ExponentSet: prefix count outside materialized range");
  }
  ExponentSet s;
  s.kind_ = kind_;
  s.step_ = step_;
  s.values_ = values_.head(count);
  if (jitters_.size() > 0) s.jitters_ = jitters_.head(count);
  s.descriptor_ = descriptor_;
  return s;
}

}  // namespace carleson
