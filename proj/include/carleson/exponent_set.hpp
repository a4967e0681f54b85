#pragma once

#include <optional>
#include <string>

#include "carleson/common.hpp"

namespace carleson {

enum class ExponentKind { JitteredArithmetic, Explicit };

// A sorted finite prefix of a countable exponent set Lambda subset [0, inf).
// JitteredArithmetic sets have lambda_k = N k + j_k with 0 <= j_k < N.
class ExponentSet {
 public:
  static ExponentSet arithmetic(Index N, Index count);
  static ExponentSet jittered(Index N, Vec jitters);
  static ExponentSet jittered_random(Index N, Index count, std::uint64_t seed);
  static ExponentSet explicit_set(Vec values, std::string descriptor = "explicit");
  static ExponentSet dyadic(Index count);

  Index size() const { return values_.size(); }
  Real value(Index k) const { return values_(k); }
  const Vec& values() const { return values_; }
  ExponentKind kind() const { return kind_; }

  // N for jittered-arithmetic sets, absent otherwise.
  std::optional<Index> arithmetic_step() const;
  const Vec& jitters() const { return jitters_; }

  ExponentSet prefix(Index count) const;

  const std::string& descriptor() const { return descriptor_; }

 private:
  ExponentSet() = default;

  Vec values_;
  Vec jitters_;  // empty unless JitteredArithmetic
  Index step_ = 0;
  ExponentKind kind_ = ExponentKind::Explicit;
  std::string descriptor_;
};

}  // namespace carleson
