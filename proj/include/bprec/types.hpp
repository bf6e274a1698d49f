#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace bprec {

/// Fixed 1..5 integer rating scale.
struct RatingScale {
  static constexpr int kMin = 1;
  static constexpr int kMax = 5;
  static constexpr int kLevels = kMax - kMin + 1;
  static constexpr int kMaxDeviation = kMax - kMin;  // normalizer for confidence updates

  static constexpr bool contains(int r) { return r >= kMin && r <= kMax; }
  static constexpr int index(int r) { return r - kMin; }  // 0-based slot
  static constexpr int level(int idx) { return idx + kMin; }
};

/// A probability distribution over the five rating values, indexed by rating-1.
using Message = std::array<double, RatingScale::kLevels>;

inline Message uniform_message() {
  Message m;
  m.fill(1.0 / RatingScale::kLevels);
  return m;
}

inline Message indicator_message(int rating) {
  if (!RatingScale::contains(rating)) throw std::invalid_argument("rating out of scale");
  Message m{};
  m[RatingScale::index(rating)] = 1.0;
  return m;
}

inline double message_sum(const Message& m) {
  double s = 0.0;
  for (double v : m) s += v;
  return s;
}

/// Normalize in place; returns false (leaving m untouched) when the mass is zero or non-finite.
inline bool normalize_message(Message& m) {
  double s = message_sum(m);
  if (!(s > 0.0) || !std::isfinite(s)) return false;
  for (double& v : m) v /= s;
  return true;
}

/// Expected rating under the distribution.
inline double message_expectation(const Message& m) {
  double e = 0.0;
  for (int i = 0; i < RatingScale::kLevels; ++i) e += RatingScale::level(i) * m[i];
  return e;
}

}  // namespace bprec
