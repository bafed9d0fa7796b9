#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdlmon/rational.hpp"

namespace mdlmon {

/// One interval over the non-negative reals. `hi == nullopt` means unbounded
/// to the right. Degenerate points [a,a] are allowed (both ends closed).
struct Interval {
  Rational lo;
  bool lo_closed = true;
  std::optional<Rational> hi;
  bool hi_closed = true;

  static Interval point(const Rational& v) { return Interval{v, true, v, true}; }
  static Interval closed(const Rational& a, const Rational& b) { return Interval{a, true, b, true}; }
  static Interval right_open(const Rational& a, const Rational& b) { return Interval{a, true, b, false}; }
  static Interval unbounded(const Rational& a, bool closed_at = true) {
    return Interval{a, closed_at, std::nullopt, true};
  }

  bool empty() const {
    if (!hi) return false;
    if (lo < *hi) return false;
    return !(lo == *hi && lo_closed && hi_closed);
  }
  bool contains(const Rational& v) const;
  std::string to_string() const;
};

/// Finite union of disjoint, sorted, maximally merged intervals over R+.
/// Values below zero are never members; inserted intervals are clipped at 0.
class IntervalUnion {
public:
  IntervalUnion() = default;
  explicit IntervalUnion(Interval iv) { add(iv); }

  static IntervalUnion empty_set() { return IntervalUnion(); }
  static IntervalUnion all_nonnegative() { return IntervalUnion(Interval::unbounded(Rational(0))); }

  bool empty() const { return parts_.empty(); }
  bool contains(const Rational& v) const;

  void add(Interval iv);
  void subtract(const Interval& iv);

  IntervalUnion unite(const IntervalUnion& o) const;
  IntervalUnion intersect(const IntervalUnion& o) const;
  IntervalUnion subtract(const IntervalUnion& o) const;

  const std::vector<Interval>& parts() const { return parts_; }

  /// All finite boundary values, in ascending order (duplicates removed).
  std::vector<Rational> endpoints() const;

  bool operator==(const IntervalUnion& o) const;

  std::string to_string() const;

private:
  void normalize();
  std::vector<Interval> parts_;
};

}  // namespace mdlmon
