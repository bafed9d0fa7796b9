#pragma once

#include "mdlmon/rational.hpp"

namespace mdlmon {

/// Upper bound on a difference: value c with strictness, read as "< c" when
/// strict and "<= c" otherwise. Addition and the tighter-than order are the
/// arithmetic used both for constraint-graph cycles and for node ordering.
struct Bound {
  Rational value;
  bool strict = false;

  bool operator==(const Bound&) const = default;

  Bound operator+(const Bound& o) const { return Bound{value + o.value, strict || o.strict}; }

  /// Strictly tighter: smaller value, or same value with strictness.
  bool tighter_than(const Bound& o) const {
    if (value != o.value) return value < o.value;
    return strict && !o.strict;
  }

  /// Whether the constraint "0 (<|<=) value" holds.
  bool satisfied_by_zero() const {
    return strict ? Rational(0) < value : Rational(0) <= value;
  }

  std::string to_string() const { return (strict ? "<" : "<=") + std::string(" ") + value.to_string(); }

  std::size_t hash() const { return hash_combine(value.hash(), strict ? 0x9e37u : 0x79b9u); }
};

}  // namespace mdlmon
