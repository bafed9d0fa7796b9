#include "mdlmon/interval.hpp"

#include <algorithm>

namespace mdlmon {

namespace {

// Does interval `a` start at or before the point where `b` starts?
bool starts_not_after(const Interval& a, const Interval& b) {
  if (a.lo != b.lo) return a.lo < b.lo;
  return a.lo_closed || !b.lo_closed;
}

// True when a and b overlap or touch without a gap (union is one interval).
bool joinable(const Interval& a, const Interval& b) {
  // Pre: a starts not after b.
  if (!a.hi) return true;
  if (b.lo < *a.hi) return true;
  if (b.lo == *a.hi) return a.hi_closed || b.lo_closed;
  return false;
}

Interval join(const Interval& a, const Interval& b) {
  Interval out = a;
  if (!a.hi) return out;
  if (!b.hi) {
    out.hi = std::nullopt;
    out.hi_closed = true;
    return out;
  }
  if (*a.hi < *b.hi || (*a.hi == *b.hi && b.hi_closed)) {
    out.hi = b.hi;
    out.hi_closed = b.hi_closed;
  }
  return out;
}

// Shrink iv from above to the boundary (v, closed), if that is tighter.
void tighten_hi(Interval& iv, const Rational& v, bool closed) {
  if (!iv.hi || v < *iv.hi || (v == *iv.hi && !closed && iv.hi_closed)) {
    iv.hi = v;
    iv.hi_closed = closed;
  }
}

// Shrink iv from below to the boundary (v, closed), if that is tighter.
void tighten_lo(Interval& iv, const Rational& v, bool closed) {
  if (v > iv.lo || (v == iv.lo && !closed && iv.lo_closed)) {
    iv.lo = v;
    iv.lo_closed = closed;
  }
}

}  // namespace

bool Interval::contains(const Rational& v) const {
  if (v < lo || (v == lo && !lo_closed)) return false;
  if (!hi) return true;
  if (*hi < v || (v == *hi && !hi_closed)) return false;
  return true;
}

std::string Interval::to_string() const {
  std::string s = lo_closed ? "[" : "(";
  s += lo.to_string();
  s += ",";
  if (hi) {
    s += hi->to_string();
    s += hi_closed ? "]" : ")";
  } else {
    s += "inf)";
  }
  return s;
}

bool IntervalUnion::contains(const Rational& v) const {
  for (const auto& p : parts_) {
    if (p.contains(v)) return true;
    if (v < p.lo) break;
  }
  return false;
}

void IntervalUnion::add(Interval iv) {
  // Clip at zero: the domain is R+.
  if (iv.lo.is_negative()) {
    iv.lo = Rational(0);
    iv.lo_closed = true;
  }
  if (iv.empty()) return;
  parts_.push_back(iv);
  normalize();
}

void IntervalUnion::normalize() {
  std::sort(parts_.begin(), parts_.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  std::vector<Interval> merged;
  for (const auto& p : parts_) {
    if (p.empty()) continue;
    if (!merged.empty() && starts_not_after(merged.back(), p) && joinable(merged.back(), p)) {
      merged.back() = join(merged.back(), p);
    } else {
      merged.push_back(p);
    }
  }
  parts_ = std::move(merged);
}

void IntervalUnion::subtract(const Interval& cut) {
  if (cut.empty()) return;
  std::vector<Interval> out;
  for (const auto& p : parts_) {
    Interval left = p;  // part of p below the cut
    tighten_hi(left, cut.lo, !cut.lo_closed);
    if (!left.empty()) out.push_back(left);
    if (cut.hi) {  // part of p above the cut
      Interval right = p;
      tighten_lo(right, *cut.hi, !cut.hi_closed);
      if (!right.empty()) out.push_back(right);
    }
  }
  parts_ = std::move(out);
  normalize();
}

IntervalUnion IntervalUnion::unite(const IntervalUnion& o) const {
  IntervalUnion out = *this;
  for (const auto& p : o.parts_) out.parts_.push_back(p);
  out.normalize();
  return out;
}

IntervalUnion IntervalUnion::subtract(const IntervalUnion& o) const {
  IntervalUnion out = *this;
  for (const auto& p : o.parts_) out.subtract(p);
  return out;
}

IntervalUnion IntervalUnion::intersect(const IntervalUnion& o) const {
  IntervalUnion out;
  for (const auto& a : parts_) {
    for (const auto& b : o.parts_) {
      Interval iv = a;
      tighten_lo(iv, b.lo, b.lo_closed);
      if (b.hi) tighten_hi(iv, *b.hi, b.hi_closed);
      if (!iv.empty()) out.parts_.push_back(iv);
    }
  }
  out.normalize();
  return out;
}

std::vector<Rational> IntervalUnion::endpoints() const {
  std::vector<Rational> out;
  for (const auto& p : parts_) {
    out.push_back(p.lo);
    if (p.hi) out.push_back(*p.hi);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool IntervalUnion::operator==(const IntervalUnion& o) const {
  if (parts_.size() != o.parts_.size()) return false;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const auto& a = parts_[i];
    const auto& b = o.parts_[i];
    if (a.lo != b.lo || a.lo_closed != b.lo_closed) return false;
    if (a.hi.has_value() != b.hi.has_value()) return false;
    if (a.hi && (*a.hi != *b.hi || a.hi_closed != b.hi_closed)) return false;
  }
  return true;
}

std::string IntervalUnion::to_string() const {
  if (parts_.empty()) return "{}";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += " u ";
    s += parts_[i].to_string();
  }
  return s;
}

}  // namespace mdlmon
