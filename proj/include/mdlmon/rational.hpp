#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace mdlmon {

/// Exact rational with 64-bit components. Always normalized: den > 0,
/// gcd(|num|, den) == 1. Arithmetic that would leave the 64-bit range
/// throws std::overflow_error instead of wrapping.
class Rational {
public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d);

  // Accepts "123", "-4/5", "3.25".
  static Rational parse(const std::string& text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  std::string to_string() const;

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::size_t hash() const;

private:
  std::int64_t num_;
  std::int64_t den_;
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace mdlmon

template <>
struct std::hash<mdlmon::Rational> {
  std::size_t operator()(const mdlmon::Rational& r) const { return r.hash(); }
};
