#include "mdlmon/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>

namespace mdlmon {

namespace {

using i128 = __int128;

constexpr std::int64_t kMax = INT64_MAX;
constexpr std::int64_t kMin = INT64_MIN;

std::int64_t narrow(i128 v) {
  if (v > static_cast<i128>(kMax) || v < static_cast<i128>(kMin)) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make_normalized(i128 n, i128 d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rational(narrow(n), narrow(d));
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  if (den_ < 0) {
    // INT64_MIN denominator cannot be negated in-range.
    num_ = narrow(-static_cast<i128>(num_));
    den_ = narrow(-static_cast<i128>(den_));
  }
  std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(const std::string& text) {
  std::size_t i = 0;
  auto fail = [&]() -> void { throw std::invalid_argument("malformed rational: '" + text + "'"); };
  if (text.empty()) fail();
  bool neg = false;
  if (text[i] == '-' || text[i] == '+') {
    neg = text[i] == '-';
    ++i;
  }
  if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail();
  i128 intpart = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    intpart = intpart * 10 + (text[i] - '0');
    if (intpart > static_cast<i128>(kMax)) throw std::overflow_error("rational literal too large");
    ++i;
  }
  i128 num = intpart;
  i128 den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail();
    i128 d = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      d = d * 10 + (text[i] - '0');
      if (d > static_cast<i128>(kMax)) throw std::overflow_error("rational literal too large");
      ++i;
    }
    if (d == 0) fail();
    den = d;
  } else if (i < text.size() && text[i] == '.') {
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail();
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      num = num * 10 + (text[i] - '0');
      den *= 10;
      if (num > static_cast<i128>(kMax) || den > static_cast<i128>(kMax)) {
        throw std::overflow_error("rational literal too large");
      }
      ++i;
    }
  }
  if (i != text.size()) fail();
  if (neg) num = -num;
  return make_normalized(num, den);
}

Rational Rational::operator-() const {
  return Rational(narrow(-static_cast<i128>(num_)), den_);
}

Rational Rational::operator+(const Rational& o) const {
  i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
  i128 d = static_cast<i128>(den_) * o.den_;
  return make_normalized(n, d);
}

Rational Rational::operator-(const Rational& o) const {
  i128 n = static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_;
  i128 d = static_cast<i128>(den_) * o.den_;
  return make_normalized(n, d);
}

Rational Rational::operator*(const Rational& o) const {
  i128 n = static_cast<i128>(num_) * o.num_;
  i128 d = static_cast<i128>(den_) * o.den_;
  return make_normalized(n, d);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw std::invalid_argument("rational division by zero");
  i128 n = static_cast<i128>(num_) * o.den_;
  i128 d = static_cast<i128>(den_) * o.num_;
  return make_normalized(n, d);
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<i128>(num_) * o.den_ < static_cast<i128>(o.num_) * den_;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t Rational::hash() const {
  return hash_combine(std::hash<std::int64_t>{}(num_), std::hash<std::int64_t>{}(den_));
}

Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace mdlmon
