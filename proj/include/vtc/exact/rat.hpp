#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "vtc/error.hpp"

namespace vtc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

/// n/d for any nonzero d (the Int constructor rejects negative denominators).
inline Rat ratio(const Int& n, const Int& d) {
  if (d == 0) throw DivisionByZero("zero denominator");
  return d < 0 ? Rat(Int(-n), Int(-d)) : Rat(n, d);
}

/// Largest integer <= q.
inline Int floor(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int quot = n / d;  // truncates toward zero
  if (n < 0 && quot * d != n) --quot;
  return quot;
}

/// q - floor(q), in [0, 1).
inline Rat frac(const Rat& q) { return q - Rat(floor(q)); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

/// Canonical text: "5", "-3/4".
inline std::string to_string(const Rat& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace detail {

// Accepts ASCII '-' and U+2212 MINUS SIGN.
inline bool consume_minus(std::string_view s, std::size_t& pos) {
  if (pos < s.size() && s[pos] == '-') {
    ++pos;
    return true;
  }
  if (s.substr(pos, 3) == "\xE2\x88\x92") {
    pos += 3;
    return true;
  }
  return false;
}

inline Int parse_digits(std::string_view s, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos == start) throw ParseError("expected digits in '" + std::string(s) + "'");
  return Int(std::string(s.substr(start, pos - start)));
}

}  // namespace detail

/// Parses "n" or "n/d" with an optional leading minus sign.
inline Rat parse_rat(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size() && s[pos] == ' ') ++pos;
  bool neg = detail::consume_minus(s, pos);
  Int num = detail::parse_digits(s, pos);
  Int den = 1;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    den = detail::parse_digits(s, pos);
  }
  while (pos < s.size() && s[pos] == ' ') ++pos;
  if (pos != s.size()) throw ParseError("trailing characters in rational '" + std::string(s) + "'");
  if (den == 0) throw DivisionByZero("zero denominator in '" + std::string(s) + "'");
  Rat q = ratio(num, den);
  return neg ? Rat(-q) : q;
}

/// A point on the unit circle e^{2 pi i value}, stored exactly as value mod 1.
class Phase {
 public:
  Phase() = default;
  explicit Phase(const Rat& exponent) : value_(frac(exponent)) {}

  const Rat& value() const { return value_; }
  bool is_trivial() const { return value_ == 0; }

  friend Phase operator+(const Phase& a, const Phase& b) { return Phase(a.value_ + b.value_); }
  friend Phase operator-(const Phase& a, const Phase& b) { return Phase(a.value_ - b.value_); }
  Phase operator-() const { return Phase(-value_); }
  friend bool operator==(const Phase& a, const Phase& b) { return a.value_ == b.value_; }

 private:
  Rat value_{0};
};

inline std::string to_string(const Phase& p) { return to_string(p.value()); }

}  // namespace vtc
