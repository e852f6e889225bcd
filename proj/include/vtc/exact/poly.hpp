#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vtc/exact/rat.hpp"

namespace vtc {

/// Dense univariate polynomial over Rat; coeffs()[i] multiplies x^i.
/// The coefficient vector never carries trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rat& a) { return Poly({a}); }
  static Poly x() { return Poly({Rat(0), Rat(1)}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0); }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat operator()(const Rat& at) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(int(i)) + b.coeff(int(i));
    return Poly(std::move(out));
  }
  Poly operator-() const {
    std::vector<Rat> out(c_);
    for (auto& v : out) v = -v;
    return Poly(std::move(out));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(out));
  }
  friend Poly operator*(const Rat& s, const Poly& p) {
    if (s == 0) return {};
    std::vector<Rat> out(p.c_);
    for (auto& v : out) v *= s;
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<Rat> rem(a.c_);
    std::vector<Rat> quot(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0);
    const Rat& lead = b.c_.back();
    for (int i = int(rem.size()) - 1; i >= int(b.c_.size()) - 1; --i) {
      if (rem[i] == 0) continue;
      Rat f = rem[i] / lead;
      int shift = i - (int(b.c_.size()) - 1);
      quot[shift] = f;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[shift + j] -= f * b.c_[j];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
  }

  Poly monic() const {
    if (is_zero()) return {};
    return (Rat(1) / leading()) * *this;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Integer-coefficient representation: p = (scale) * prim, prim primitive with
/// positive leading coefficient. Zero maps to ({}, 0).
struct PrimitiveForm {
  std::vector<Int> coeffs;
  Rat scale;
};

inline PrimitiveForm primitive_form(const Poly& p) {
  if (p.is_zero()) return {{}, Rat(0)};
  Int l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, denominator(c));
  std::vector<Int> ints;
  Int g = 0;
  for (const auto& c : p.coeffs()) {
    Int v = numerator(c) * (l / denominator(c));
    ints.push_back(v);
    g = gcd(g, v);
  }
  if (ints.back() < 0) g = -g;
  for (auto& v : ints) v /= g;
  return {std::move(ints), ratio(g, l)};
}

/// Integer polynomial in descending powers with explicit '*': "3*t^2-6*t+3".
inline std::string format_int_poly(std::span<const Int> coeffs, std::string_view var) {
  std::string out;
  bool first = true;
  for (int i = int(coeffs.size()) - 1; i >= 0; --i) {
    const Int& c = coeffs[i];
    if (c == 0) continue;
    Int mag = c < 0 ? Int(-c) : c;
    if (c < 0) out += "-";
    else if (!first) out += "+";
    first = false;
    if (i == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return first ? std::string("0") : out;
}

inline int term_count(std::span<const Int> coeffs) {
  int n = 0;
  for (const auto& c : coeffs) n += (c != 0);
  return n;
}

/// A polynomial in the auxiliary summand index r.
using IntPoly = Poly;

/// True iff p(r) is an integer for every integer r >= 1.
/// Integer values at deg+1 consecutive integers force integer values at all
/// integers (Newton forward differences), so deg+2 samples suffice.
inline bool integer_valued_on_positives(const IntPoly& p) {
  for (int r = 1; r <= p.degree() + 2; ++r)
    if (!is_integer(p(Rat(r)))) return false;
  return true;
}

/// Smallest r >= 1 with p(r) not an integer, if any.
inline std::optional<std::int64_t> first_non_integer(const IntPoly& p) {
  for (int r = 1; r <= p.degree() + 2; ++r)
    if (!is_integer(p(Rat(r)))) return r;
  return std::nullopt;
}

/// Unique polynomial of degree < points.size() through (x_i, y_i) (Newton form).
inline Poly interpolate(std::span<const std::pair<Rat, Rat>> points) {
  std::size_t n = points.size();
  std::vector<Rat> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - k].first);
  Poly result, basis = Poly::constant(1);
  for (std::size_t k = 0; k < n; ++k) {
    result = result + dd[k] * basis;
    basis = basis * Poly({-points[k].first, Rat(1)});
  }
  return result;
}

/// Factored display for index polynomials: "-(r-1)/2", "(r^2-r)/2", "3".
inline std::string to_factored_string(const IntPoly& p, std::string_view var = "r") {
  if (p.is_zero()) return "0";
  auto [prim, scale] = primitive_form(p);
  std::string out;
  if (scale < 0) out += "-";
  Int a = numerator(scale);
  if (a < 0) a = -a;
  Int b = denominator(scale);
  bool prim_is_one = prim.size() == 1 && prim[0] == 1;
  if (prim_is_one) {
    out += a.str();
  } else {
    if (a != 1) out += a.str() + "*";
    std::string body = format_int_poly(prim, var);
    out += term_count(prim) > 1 ? "(" + body + ")" : body;
  }
  if (b != 1) out += "/" + b.str();
  return out;
}

}  // namespace vtc
