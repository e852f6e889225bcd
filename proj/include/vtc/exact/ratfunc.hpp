#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "vtc/exact/poly.hpp"

namespace vtc {

/// Univariate rational function num/den over Rat in canonical form:
/// gcd(num, den) = 1, den monic, and zero is 0/1. The formal variable is
/// nameless; printing and parsing take its name as an argument.
class RatFunc {
 public:
  RatFunc() : den_(Poly::constant(1)) {}
  RatFunc(const Rat& c) : num_(Poly::constant(c)), den_(Poly::constant(1)) {}  // NOLINT
  RatFunc(std::int64_t c) : RatFunc(Rat(c)) {}                                  // NOLINT
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
  explicit RatFunc(Poly p) : RatFunc(std::move(p), Poly::constant(1)) {}

  static RatFunc var() { return RatFunc(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inverse() const { return RatFunc(1) / *this; }

  RatFunc pow(int e) const {
    RatFunc base = e < 0 ? inverse() : *this;
    RatFunc acc(1);
    for (int i = 0; i < (e < 0 ? -e : e); ++i) acc *= base;
    return acc;
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Value at a rational point; DivisionByZero at a pole.
  Rat operator()(const Rat& at) const {
    Rat d = den_(at);
    if (d == 0) throw DivisionByZero("rational function evaluated at a pole");
    return num_(at) / d;
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly::constant(1);
      return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    Rat lead = den_.leading();
    if (lead != 1) {
      num_ = (Rat(1) / lead) * num_;
      den_ = (Rat(1) / lead) * den_;
    }
  }

  Poly num_;
  Poly den_;
};

namespace detail {
inline RatFunc eval_poly_at(const Poly& p, const RatFunc& g) {
  RatFunc acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * g + RatFunc(*it);
  return acc;
}
}  // namespace detail

/// f∘g. Throws DegenerateSubstitution when den(f)∘g vanishes identically.
inline RatFunc substitute(const RatFunc& f, const RatFunc& g) {
  RatFunc d = detail::eval_poly_at(f.den(), g);
  if (d.is_zero()) throw DegenerateSubstitution("composed denominator is identically zero");
  return detail::eval_poly_at(f.num(), g) / d;
}

/// The value of f when it does not depend on the formal parameter.
inline std::optional<Rat> as_constant(const RatFunc& f) {
  if (f.num().degree() <= 0 && f.den().degree() == 0) return f.num().coeff(0);
  return std::nullopt;
}

/// Integer-coefficient fraction in descending powers, e.g. "(3*t^2-6*t+3)/(4*t)".
inline std::string to_string(const RatFunc& f, std::string_view var) {
  if (f.is_zero()) return "0";
  // f = (sn * pn) / pd with pd monic; clear to a common integer scale.
  auto [pn, sn] = primitive_form(f.num());
  auto [pd, sd] = primitive_form(f.den());
  Rat ratio = sn / sd;  // f = ratio * pn / pd
  Int a = numerator(ratio), b = denominator(ratio);
  for (auto& c : pn) c *= a;
  for (auto& c : pd) c *= b;
  bool den_is_one = pd.size() == 1 && pd[0] == 1;
  auto atomic = [](const std::vector<Int>& p) {
    if (term_count(p) != 1) return false;
    const Int& c = p.back();
    return p.size() == 1 || c == 1 || c == -1;
  };
  std::string ns = format_int_poly(pn, var);
  if (den_is_one) return ns;
  std::string ds = format_int_poly(pd, var);
  if (!atomic(pn)) ns = "(" + ns + ")";
  if (!atomic(pd)) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

namespace detail {

class RatFuncParser {
 public:
  RatFuncParser(std::string_view text, std::string_view var) : s_(text), var_(var) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  bool peek_minus() {
    skip();
    std::size_t p = pos_;
    return consume_minus(s_, p);
  }
  bool take(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc acc = term();
    for (;;) {
      if (take('+')) {
        acc += term();
      } else if (peek_minus()) {
        consume_minus(s_, pos_);
        acc -= term();
      } else {
        return acc;
      }
    }
  }
  RatFunc term() {
    RatFunc acc = unary();
    for (;;) {
      if (take('*')) acc *= unary();
      else if (take('/')) acc /= unary();
      else return acc;
    }
  }
  RatFunc unary() {
    if (take('+')) return unary();
    if (peek_minus()) {
      consume_minus(s_, pos_);
      return -unary();
    }
    return power();
  }
  RatFunc power() {
    RatFunc base = primary();
    if (take('^')) {
      bool neg = peek_minus();
      if (neg) consume_minus(s_, pos_);
      skip();
      Int e = parse_digits(s_, pos_);
      if (e > 4096) fail("exponent too large");
      int ei = static_cast<int>(e);
      return base.pow(neg ? -ei : ei);
    }
    return base;
  }
  RatFunc primary() {
    skip();
    if (take('(')) {
      RatFunc r = expr();
      if (!take(')')) fail("expected ')'");
      return r;
    }
    if (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') return RatFunc(Rat(parse_digits(s_, pos_)));
    if (s_.substr(pos_, var_.size()) == var_ && !var_.empty()) {
      pos_ += var_.size();
      return RatFunc::var();
    }
    fail("expected number, '" + std::string(var_) + "' or '('");
  }

  std::string_view s_;
  std::string_view var_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an arithmetic expression in integers and the named variable.
inline RatFunc parse_ratfunc(std::string_view text, std::string_view var) {
  return detail::RatFuncParser(text, var).parse();
}

/// IntPoly from its text form (any expression that is a polynomial in var).
inline IntPoly parse_intpoly(std::string_view text, std::string_view var = "r") {
  RatFunc f = parse_ratfunc(text, var);
  if (f.den().degree() != 0) throw ParseError("not a polynomial: '" + std::string(text) + "'");
  return f.num();
}

}  // namespace vtc
