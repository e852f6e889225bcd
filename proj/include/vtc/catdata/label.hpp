#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "vtc/error.hpp"

namespace vtc {

/// Which family a simple object belongs to.
enum class Kind : std::uint8_t {
  VirasoroT,    // L(c_t, h_{r,s})
  VirasoroKp2,  // L(c_{k+2}, h_{r,s})
  AffineVerma,  // V^k(λ_r)
  SuperVir,     // S(c_s, Δ_{n,m}), n+m even
  OspMod,       // M^k(n), n odd
  Pair,         // Deligne product of two simples
  Induced,      // generic induced module F(base) for user-defined algebras
};

inline constexpr std::int64_t kMaxIndex = 1'000'000;

/// Tagged label of a simple object. Pair and Induced carry their factors.
class SimpleLabel {
 public:
  static SimpleLabel virasoro_t(std::int64_t r, std::int64_t s) { return make(Kind::VirasoroT, r, s); }
  static SimpleLabel virasoro_kp2(std::int64_t r, std::int64_t s) { return make(Kind::VirasoroKp2, r, s); }
  static SimpleLabel affine_verma(std::int64_t r) { return make(Kind::AffineVerma, r, 0); }
  static SimpleLabel super_vir(std::int64_t n, std::int64_t m) {
    if ((n + m) % 2 != 0) throw InvalidLabel("S(n,m) requires n+m even");
    return make(Kind::SuperVir, n, m);
  }
  static SimpleLabel osp(std::int64_t n) {
    if (n % 2 == 0) throw InvalidLabel("M(n) requires n odd");
    return make(Kind::OspMod, n, 0);
  }
  static SimpleLabel pair(SimpleLabel left, SimpleLabel right) {
    SimpleLabel l;
    l.kind_ = Kind::Pair;
    l.factors_ = {std::move(left), std::move(right)};
    return l;
  }
  static SimpleLabel induced(SimpleLabel base) {
    SimpleLabel l;
    l.kind_ = Kind::Induced;
    l.factors_ = {std::move(base)};
    return l;
  }

  /// Non-composite label of the given kind; the second index is ignored for
  /// one-index families.
  static SimpleLabel with_indices(Kind kind, std::int64_t a, std::int64_t b) {
    switch (kind) {
      case Kind::VirasoroT: return virasoro_t(a, b);
      case Kind::VirasoroKp2: return virasoro_kp2(a, b);
      case Kind::AffineVerma: return affine_verma(a);
      case Kind::SuperVir: return super_vir(a, b);
      case Kind::OspMod: return osp(a);
      default: throw InvalidLabel("composite kinds carry no indices");
    }
  }

  Kind kind() const { return kind_; }
  std::int64_t first() const { return a_; }
  std::int64_t second() const { return b_; }
  /// Number of integer indices (0 for composites).
  int arity() const {
    switch (kind_) {
      case Kind::VirasoroT:
      case Kind::VirasoroKp2:
      case Kind::SuperVir: return 2;
      case Kind::AffineVerma:
      case Kind::OspMod: return 1;
      default: return 0;
    }
  }
  std::int64_t index(int k) const { return k == 0 ? a_ : b_; }
  const SimpleLabel& left() const { return factors_.at(0); }
  const SimpleLabel& right() const { return factors_.at(1); }
  const SimpleLabel& base() const { return factors_.at(0); }
  bool is_composite() const { return kind_ == Kind::Pair || kind_ == Kind::Induced; }

  /// Largest integer index anywhere in the label.
  std::int64_t max_index() const {
    std::int64_t m = std::max(a_, b_);
    for (const auto& f : factors_) m = std::max(m, f.max_index());
    return m;
  }

  friend bool operator==(const SimpleLabel& x, const SimpleLabel& y) {
    return x.kind_ == y.kind_ && x.a_ == y.a_ && x.b_ == y.b_ && x.factors_ == y.factors_;
  }
  friend bool operator<(const SimpleLabel& x, const SimpleLabel& y) {
    if (x.kind_ != y.kind_) return x.kind_ < y.kind_;
    if (x.a_ != y.a_) return x.a_ < y.a_;
    if (x.b_ != y.b_) return x.b_ < y.b_;
    return x.factors_ < y.factors_;
  }
  friend bool operator!=(const SimpleLabel& x, const SimpleLabel& y) { return !(x == y); }

 private:
  static SimpleLabel make(Kind k, std::int64_t a, std::int64_t b) {
    SimpleLabel l;
    l.kind_ = k;
    l.a_ = a;
    l.b_ = b;
    int n = l.arity();
    for (int i = 0; i < n; ++i) {
      std::int64_t v = l.index(i);
      if (v < 1 || v > kMaxIndex) throw InvalidLabel("label index " + std::to_string(v) + " out of range [1, 1e6]");
    }
    return l;
  }

  Kind kind_ = Kind::VirasoroT;
  std::int64_t a_ = 0, b_ = 0;
  std::vector<SimpleLabel> factors_;
};

/// "Lt(2,2)", "Lk(1,3)", "V(3)", "S(1,1)", "M(5)", "(Lk(1,2) x Lt(1,2))", "F[...]".
inline std::string to_string(const SimpleLabel& l) {
  auto two = [&](const char* tag) {
    return std::string(tag) + "(" + std::to_string(l.first()) + "," + std::to_string(l.second()) + ")";
  };
  auto one = [&](const char* tag) { return std::string(tag) + "(" + std::to_string(l.first()) + ")"; };
  switch (l.kind()) {
    case Kind::VirasoroT: return two("Lt");
    case Kind::VirasoroKp2: return two("Lk");
    case Kind::AffineVerma: return one("V");
    case Kind::SuperVir: return two("S");
    case Kind::OspMod: return one("M");
    case Kind::Pair: return "(" + to_string(l.left()) + " x " + to_string(l.right()) + ")";
    case Kind::Induced: return "F[" + to_string(l.base()) + "]";
  }
  return "?";
}

namespace detail {

class LabelParser {
 public:
  explicit LabelParser(std::string_view s) : s_(s) {}

  SimpleLabel parse() {
    SimpleLabel l = label();
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return l;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("label: " + what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool starts(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  std::int64_t number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
    if (pos_ == start || pos_ - start > 12) fail("expected index");
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }
  std::pair<std::int64_t, std::int64_t> two() {
    expect('(');
    auto a = number();
    expect(',');
    auto b = number();
    expect(')');
    return {a, b};
  }
  std::int64_t one() {
    expect('(');
    auto a = number();
    expect(')');
    return a;
  }
  SimpleLabel label() {
    if (starts("(")) {
      SimpleLabel l = label();
      skip();
      if (!starts("x")) fail("expected 'x' in pair");
      SimpleLabel r = label();
      expect(')');
      return SimpleLabel::pair(std::move(l), std::move(r));
    }
    if (starts("F[")) {
      SimpleLabel b = label();
      expect(']');
      return SimpleLabel::induced(std::move(b));
    }
    if (starts("Lt")) {
      auto [a, b] = two();
      return SimpleLabel::virasoro_t(a, b);
    }
    if (starts("Lk")) {
      auto [a, b] = two();
      return SimpleLabel::virasoro_kp2(a, b);
    }
    if (starts("V")) return SimpleLabel::affine_verma(one());
    if (starts("S")) {
      auto [a, b] = two();
      return SimpleLabel::super_vir(a, b);
    }
    if (starts("M")) return SimpleLabel::osp(one());
    fail("unknown label family");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline SimpleLabel parse_label(std::string_view s) { return detail::LabelParser(s).parse(); }

}  // namespace vtc
