#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "vtc/catdata/label.hpp"

namespace vtc {

/// Finite formal sum of simples with positive multiplicities.
class FusionElement {
 public:
  using Terms = std::map<SimpleLabel, std::uint64_t>;

  FusionElement() = default;
  FusionElement(const SimpleLabel& x, std::uint64_t mult = 1) { add(x, mult); }  // NOLINT

  void add(const SimpleLabel& x, std::uint64_t mult = 1) {
    if (mult != 0) terms_[x] += mult;
  }
  void add(const FusionElement& other, std::uint64_t scale = 1) {
    for (const auto& [x, m] : other.terms_) add(x, m * scale);
  }

  std::uint64_t multiplicity(const SimpleLabel& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? 0 : it->second;
  }
  const Terms& terms() const& { return terms_; }
  // by value on temporaries, so `for (auto& t : f(x).terms())` is safe
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& [x, m] : terms_) t += m;
    return t;
  }

  friend FusionElement operator+(FusionElement a, const FusionElement& b) {
    a.add(b);
    return a;
  }
  friend bool operator==(const FusionElement& a, const FusionElement& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// "S(1,1) + 2*S(1,3)"; "0" when empty.
inline std::string to_string(const FusionElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [x, m] : e.terms()) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += std::to_string(m) + "*";
    out += to_string(x);
  }
  return out;
}

}  // namespace vtc
