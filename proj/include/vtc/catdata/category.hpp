#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vtc/catdata/fusion_element.hpp"
#include "vtc/catdata/label.hpp"
#include "vtc/exact/ratfunc.hpp"

namespace vtc {

// ---------------------------------------------------------------------------
// Weight formulas. Each returns a RatFunc in the named parameter.

/// h_{r,s} = (r²-1)/4·x - (rs-1)/2 + (s²-1)/4·x⁻¹ in the Virasoro parameter x.
inline RatFunc virasoro_weight(std::int64_t r, std::int64_t s) {
  Rat a = Rat(r * r - 1, 4), b = Rat(r * s - 1, 2), c = Rat(s * s - 1, 4);
  return RatFunc(Poly({c, -b, a}), Poly::x());
}

/// Δ_{n,m} = (n²-1)/8·s + (m²-1)/8·s⁻¹ - (mn-1)/4.
inline RatFunc super_virasoro_weight(std::int64_t n, std::int64_t m) {
  Rat a = Rat(n * n - 1, 8), b = Rat(m * n - 1, 4), c = Rat(m * m - 1, 8);
  return RatFunc(Poly({c, -b, a}), Poly::x());
}

/// Sugawara lowest weight of V^k(λ_r), λ_r = (r-1)ω: (r²-1)/(4(k+2)), as a
/// function of the shifted level k+2.
inline RatFunc affine_verma_weight_kp2(std::int64_t r) {
  return RatFunc(Poly::constant(Rat(r * r - 1, 4)), Poly::x());
}

/// Lowest weight (n²-1)/(8s) of M^k(n).
inline RatFunc osp_weight(std::int64_t n) { return RatFunc(Poly::constant(Rat(n * n - 1, 8)), Poly::x()); }

// ---------------------------------------------------------------------------
// Parameter chain k = (2-3t)/(2t-1), s = 2k+3, t = (s+1)/(2s), k+2 = (s+1)/2.

struct ParamChain {
  RatFunc k_of_t;
  RatFunc s_of_k;
  RatFunc t_of_s;
  RatFunc kp2_of_s;
};

namespace detail {
inline ParamChain build_param_chain() {
  RatFunc x = RatFunc::var();
  ParamChain pc{(RatFunc(2) - 3 * x) / (2 * x - 1), 2 * x + 3, (x + 1) / (2 * x), (x + 1) / 2};
  RatFunc s_of_t = substitute(pc.s_of_k, pc.k_of_t);
  if (!(s_of_t == RatFunc(1) / (2 * x - 1))) throw std::logic_error("parameter chain: s(k(t)) != 1/(2t-1)");
  if (!(substitute(pc.t_of_s, s_of_t) == x)) throw std::logic_error("parameter chain: t(s(t)) != t");
  if (!(substitute(pc.kp2_of_s, s_of_t) == pc.k_of_t + 2)) throw std::logic_error("parameter chain: k+2 mismatch");
  return pc;
}
}  // namespace detail

/// The four substitutions, with their identities checked on first use.
inline const ParamChain& param_chain() {
  static const ParamChain pc = detail::build_param_chain();
  return pc;
}

// ---------------------------------------------------------------------------
// Fusion rules (category independent, by label family).

namespace detail {

// |a-b|+1, |a-b|+3, ..., a+b-1, stopping past `upto`
template <class F>
void parity_range(std::int64_t a, std::int64_t b, std::int64_t upto, F&& f) {
  std::int64_t lo = a > b ? a - b + 1 : b - a + 1;
  std::int64_t hi = std::min(a + b - 1, upto);
  for (std::int64_t c = lo; c <= hi; c += 2) f(c);
}

}  // namespace detail

/// Adds mult·(x ⊠ y) to out. Two-index families use the double parity-range
/// rule, one-index families the single rule, pairs fuse factor-wise with
/// multiplicities multiplying. Summands with an index above `upto` are skipped.
inline void fuse_into(FusionElement& out, const SimpleLabel& x, const SimpleLabel& y, std::uint64_t mult = 1,
                      std::int64_t upto = std::numeric_limits<std::int64_t>::max()) {
  if (x.kind() != y.kind()) throw CategoryMismatch("cannot fuse " + to_string(x) + " with " + to_string(y));
  switch (x.kind()) {
    case Kind::VirasoroT:
    case Kind::VirasoroKp2:
    case Kind::SuperVir:
      detail::parity_range(x.first(), y.first(), upto, [&](std::int64_t a) {
        detail::parity_range(x.second(), y.second(), upto,
                             [&](std::int64_t b) { out.add(SimpleLabel::with_indices(x.kind(), a, b), mult); });
      });
      return;
    case Kind::AffineVerma:
    case Kind::OspMod:
      detail::parity_range(x.first(), y.first(), upto,
                           [&](std::int64_t a) { out.add(SimpleLabel::with_indices(x.kind(), a, 0), mult); });
      return;
    case Kind::Pair: {
      FusionElement l, r;
      fuse_into(l, x.left(), y.left(), 1, upto);
      fuse_into(r, x.right(), y.right(), 1, upto);
      for (const auto& [a, ma] : l.terms())
        for (const auto& [b, mb] : r.terms()) out.add(SimpleLabel::pair(a, b), mult * ma * mb);
      return;
    }
    case Kind::Induced: break;
  }
  throw CategoryMismatch("no fusion rule for " + to_string(x));
}

/// x ⊠ y for two labels of the same family.
inline FusionElement fuse_labels(const SimpleLabel& x, const SimpleLabel& y) {
  FusionElement out;
  fuse_into(out, x, y);
  return out;
}

// ---------------------------------------------------------------------------
// Category specifications.

enum class Parity { Even, Odd };

inline Parity operator*(Parity a, Parity b) { return a == b ? Parity::Even : Parity::Odd; }
inline std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

/// One of the five completion hypotheses, recorded (not proved).
struct ChecklistItem {
  int number;
  std::string condition;
  bool satisfied;
  std::string justification;
};

inline const std::vector<std::string>& checklist_conditions() {
  static const std::vector<std::string> c = {
      "the vertex operator algebra V is an object of C",
      "C is closed under submodules, quotients and finite direct sums",
      "every module in C is finitely generated",
      "C admits vertex and braided tensor category structure",
      "images of intertwining operators from C-modules into Ind(C) lie in C",
  };
  return c;
}

struct CategorySpec {
  std::string name;
  /// Name of the formal parameter weights are expressed in ("t" or "s").
  std::string base_parameter;
  std::function<bool(const SimpleLabel&)> contains;
  std::function<RatFunc(const SimpleLabel&)> weight_of;
  std::function<Parity(const SimpleLabel&)> parity_of;
  /// All simples with every index <= bound, sorted.
  std::function<std::vector<SimpleLabel>(std::int64_t)> labels;
  std::optional<SimpleLabel> unit;
  /// Justifications for conditions 1..5 (empty string = not satisfied).
  std::vector<std::string> justifications;
  std::vector<std::shared_ptr<const CategorySpec>> factors;
};

using CategoryPtr = std::shared_ptr<const CategorySpec>;

inline void require_member(const CategorySpec& cat, const SimpleLabel& x) {
  if (!cat.contains(x)) throw ForeignLabel(to_string(x) + " is not a simple of " + cat.name);
}

/// Exact conformal weight (twist exponent) in cat.base_parameter.
inline RatFunc weight(const CategorySpec& cat, const SimpleLabel& x) {
  require_member(cat, x);
  return cat.weight_of(x);
}

inline FusionElement fusion(const CategorySpec& cat, const SimpleLabel& x, const SimpleLabel& y) {
  require_member(cat, x);
  require_member(cat, y);
  return fuse_labels(x, y);
}

struct Twist {
  RatFunc exponent;
  Parity parity;
};

/// θ_x = P_x · e^{2πi·exponent}.
inline Twist twist_exponent(const CategorySpec& cat, const SimpleLabel& x) {
  require_member(cat, x);
  return {cat.weight_of(x), cat.parity_of(x)};
}

inline std::vector<ChecklistItem> checklist_report(const CategorySpec& cat) {
  std::vector<ChecklistItem> out;
  const auto& conds = checklist_conditions();
  for (int k = 0; k < 5; ++k) {
    std::string j = k < int(cat.justifications.size()) ? cat.justifications[k] : std::string();
    bool ok = !j.empty();
    if (k == 0 && !cat.unit) {
      ok = false;
      j = "no unit object specified";
    } else if (!ok) {
      j = "no justification recorded";
    }
    out.push_back({k + 1, conds[k], ok, j});
  }
  return out;
}

namespace detail {

inline bool in_bounds(const SimpleLabel& x, std::int64_t bound) { return x.max_index() <= bound; }

inline std::vector<std::string> c1_cofinite_justifications() {
  return {
      "the vacuum module is C1-cofinite",
      "C1-cofinite modules are closed under submodules, quotients and finite direct sums",
      "C1-cofinite grading-restricted modules are finitely generated",
      "C1-cofinite modules closed under contragredients carry vertex tensor category structure",
      "images of intertwining operators among C1-cofinite modules are C1-cofinite",
  };
}

inline std::vector<std::string> extension_justifications() {
  return {
      "the extension algebra is the unit of its category of local modules",
      "semisimple at generic parameter: local modules are finite sums of the listed simples",
      "each simple local module is induced from a simple, hence finitely generated",
      "local modules for a commutative algebra in a braided completion form a braided tensor category",
      "inherited from the base Deligne product through induction",
  };
}

inline CategoryPtr make_virasoro(Kind kind) {
  auto c = std::make_shared<CategorySpec>();
  bool is_t = kind == Kind::VirasoroT;
  c->name = is_t ? "virasoro-t" : "virasoro-kp2";
  c->base_parameter = is_t ? "t" : "s";
  c->contains = [kind](const SimpleLabel& x) { return x.kind() == kind; };
  c->weight_of = [is_t](const SimpleLabel& x) {
    RatFunc h = virasoro_weight(x.first(), x.second());
    return is_t ? h : substitute(h, param_chain().kp2_of_s);
  };
  c->parity_of = [](const SimpleLabel&) { return Parity::Even; };
  c->labels = [kind](std::int64_t b) {
    std::vector<SimpleLabel> out;
    for (std::int64_t r = 1; r <= b; ++r)
      for (std::int64_t s = 1; s <= b; ++s) out.push_back(SimpleLabel::with_indices(kind, r, s));
    return out;
  };
  c->unit = SimpleLabel::with_indices(kind, 1, 1);
  c->justifications = c1_cofinite_justifications();
  return c;
}

inline CategoryPtr make_kl_sl2() {
  auto c = std::make_shared<CategorySpec>();
  c->name = "kl-sl2";
  c->base_parameter = "s";
  c->contains = [](const SimpleLabel& x) { return x.kind() == Kind::AffineVerma; };
  c->weight_of = [](const SimpleLabel& x) {
    return substitute(affine_verma_weight_kp2(x.first()), param_chain().kp2_of_s);
  };
  c->parity_of = [](const SimpleLabel&) { return Parity::Even; };
  c->labels = [](std::int64_t b) {
    std::vector<SimpleLabel> out;
    for (std::int64_t r = 1; r <= b; ++r) out.push_back(SimpleLabel::affine_verma(r));
    return out;
  };
  c->unit = SimpleLabel::affine_verma(1);
  c->justifications = {
      "V^k(sl2) is a generalized Verma module in KL_k",
      "KL_k(sl2) is closed under submodules, quotients and finite direct sums",
      "objects of KL_k are finitely generated by definition",
      "KL_k(g) has vertex tensor category structure for k+h not in Q>=0",
      "KL_k is semisimple at generic level, so images of intertwining operators are finite sums",
  };
  return c;
}

inline CategoryPtr make_supervir() {
  auto c = std::make_shared<CategorySpec>();
  c->name = "supervir";
  c->base_parameter = "s";
  c->contains = [](const SimpleLabel& x) { return x.kind() == Kind::SuperVir; };
  c->weight_of = [](const SimpleLabel& x) { return super_virasoro_weight(x.first(), x.second()); };
  c->parity_of = [](const SimpleLabel& x) {
    return ((x.first() + x.second()) / 2 - 1) % 2 == 0 ? Parity::Even : Parity::Odd;
  };
  c->labels = [](std::int64_t b) {
    std::vector<SimpleLabel> out;
    for (std::int64_t n = 1; n <= b; ++n)
      for (std::int64_t m = 1; m <= b; ++m)
        if ((n + m) % 2 == 0) out.push_back(SimpleLabel::super_vir(n, m));
    return out;
  };
  c->unit = SimpleLabel::super_vir(1, 1);
  c->justifications = extension_justifications();
  return c;
}

inline CategoryPtr make_osp() {
  auto c = std::make_shared<CategorySpec>();
  c->name = "osp";
  c->base_parameter = "s";
  c->contains = [](const SimpleLabel& x) { return x.kind() == Kind::OspMod; };
  c->weight_of = [](const SimpleLabel& x) { return osp_weight(x.first()); };
  c->parity_of = [](const SimpleLabel&) { return Parity::Even; };
  c->labels = [](std::int64_t b) {
    std::vector<SimpleLabel> out;
    for (std::int64_t n = 1; n <= b; n += 2) out.push_back(SimpleLabel::osp(n));
    return out;
  };
  c->unit = SimpleLabel::osp(1);
  c->justifications = extension_justifications();
  return c;
}

// Re-express a weight of `from` in the parameter `to`.
inline RatFunc align_parameter(const RatFunc& f, const std::string& from, const std::string& to) {
  if (from == to) return f;
  if (from == "t" && to == "s") return substitute(f, param_chain().t_of_s);
  if (from == "s" && to == "t") return substitute(f, substitute(param_chain().s_of_k, param_chain().k_of_t));
  throw CategoryMismatch("cannot align parameter '" + from + "' with '" + to + "'");
}

}  // namespace detail

/// Deligne product: simples are pairs, weights add (after aligning both
/// factors to one parameter, s when they differ), parities multiply.
inline CategoryPtr deligne(CategoryPtr a, CategoryPtr b) {
  auto c = std::make_shared<CategorySpec>();
  c->name = "deligne(" + a->name + "," + b->name + ")";
  c->base_parameter = a->base_parameter == b->base_parameter ? a->base_parameter : std::string("s");
  c->factors = {a, b};
  std::string param = c->base_parameter;
  c->contains = [a, b](const SimpleLabel& x) {
    return x.kind() == Kind::Pair && a->contains(x.left()) && b->contains(x.right());
  };
  c->weight_of = [a, b, param](const SimpleLabel& x) {
    return detail::align_parameter(a->weight_of(x.left()), a->base_parameter, param) +
           detail::align_parameter(b->weight_of(x.right()), b->base_parameter, param);
  };
  c->parity_of = [a, b](const SimpleLabel& x) { return a->parity_of(x.left()) * b->parity_of(x.right()); };
  c->labels = [a, b](std::int64_t bound) {
    std::vector<SimpleLabel> out;
    for (const auto& x : a->labels(bound))
      for (const auto& y : b->labels(bound)) out.push_back(SimpleLabel::pair(x, y));
    std::sort(out.begin(), out.end());
    return out;
  };
  if (a->unit && b->unit) c->unit = SimpleLabel::pair(*a->unit, *b->unit);
  auto ja = checklist_report(*a), jb = checklist_report(*b);
  for (int k = 0; k < 5; ++k)
    c->justifications.push_back(ja[k].satisfied && jb[k].satisfied
                                    ? "semisimple Deligne product of categories with vertex tensor category "
                                      "structure at generic parameter"
                                    : "");
  return c;
}

/// Built-ins: "virasoro-t", "virasoro-kp2", "kl-sl2", "supervir", "osp",
/// and "deligne(a,b)" of any two of them.
inline CategoryPtr builtin_category(const std::string& name) {
  if (name == "virasoro-t") return detail::make_virasoro(Kind::VirasoroT);
  if (name == "virasoro-kp2") return detail::make_virasoro(Kind::VirasoroKp2);
  if (name == "kl-sl2") return detail::make_kl_sl2();
  if (name == "supervir") return detail::make_supervir();
  if (name == "osp") return detail::make_osp();
  const std::string prefix = "deligne(";
  if (name.rfind(prefix, 0) == 0 && name.back() == ')') {
    std::string inner = name.substr(prefix.size(), name.size() - prefix.size() - 1);
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      else if (inner[i] == ')') --depth;
      else if (inner[i] == ',' && depth == 0)
        return deligne(builtin_category(inner.substr(0, i)), builtin_category(inner.substr(i + 1)));
    }
  }
  throw ParseError("unknown category '" + name + "'");
}

/// Restricts a category to simples whose indices are all <= bound.
inline CategoryPtr restrict_bound(CategoryPtr base, std::int64_t bound, std::string name) {
  auto c = std::make_shared<CategorySpec>(*base);
  c->name = std::move(name);
  c->contains = [base, bound](const SimpleLabel& x) { return base->contains(x) && detail::in_bounds(x, bound); };
  c->labels = [base, bound](std::int64_t b) { return base->labels(std::min(b, bound)); };
  return c;
}

}  // namespace vtc
