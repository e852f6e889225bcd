#pragma once

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vtc/fusion.hpp"

namespace vtc {

// ---------------------------------------------------------------------------
// Summand templates: labels whose indices are affine in the summand index r.

/// slope*r + offset.
struct IndexExpr {
  std::int64_t slope = 0;
  std::int64_t offset = 1;

  std::int64_t at(std::int64_t r) const { return slope * r + offset; }
  friend bool operator==(const IndexExpr&, const IndexExpr&) = default;
};

inline std::string to_string(const IndexExpr& e) {
  std::string out;
  if (e.slope != 0) {
    if (e.slope == -1) out = "-";
    else if (e.slope != 1) out = std::to_string(e.slope) + "*";
    out += "r";
  }
  if (e.offset != 0 || out.empty()) {
    if (!out.empty() && e.offset > 0) out += "+";
    out += std::to_string(e.offset);
  }
  return out;
}

/// A leaf (family + index expressions) or a pair of templates.
struct LabelTemplate {
  Kind kind = Kind::VirasoroT;
  std::array<IndexExpr, 2> index{};
  std::vector<LabelTemplate> factors;  // two entries for Kind::Pair

  SimpleLabel at(std::int64_t r) const {
    if (kind == Kind::Pair) return SimpleLabel::pair(factors[0].at(r), factors[1].at(r));
    return SimpleLabel::with_indices(kind, index[0].at(r), index[1].at(r));
  }
  int arity() const {
    switch (kind) {
      case Kind::AffineVerma:
      case Kind::OspMod: return 1;
      case Kind::Pair:
      case Kind::Induced: return 0;
      default: return 2;
    }
  }
};

inline std::string to_string(const LabelTemplate& t) {
  switch (t.kind) {
    case Kind::Pair: return "(" + to_string(t.factors[0]) + " x " + to_string(t.factors[1]) + ")";
    case Kind::VirasoroT: return "Lt(" + to_string(t.index[0]) + "," + to_string(t.index[1]) + ")";
    case Kind::VirasoroKp2: return "Lk(" + to_string(t.index[0]) + "," + to_string(t.index[1]) + ")";
    case Kind::SuperVir: return "S(" + to_string(t.index[0]) + "," + to_string(t.index[1]) + ")";
    case Kind::AffineVerma: return "V(" + to_string(t.index[0]) + ")";
    case Kind::OspMod: return "M(" + to_string(t.index[0]) + ")";
    case Kind::Induced: break;
  }
  return "?";
}

namespace detail {

class TemplateParser {
 public:
  explicit TemplateParser(std::string_view s) : s_(s) {}

  LabelTemplate parse() {
    LabelTemplate t = label();
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("summand template: " + what + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  bool take(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!take(std::string_view(&c, 1))) fail(std::string("expected '") + c + "'");
  }
  std::int64_t integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
    if (pos_ == start || pos_ - start > 12) fail("expected integer");
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }
  bool at_digit() {
    skip();
    return pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9';
  }

  // [-] term { (+|-) term }, term = int | r | int*r
  IndexExpr expr() {
    IndexExpr e{0, 0};
    bool neg = take("-");
    for (;;) {
      std::int64_t sign = neg ? -1 : 1;
      if (take("r")) {
        e.slope += sign;
      } else {
        std::int64_t k = integer();
        if (take("*")) {
          if (!take("r")) fail("expected 'r' after '*'");
          e.slope += sign * k;
        } else {
          e.offset += sign * k;
        }
      }
      if (take("+")) neg = false;
      else if (take("-")) neg = true;
      else break;
    }
    return e;
  }

  LabelTemplate label() {
    LabelTemplate t;
    if (take("(")) {
      t.kind = Kind::Pair;
      t.factors.push_back(label());
      if (!take("x")) fail("expected 'x' in pair");
      t.factors.push_back(label());
      expect(')');
      return t;
    }
    if (take("Lt")) t.kind = Kind::VirasoroT;
    else if (take("Lk")) t.kind = Kind::VirasoroKp2;
    else if (take("V")) t.kind = Kind::AffineVerma;
    else if (take("S")) t.kind = Kind::SuperVir;
    else if (take("M")) t.kind = Kind::OspMod;
    else fail("unknown label family");
    expect('(');
    t.index[0] = expr();
    if (t.arity() == 2) {
      expect(',');
      t.index[1] = expr();
    } else {
      t.index[1] = IndexExpr{0, 0};
    }
    expect(')');
    return t;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// "(Lk(1,r) x Lt(1,r))", "(V(r) x Lt(1,2*r-1))".
inline LabelTemplate parse_template(std::string_view s) { return detail::TemplateParser(s).parse(); }

// ---------------------------------------------------------------------------
// Algebra objects: A = ⊕_{r>=1} summand(r), never materialized.

struct AlgebraObject {
  std::string name;
  CategoryPtr base;
  LabelTemplate summand_rule;
  /// Category of the induced simples (null for user-defined algebras).
  CategoryPtr induced_category;
  /// Display label of F(x); F[x] unless the algebra names it.
  std::function<SimpleLabel(const SimpleLabel&)> to_induced;
  /// Inverse of to_induced on its image.
  std::function<SimpleLabel(const SimpleLabel&)> from_induced;
  /// Conventional induction base for index selectors (n, m), if any.
  std::function<SimpleLabel(std::int64_t, std::int64_t)> standard_base;
  int standard_arity = 0;  // how many of (n, m) standard_base reads

  SimpleLabel summand(std::int64_t r) const { return summand_rule.at(r); }
};

using AlgebraPtr = std::shared_ptr<const AlgebraObject>;

namespace detail {

inline void check_template_total(const LabelTemplate& t) {
  if (t.kind == Kind::Pair) {
    for (const auto& f : t.factors) check_template_total(f);
    return;
  }
  for (int i = 0; i < t.arity(); ++i) {
    const IndexExpr& e = t.index[i];
    if (e.slope < 0 || e.at(1) < 1)
      throw InvalidSystem("summand template " + to_string(t) + " leaves the positive indices");
  }
}

inline SimpleLabel default_to_induced(const SimpleLabel& x) { return SimpleLabel::induced(x); }
inline SimpleLabel default_from_induced(const SimpleLabel& x) {
  if (x.kind() != Kind::Induced) throw ForeignLabel(to_string(x) + " is not an induced label");
  return x.base();
}

}  // namespace detail

/// Checks that the summands stay in the base category and summand(1) is its unit.
inline void validate_algebra(const AlgebraObject& alg) {
  if (!alg.base) throw InvalidSystem("algebra " + alg.name + " has no base category");
  detail::check_template_total(alg.summand_rule);
  if (!alg.base->unit || alg.summand(1) != *alg.base->unit)
    throw InvalidSystem("summand(1) of " + alg.name + " is not the unit of " + alg.base->name);
  for (std::int64_t r = 1; r <= 8; ++r)
    if (!alg.base->contains(alg.summand(r)))
      throw InvalidSystem("summand(" + std::to_string(r) + ") of " + alg.name + " is not in " + alg.base->name);
}

inline AlgebraPtr make_algebra(AlgebraObject alg) {
  if (!alg.to_induced) alg.to_induced = detail::default_to_induced;
  if (!alg.from_induced) alg.from_induced = detail::default_from_induced;
  validate_algebra(alg);
  return std::make_shared<const AlgebraObject>(std::move(alg));
}

/// "svir-ext": S(c_s,0)⊗F = ⊕_r L(c_{k+2},h_{1,r}) ⊗ L(c_t,h_{1,r}).
/// "osp-ext": V^k(osp(1|2)) = ⊕_r V^k(λ_r) ⊗ L(c_t,h_{1,r}).
inline AlgebraPtr builtin_algebra(const std::string& name) {
  AlgebraObject a;
  a.name = name;
  if (name == "svir-ext") {
    a.base = builtin_category("deligne(virasoro-kp2,virasoro-t)");
    a.summand_rule = parse_template("(Lk(1,r) x Lt(1,r))");
    a.induced_category = builtin_category("supervir");
    a.standard_base = [](std::int64_t n, std::int64_t m) {
      return SimpleLabel::pair(SimpleLabel::virasoro_kp2(n, 1), SimpleLabel::virasoro_t(m, 1));
    };
    a.standard_arity = 2;
    a.to_induced = [](const SimpleLabel& x) {
      if (x.kind() == Kind::Pair && x.left().second() == 1 && x.right().second() == 1 &&
          (x.left().first() + x.right().first()) % 2 == 0)
        return SimpleLabel::super_vir(x.left().first(), x.right().first());
      return SimpleLabel::induced(x);
    };
    a.from_induced = [](const SimpleLabel& x) {
      if (x.kind() == Kind::SuperVir)
        return SimpleLabel::pair(SimpleLabel::virasoro_kp2(x.first(), 1), SimpleLabel::virasoro_t(x.second(), 1));
      return detail::default_from_induced(x);
    };
  } else if (name == "osp-ext") {
    a.base = builtin_category("deligne(kl-sl2,virasoro-t)");
    a.summand_rule = parse_template("(V(r) x Lt(1,r))");
    a.induced_category = builtin_category("osp");
    a.standard_base = [](std::int64_t n, std::int64_t) {
      return SimpleLabel::pair(SimpleLabel::affine_verma(1), SimpleLabel::virasoro_t(n, 1));
    };
    a.standard_arity = 1;
    a.to_induced = [](const SimpleLabel& x) {
      if (x.kind() == Kind::Pair && x.left().first() == 1 && x.right().second() == 1 && x.right().first() % 2 == 1)
        return SimpleLabel::osp(x.right().first());
      return SimpleLabel::induced(x);
    };
    a.from_induced = [](const SimpleLabel& x) {
      if (x.kind() == Kind::OspMod)
        return SimpleLabel::pair(SimpleLabel::affine_verma(1), SimpleLabel::virasoro_t(x.first(), 1));
      return detail::default_from_induced(x);
    };
  } else {
    throw ParseError("unknown algebra '" + name + "'");
  }
  return make_algebra(std::move(a));
}

// ---------------------------------------------------------------------------
// Induced modules.

class InducedModule {
 public:
  InducedModule(AlgebraPtr alg, SimpleLabel base) : alg_(std::move(alg)), base_(std::move(base)) {}

  const AlgebraObject& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const SimpleLabel& base() const { return base_; }
  SimpleLabel label() const { return alg_->to_induced(base_); }

  /// summand(r) ⊠ base.
  FusionElement restriction(std::int64_t r) const { return fuse_labels(alg_->summand(r), base_); }

 private:
  AlgebraPtr alg_;
  SimpleLabel base_;
};

inline InducedModule induce(const AlgebraPtr& alg, const SimpleLabel& base) {
  require_member(*alg->base, base);
  return InducedModule(alg, base);
}

// ---------------------------------------------------------------------------
// Locality.

enum class Verdict { Local, NonLocal, Undecidable };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Local: return "local";
    case Verdict::NonLocal: return "non-local";
    case Verdict::Undecidable: return "undecidable";
  }
  return "?";
}

struct LocalityCertificate {
  Verdict verdict;
  /// Monodromy exponent of the base against summand(r), when it is a single
  /// polynomial family in r.
  std::optional<IntPoly> family;
  /// Smallest r with non-trivial monodromy (non-local verdicts).
  std::optional<std::int64_t> witness;
  /// Set when the verdict rests on r <= truncate only.
  std::optional<std::int64_t> checked_up_to;
};

namespace detail {

inline constexpr int kFamilyFit = 5;     // degree <= 4
inline constexpr int kFamilyVerify = 8;  // checked at r = 6..8

// Exponents e_z(r) = h_z - h_{A_r} - h_base over the summands z of A_r ⊠ base.
inline std::vector<RatFunc> locality_exponents(const InducedModule& mod, std::int64_t r) {
  const CategorySpec& cat = *mod.algebra().base;
  SimpleLabel a = mod.algebra().summand(r);
  RatFunc ha = cat.weight_of(a), hb = cat.weight_of(mod.base());
  std::vector<RatFunc> out;
  for (const auto& [z, m] : fuse_labels(a, mod.base()).terms()) out.push_back(cat.weight_of(z) - ha - hb);
  return out;
}

}  // namespace detail

/// Local iff the monodromy of base with every summand of A is trivial.
inline LocalityCertificate locality(const AlgebraPtr& alg, const SimpleLabel& base, std::int64_t truncate = 20) {
  InducedModule mod = induce(alg, base);
  std::vector<std::pair<Rat, Rat>> pts;
  std::optional<std::int64_t> witness;
  bool single = true;
  for (std::int64_t r = 1; r <= detail::kFamilyVerify; ++r) {
    auto es = detail::locality_exponents(mod, r);
    for (const auto& e : es)
      if (!witness && classify_exponent(e) != ExponentStatus::Integer) witness = r;
    auto c = es.size() == 1 ? as_constant(es[0]) : std::nullopt;
    if (!c) single = false;
    if (single) pts.emplace_back(Rat(r), *c);
  }
  if (single) {
    std::span<const std::pair<Rat, Rat>> fit(pts.data(), detail::kFamilyFit);
    IntPoly p = interpolate(fit);
    bool fits = std::all_of(pts.begin() + detail::kFamilyFit, pts.end(),
                            [&](const auto& pt) { return p(pt.first) == pt.second; });
    if (fits) {
      if (auto w = first_non_integer(p)) return {Verdict::NonLocal, p, *w, std::nullopt};
      return {Verdict::Local, p, std::nullopt, std::nullopt};
    }
  }
  if (witness) return {Verdict::NonLocal, std::nullopt, witness, std::nullopt};
  // No closed form: scan r <= truncate.
  for (std::int64_t r = detail::kFamilyVerify + 1; r <= truncate; ++r)
    for (const auto& e : detail::locality_exponents(mod, r))
      if (classify_exponent(e) != ExponentStatus::Integer) return {Verdict::NonLocal, std::nullopt, r, truncate};
  return {Verdict::Undecidable, std::nullopt, std::nullopt, std::max<std::int64_t>(truncate, detail::kFamilyVerify)};
}

inline bool is_local(const AlgebraPtr& alg, const SimpleLabel& base) {
  return locality(alg, base).verdict == Verdict::Local;
}

// ---------------------------------------------------------------------------
// Minimum-weight summand.

struct MinWeight {
  std::int64_t r;
  SimpleLabel summand;
  RatFunc weight;
};

inline const Rat& default_sample() {
  static const Rat s(355, 113);
  return s;
}

/// Picks the argmin over r <= truncate by evaluating at `sample`; ties go to
/// the smallest r. The returned weight is exact.
inline MinWeight min_weight_summand(const InducedModule& mod, const Rat& sample = default_sample(),
                                    std::int64_t truncate = 20) {
  if (truncate < 1) throw TruncationTooSmall("truncation must be >= 1");
  const CategorySpec& cat = *mod.algebra().base;
  std::optional<MinWeight> best;
  Rat best_value;
  for (std::int64_t r = 1; r <= truncate; ++r) {
    for (const auto& [z, m] : mod.restriction(r).terms()) {
      RatFunc w = cat.weight_of(z);
      Rat v = w(sample);
      if (!best || v < best_value) {
        best = MinWeight{r, z, w};
        best_value = v;
      }
    }
  }
  if (best->r == truncate)
    throw TruncationTooSmall("minimum at r = " + std::to_string(truncate) + " may lie beyond the truncation");
  return *best;
}

// ---------------------------------------------------------------------------
// Frobenius reciprocity.

namespace detail {

// Largest r for which summand_rule(r) ⊠ b2 can contain `target`; nullopt when
// no index of the template grows with r. The fusion range |a-b|+1 <= c forces
// a <= b+c-1 on every index.
inline std::optional<std::int64_t> support_bound(const LabelTemplate& t, const SimpleLabel& b2,
                                                 const SimpleLabel& target) {
  if (t.kind == Kind::Pair) {
    if (b2.kind() != Kind::Pair || target.kind() != Kind::Pair) return 0;
    auto l = support_bound(t.factors[0], b2.left(), target.left());
    auto r = support_bound(t.factors[1], b2.right(), target.right());
    if (l && r) return std::min(*l, *r);
    return l ? l : r;
  }
  if (b2.kind() != t.kind || target.kind() != t.kind) return 0;
  std::optional<std::int64_t> best;
  for (int i = 0; i < t.arity(); ++i) {
    const IndexExpr& e = t.index[i];
    if (e.slope <= 0) continue;
    std::int64_t lim = b2.index(i) + target.index(i) - 1 - e.offset;
    std::int64_t rmax = lim < 0 ? 0 : lim / e.slope;
    best = best ? std::min(*best, rmax) : rmax;
  }
  return best;
}

}  // namespace detail

/// dim Hom(F(base1), F(base2)) = Σ_r dim Hom(base1, summand(r) ⊠ base2),
/// summed exactly over the finite support.
inline std::uint64_t frobenius_dim(const AlgebraPtr& alg, const SimpleLabel& base1, const SimpleLabel& base2) {
  require_member(*alg->base, base1);
  require_member(*alg->base, base2);
  auto bound = detail::support_bound(alg->summand_rule, base2, base1);
  if (!bound) throw InfiniteSupport("summands of " + alg->name + " do not grow with r");
  std::uint64_t d = 0;
  for (std::int64_t r = 1; r <= *bound; ++r) d += fuse_labels(alg->summand(r), base2).multiplicity(base1);
  return d;
}

// ---------------------------------------------------------------------------
// Induced fusion: F(x) ⊠ F(y) = F(x ⊠ y), induction being monoidal.

inline FusionElement induced_fusion(const AlgebraPtr& alg, const SimpleLabel& base1, const SimpleLabel& base2) {
  for (const auto* b : {&base1, &base2})
    if (!is_local(alg, *b)) throw NotLocal(to_string(*b) + " does not induce to a local module of " + alg->name);
  FusionElement out;
  for (const auto& [z, m] : fusion(*alg->base, base1, base2).terms()) out.add(alg->to_induced(z), m);
  return out;
}

struct OracleReport {
  bool restriction_agrees;  // double sum vs restriction of the induced product
  bool table_agrees;        // induced product vs fusion in the induced category
  bool ok() const { return restriction_agrees && table_agrees; }
};

namespace detail {

inline FusionElement truncated_algebra(const AlgebraObject& alg, std::int64_t truncate) {
  FusionElement a;
  for (std::int64_t r = 1; r <= truncate; ++r) a.add(alg.summand(r));
  return a;
}

}  // namespace detail

/// Independent check of induced_fusion. With A_T = ⊕_{r<=T} summand(r):
///   ⊕_{r,r'<=T} (A_r ⊠ base1) ⊠ (A_r' ⊠ base2)
/// must agree with A_T ⊠ A_T ⊠ (restriction of the induced product) on every
/// label with indices <= T (only the last multiplication is cut off at T), and the
/// induced product must match the fusion rule of the induced category when the
/// algebra names one.
inline OracleReport restriction_oracle_check(const AlgebraPtr& alg, const SimpleLabel& base1,
                                             const SimpleLabel& base2, std::int64_t truncate) {
  FusionElement product = induced_fusion(alg, base1, base2);
  FusionElement a = detail::truncated_algebra(*alg, truncate);

  FusionElement lhs;
  {
    FusionElement r1, r2;
    for (std::int64_t r = 1; r <= truncate; ++r) {
      fuse_into(r1, alg->summand(r), base1);
      fuse_into(r2, alg->summand(r), base2);
    }
    for (const auto& [x, mx] : r1.terms())
      for (const auto& [y, my] : r2.terms()) fuse_into(lhs, x, y, mx * my, truncate);
  }

  FusionElement restricted;
  for (const auto& [z, m] : product.terms()) restricted.add(alg->from_induced(z), m);
  FusionElement mid = ring_mul(*alg->base, a, restricted);
  FusionElement rhs;
  for (const auto& [x, mx] : a.terms())
    for (const auto& [y, my] : mid.terms()) fuse_into(rhs, x, y, mx * my, truncate);

  bool restriction_ok = lhs == rhs;
  bool table_ok = true;
  if (alg->induced_category) {
    SimpleLabel x = alg->to_induced(base1), y = alg->to_induced(base2);
    table_ok = alg->induced_category->contains(x) && alg->induced_category->contains(y) &&
               fusion(*alg->induced_category, x, y) == product;
  }
  return {restriction_ok, table_ok};
}

}  // namespace vtc
