#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vtc/dirlim/graded.hpp"
#include "vtc/error.hpp"

namespace vtc::dirlim {

/// Finite preorder given by an explicit relation. Directedness is checked by
/// validate_system, not enforced here.
class DirectedPoset {
 public:
  DirectedPoset() = default;
  DirectedPoset(std::vector<std::string> elements, std::set<std::pair<std::string, std::string>> leq)
      : elements_(std::move(elements)), leq_(std::move(leq)) {}

  /// Chain e0 <= e1 <= ... with the given ids.
  static DirectedPoset chain(const std::vector<std::string>& ids) {
    std::set<std::pair<std::string, std::string>> leq;
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i; j < ids.size(); ++j) leq.emplace(ids[i], ids[j]);
    return {ids, std::move(leq)};
  }

  const std::vector<std::string>& elements() const { return elements_; }
  const std::set<std::pair<std::string, std::string>>& relation() const { return leq_; }
  std::size_t size() const { return elements_.size(); }

  bool contains(const std::string& e) const {
    return std::find(elements_.begin(), elements_.end(), e) != elements_.end();
  }
  bool leq(const std::string& a, const std::string& b) const { return leq_.count({a, b}) > 0; }
  bool strictly_less(const std::string& a, const std::string& b) const { return leq(a, b) && !leq(b, a); }

  std::vector<std::string> upper_set(const std::string& a) const {
    std::vector<std::string> out;
    for (const auto& e : elements_)
      if (leq(a, e)) out.push_back(e);
    return out;
  }

  /// Pairs i <= j, i != j, whose relations generate every other one by
  /// composition: covers of the strict order plus all pairs of equivalent elements.
  std::vector<std::pair<std::string, std::string>> generating_pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [a, b] : leq_) {
      if (a == b) continue;
      if (leq(b, a)) {
        out.emplace_back(a, b);
        continue;
      }
      bool covered = true;
      for (const auto& k : elements_)
        if (strictly_less(a, k) && strictly_less(k, b)) {
          covered = false;
          break;
        }
      if (covered) out.emplace_back(a, b);
    }
    return out;
  }

  /// All pairs i <= j with i != j.
  std::vector<std::pair<std::string, std::string>> strict_pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& p : leq_)
      if (p.first != p.second) out.push_back(p);
    return out;
  }

 private:
  std::vector<std::string> elements_;
  std::set<std::pair<std::string, std::string>> leq_;
};

/// Product order on I x J; element ids "(i,j)".
inline std::string pair_id(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

inline DirectedPoset product(const DirectedPoset& a, const DirectedPoset& b) {
  std::vector<std::string> elems;
  for (const auto& x : a.elements())
    for (const auto& y : b.elements()) elems.push_back(pair_id(x, y));
  std::set<std::pair<std::string, std::string>> leq;
  for (const auto& [x1, x2] : a.relation())
    for (const auto& [y1, y2] : b.relation()) leq.emplace(pair_id(x1, y1), pair_id(x2, y2));
  return {std::move(elems), std::move(leq)};
}

/// Functor from a finite directed preorder to graded spaces.
struct DirectSystem {
  DirectedPoset poset;
  std::map<std::string, GradedSpace> spaces;
  std::map<std::pair<std::string, std::string>, GradeMap> maps;

  const GradedSpace& space(const std::string& i) const {
    auto it = spaces.find(i);
    if (it == spaces.end()) throw UnknownElement("no space for element '" + i + "'");
    return it->second;
  }

  /// f_i^j; f_i^i defaults to the identity when not stored.
  GradeMap map(const std::string& i, const std::string& j) const {
    auto it = maps.find({i, j});
    if (it != maps.end()) return it->second;
    if (i == j) return GradeMap::identity(space(i));
    throw UnknownElement("no map " + i + "<=" + j);
  }
};

enum class ViolationKind {
  EmptyPoset,
  NotReflexive,
  NotTransitive,
  NotDirected,
  UnknownElement,
  MissingSpace,
  MissingMap,
  ShapeMismatch,
  NotGradePreserving,
  IdentityFails,
  CompositionFails,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::size_t count(ViolationKind k) const {
    return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                  [k](const Violation& v) { return v.kind == k; }));
  }
  std::string summary() const {
    std::string s;
    for (const auto& v : violations) s += v.message + "\n";
    return s;
  }
};

/// Reports every violated identity; an empty report means the system is valid.
inline ValidationReport validate_system(const DirectSystem& sys) {
  ValidationReport rep;
  auto add = [&](ViolationKind k, std::string msg) { rep.violations.push_back({k, std::move(msg)}); };
  const auto& P = sys.poset;
  const auto& E = P.elements();

  if (E.empty()) add(ViolationKind::EmptyPoset, "poset has no elements");
  for (const auto& [a, b] : P.relation())
    if (!P.contains(a) || !P.contains(b)) add(ViolationKind::UnknownElement, "relation mentions unknown " + a + "<=" + b);
  for (const auto& e : E)
    if (!P.leq(e, e)) add(ViolationKind::NotReflexive, "missing " + e + "<=" + e);
  for (const auto& [a, b] : P.relation())
    for (const auto& c : E)
      if (P.leq(b, c) && !P.leq(a, c)) add(ViolationKind::NotTransitive, "missing " + a + "<=" + c + " via " + b);
  for (std::size_t x = 0; x < E.size(); ++x)
    for (std::size_t y = x + 1; y < E.size(); ++y) {
      bool bounded = std::any_of(E.begin(), E.end(), [&](const std::string& k) { return P.leq(E[x], k) && P.leq(E[y], k); });
      if (!bounded) add(ViolationKind::NotDirected, "no upper bound for " + E[x] + ", " + E[y]);
    }

  for (const auto& e : E)
    if (!sys.spaces.count(e)) add(ViolationKind::MissingSpace, "no space for " + e);
  if (!rep.ok()) return rep;

  for (const auto& [key, f] : sys.maps)
    if (!P.leq(key.first, key.second)) add(ViolationKind::UnknownElement, "map for unrelated pair " + key.first + "<=" + key.second);

  std::map<std::pair<std::string, std::string>, bool> usable;
  for (const auto& [i, j] : P.relation()) {
    std::string tag = i + "<=" + j;
    auto it = sys.maps.find({i, j});
    if (it == sys.maps.end()) {
      if (i != j) add(ViolationKind::MissingMap, "no map " + tag);
      usable[{i, j}] = (i == j);
      continue;
    }
    const GradeMap& f = it->second;
    bool ok = true;
    if (!f.has_consistent_shape() || !(f.source == sys.space(i)) || !(f.target == sys.space(j))) {
      add(ViolationKind::ShapeMismatch, "map " + tag + " has wrong source/target");
      ok = false;
    } else if (!f.is_grade_preserving()) {
      add(ViolationKind::NotGradePreserving, "map " + tag + " mixes weights");
    }
    if (ok && i == j && !(f.matrix == Matrix::identity(f.source.dim())))
      add(ViolationKind::IdentityFails, "map " + tag + " is not the identity");
    usable[{i, j}] = ok;
  }

  for (const auto& [i, j] : P.relation())
    for (const auto& k : E) {
      if (!P.leq(j, k) || !usable[{i, j}] || !usable[{j, k}] || !usable[{i, k}]) continue;
      if (i == j || j == k) continue;
      if (!(compose(sys.map(j, k), sys.map(i, j)).matrix == sys.map(i, k).matrix))
        add(ViolationKind::CompositionFails, "f_" + j + "^" + k + " o f_" + i + "^" + j + " != f_" + i + "^" + k);
    }
  return rep;
}

}  // namespace vtc::dirlim
