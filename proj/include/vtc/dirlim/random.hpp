#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vtc/dirlim/limit.hpp"

namespace vtc::dirlim {

/// Seeded generators for property tests. Uses only mt19937_64 output (no
/// distribution objects), so streams are identical across standard libraries.
class RandomSystems {
 public:
  explicit RandomSystems(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(rng_() % span);
  }
  bool coin(int percent) { return uniform(0, 99) < percent; }

  Rat weight() {
    static const Rat choices[] = {Rat(0), Rat(1, 2), Rat(1)};
    return choices[uniform(0, 2)];
  }

  Rat entry() { return Rat(uniform(-2, 2)); }

  GradedSpace space(const std::string& prefix, std::size_t max_dim) {
    std::size_t d = std::size_t(uniform(0, std::int64_t(max_dim)));
    std::vector<BasisVector> b;
    for (std::size_t k = 0; k < d; ++k) b.push_back({prefix + std::to_string(k), weight()});
    return GradedSpace(std::move(b));
  }

  /// Random grade-preserving map.
  GradeMap map(const GradedSpace& s, const GradedSpace& t) {
    GradeMap f = GradeMap::zero(s, t);
    for (std::size_t r = 0; r < t.dim(); ++r)
      for (std::size_t c = 0; c < s.dim(); ++c)
        if (t.weight(r) == s.weight(c)) f.matrix(r, c) = entry();
    return f;
  }

  /// Random DAG on p0..p{n-1} (edges only forward), transitively closed, with
  /// the last element placed above everything so the order is directed.
  DirectedPoset poset(std::size_t n) {
    std::vector<std::string> ids;
    for (std::size_t k = 0; k < n; ++k) ids.push_back("p" + std::to_string(k));
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      le[i][i] = true;
      if (n > 0) le[i][n - 1] = true;
      for (std::size_t j = i + 1; j < n; ++j)
        if (coin(40)) le[i][j] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (le[i][k] && le[k][j]) le[i][j] = true;
    std::set<std::pair<std::string, std::string>> rel;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (le[i][j]) rel.emplace(ids[i], ids[j]);
    return {ids, std::move(rel)};
  }

  /// Functorial system over `poset` (elements listed in a linear extension).
  /// W(j) is a random image of (colimit of the strict down-set of j) ⊕ Q^extra,
  /// which makes every composite f_j^k ∘ f_i^j agree with f_i^k.
  DirectSystem system(const DirectedPoset& poset, std::size_t max_dim) {
    DirectSystem sys;
    sys.poset = poset;
    const auto& E = poset.elements();
    for (std::size_t jx = 0; jx < E.size(); ++jx) {
      const std::string& j = E[jx];
      std::vector<std::string> below;
      for (std::size_t ix = 0; ix < jx; ++ix)
        if (poset.leq(E[ix], j) && !poset.leq(j, E[ix])) below.push_back(E[ix]);

      GradedSpace target = space(j + ".", max_dim);
      sys.spaces.emplace(j, target);
      sys.maps.emplace(std::pair{j, j}, GradeMap::identity(target));
      if (below.empty()) continue;

      DirectSystem down;
      std::set<std::pair<std::string, std::string>> rel;
      for (const auto& a : below)
        for (const auto& b : below)
          if (poset.leq(a, b)) rel.emplace(a, b);
      down.poset = DirectedPoset(below, std::move(rel));
      for (const auto& a : below) down.spaces.emplace(a, sys.spaces.at(a));
      for (const auto& [a, b] : down.poset.relation()) down.maps.emplace(std::pair{a, b}, sys.maps.at({a, b}));
      Limit colim = detail::quotient_construction(down, down.poset.generating_pairs());

      GradeMap proj = map(colim.space, target);
      for (const auto& a : below) sys.maps.emplace(std::pair{a, j}, compose(proj, colim.leg(a)));
    }
    return sys;
  }

  DirectSystem chain_system(std::size_t length, std::size_t max_dim, const std::string& prefix) {
    std::vector<std::string> ids;
    for (std::size_t k = 0; k < length; ++k) ids.push_back(prefix + std::to_string(k));
    return system(DirectedPoset::chain(ids), max_dim);
  }

  /// Graded subspace spanned by a few random homogeneous vectors.
  Matrix graded_subspace(const GradedSpace& ambient) {
    std::size_t count = std::size_t(uniform(0, std::int64_t(ambient.dim())));
    Matrix m(ambient.dim(), count);
    auto grades = ambient.graded_dims();
    std::vector<Rat> ws;
    for (const auto& [w, d] : grades) ws.push_back(w);
    for (std::size_t c = 0; c < count; ++c) {
      Rat w = ws[std::size_t(uniform(0, std::int64_t(ws.size()) - 1))];
      for (auto r : ambient.indices_of_weight(w)) m(r, c) = entry();
    }
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace vtc::dirlim
