#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vtc/dirlim/system.hpp"

namespace vtc::dirlim {

/// Colimit cocone: the quotient space and one leg per poset element.
struct Limit {
  GradedSpace space;
  std::map<std::string, GradeMap> legs;
  DirectSystem system;

  const GradeMap& leg(const std::string& i) const {
    auto it = legs.find(i);
    if (it == legs.end()) throw UnknownElement("no leg for element '" + i + "'");
    return it->second;
  }
};

/// Cocone into an arbitrary space; compatibility is checked by universal_map.
struct Target {
  GradedSpace space;
  std::map<std::string, GradeMap> psis;
};

enum class RelationSet {
  /// q_i(w) - q_j(f_i^j w) for every i <= j.
  All,
  /// Only covering pairs (and pairs of equivalent elements); same span by functoriality.
  Generating,
};

struct LimitOptions {
  RelationSet relations = RelationSet::Generating;
  /// Skip validate_system (callers that built the system from validated parts).
  bool assume_valid = false;
};

namespace detail {

// Quotient of (+)_i W(i) by the relations attached to `pairs`, grade by grade.
// Works for any finite diagram; directedness is only needed for the
// union-of-images property of the result.
inline Limit quotient_construction(const DirectSystem& sys,
                                   const std::vector<std::pair<std::string, std::string>>& pairs) {
  const auto& E = sys.poset.elements();

  // Position of each (element, basis index) inside its weight block.
  std::map<Rat, std::vector<std::pair<std::string, std::size_t>>> block_cols;
  std::map<std::pair<std::string, std::size_t>, std::size_t> col_of;
  for (const auto& e : E) {
    const auto& W = sys.space(e);
    for (std::size_t b = 0; b < W.dim(); ++b) {
      auto& cols = block_cols[W.weight(b)];
      col_of[{e, b}] = cols.size();
      cols.emplace_back(e, b);
    }
  }

  // Resolve maps once.
  std::vector<GradeMap> pair_maps;
  pair_maps.reserve(pairs.size());
  for (const auto& [i, j] : pairs) pair_maps.push_back(sys.map(i, j));

  std::vector<BasisVector> basis;
  // leg_coords[(e,b)] = sparse coordinates (global limit index, value)
  std::map<std::pair<std::string, std::size_t>, std::vector<std::pair<std::size_t, Rat>>> leg_coords;

  for (const auto& [w, cols] : block_cols) {
    const std::size_t n = cols.size();
    std::vector<std::vector<Rat>> rels;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto& [i, j] = pairs[p];
      const GradeMap& f = pair_maps[p];
      const auto& Wi = sys.space(i);
      for (std::size_t b = 0; b < Wi.dim(); ++b) {
        if (Wi.weight(b) != w) continue;
        std::vector<Rat> row(n);
        row[col_of.at({i, b})] += 1;
        for (std::size_t c = 0; c < f.matrix.rows(); ++c)
          if (f.matrix(c, b) != 0) row[col_of.at({j, c})] -= f.matrix(c, b);
        rels.push_back(std::move(row));
      }
    }
    Rref e = rref(Matrix::from_rows(n, rels));
    std::vector<long> pivot_row(n, -1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) pivot_row[e.pivots[r]] = long(r);

    std::vector<std::size_t> free_cols;
    std::vector<long> free_index(n, -1);
    for (std::size_t c = 0; c < n; ++c)
      if (pivot_row[c] < 0) {
        free_index[c] = long(basis.size());
        free_cols.push_back(c);
        basis.push_back({"[" + cols[c].first + "]" + sys.space(cols[c].first).basis()[cols[c].second].id, w});
      }

    for (std::size_t c = 0; c < n; ++c) {
      auto& coords = leg_coords[cols[c]];
      if (pivot_row[c] < 0) {
        coords.emplace_back(std::size_t(free_index[c]), Rat(1));
        continue;
      }
      // e_c = e_c - row  (mod relations), which vanishes on every pivot column
      std::size_t r = std::size_t(pivot_row[c]);
      for (auto f : free_cols)
        if (e.reduced(r, f) != 0) coords.emplace_back(std::size_t(free_index[f]), -e.reduced(r, f));
    }
  }

  Limit lim;
  lim.space = GradedSpace(std::move(basis));
  for (const auto& i : E) {
    const auto& Wi = sys.space(i);
    GradeMap leg = GradeMap::zero(Wi, lim.space);
    for (std::size_t b = 0; b < Wi.dim(); ++b)
      for (const auto& [row, v] : leg_coords[{i, b}]) leg.matrix(row, b) = v;
    lim.legs.emplace(i, std::move(leg));
  }
  lim.system = sys;
  return lim;
}

}  // namespace detail

/// Direct limit as (+)_i W(i) / K, K spanned by q_i(w) - q_j(f_i^j(w)).
/// Basis of the quotient: the non-pivot columns of the reduced relation matrix.
inline Limit direct_limit(const DirectSystem& sys, LimitOptions opts = {}) {
  if (!opts.assume_valid) {
    auto rep = validate_system(sys);
    if (!rep.ok()) throw InvalidSystem("invalid direct system:\n" + rep.summary());
  }
  auto pairs = opts.relations == RelationSet::All ? sys.poset.strict_pairs() : sys.poset.generating_pairs();
  return detail::quotient_construction(sys, pairs);
}

/// The unique F with F ∘ φ_i = ψ_i for all i.
inline GradeMap universal_map(const Limit& lim, const Target& tgt) {
  const auto& sys = lim.system;
  for (const auto& i : sys.poset.elements()) {
    auto it = tgt.psis.find(i);
    if (it == tgt.psis.end()) throw IncompatibleTarget("target has no map from element '" + i + "'");
    const GradeMap& psi = it->second;
    if (psi.matrix.rows() != tgt.space.dim() || psi.matrix.cols() != sys.space(i).dim())
      throw IncompatibleTarget("target map from '" + i + "' has the wrong shape");
  }
  for (const auto& [i, j] : sys.poset.strict_pairs())
    if (!(tgt.psis.at(j).matrix * sys.map(i, j).matrix == tgt.psis.at(i).matrix))
      throw IncompatibleTarget("psi_" + j + " o f_" + i + "^" + j + " != psi_" + i);

  // Stack Φ = [φ_i] and Ψ = [ψ_i]; solve F Φ = Ψ, i.e. Φᵀ Fᵀ = Ψᵀ.
  std::size_t total = 0;
  for (const auto& i : sys.poset.elements()) total += sys.space(i).dim();
  Matrix phi(lim.space.dim(), total), psi(tgt.space.dim(), total);
  std::size_t off = 0;
  for (const auto& i : sys.poset.elements()) {
    const Matrix& a = lim.leg(i).matrix;
    const Matrix& b = tgt.psis.at(i).matrix;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      for (std::size_t r = 0; r < a.rows(); ++r) phi(r, off + c) = a(r, c);
      for (std::size_t r = 0; r < b.rows(); ++r) psi(r, off + c) = b(r, c);
    }
    off += a.cols();
  }
  auto x = solve(phi.transpose(), psi.transpose());
  if (!x) throw IncompatibleTarget("no map from the limit factors the target");
  GradeMap F{lim.space, tgt.space, x->transpose()};
  if (!(F.matrix * phi == psi)) throw IncompatibleTarget("target does not factor through the limit");
  return F;
}

/// Basis (as columns in W(i) coordinates) of ker φ_i.
inline Matrix kernel_of_leg(const Limit& lim, const std::string& i) {
  if (!lim.system.poset.contains(i)) throw UnknownElement("unknown element '" + i + "'");
  return nullspace(lim.leg(i).matrix);
}

/// Σ_{j >= i} ker f_i^j, computed from the transition maps alone.
inline Matrix sum_of_transition_kernels(const DirectSystem& sys, const std::string& i) {
  if (!sys.poset.contains(i)) throw UnknownElement("unknown element '" + i + "'");
  Matrix acc(sys.space(i).dim(), 0);
  for (const auto& j : sys.poset.upper_set(i)) acc = hstack(acc, nullspace(sys.map(i, j).matrix));
  return column_basis(acc);
}

/// Column basis of the image of φ_i in limit coordinates.
inline Matrix leg_image(const Limit& lim, const std::string& i) { return column_basis(lim.leg(i).matrix); }

}  // namespace vtc::dirlim
