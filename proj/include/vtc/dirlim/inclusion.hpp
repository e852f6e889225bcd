#pragma once

#include <map>
#include <string>
#include <vector>

#include "vtc/dirlim/limit.hpp"

namespace vtc::dirlim {

/// Direct system of graded subspaces of an ambient space ordered by inclusion,
/// together with each subspace's embedding (columns in ambient coordinates).
struct InclusionSystem {
  GradedSpace ambient;
  DirectSystem system;
  std::map<std::string, Matrix> embeddings;
};

namespace detail {

// Canonical homogeneous basis of a graded subspace: per weight (ascending),
// the rows of the RREF of the weight block. Throws if not graded.
inline Matrix canonical_graded_basis(const GradedSpace& ambient, const Matrix& span) {
  if (span.rows() != ambient.dim())
    throw NotASubspace("spanning vectors have " + std::to_string(span.rows()) + " coordinates, ambient has " +
                       std::to_string(ambient.dim()));
  std::vector<std::vector<Rat>> cols;
  for (const auto& [w, mult] : ambient.graded_dims()) {
    (void)mult;
    auto idx = ambient.indices_of_weight(w);
    Matrix block(span.cols(), idx.size());  // rows = projected vectors
    for (std::size_t v = 0; v < span.cols(); ++v)
      for (std::size_t k = 0; k < idx.size(); ++k) block(v, k) = span(idx[k], v);
    Rref e = rref(block);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      std::vector<Rat> col(ambient.dim());
      for (std::size_t k = 0; k < idx.size(); ++k) col[idx[k]] = e.reduced(r, k);
      cols.push_back(std::move(col));
    }
  }
  Matrix basis = Matrix::from_columns(ambient.dim(), cols);
  // Homogeneous components must lie back in the span.
  if (rank(basis) != rank(span) || !same_span(basis, span))
    throw NotASubspace("subspace is not spanned by homogeneous vectors");
  return basis;
}

inline Rat column_weight(const GradedSpace& ambient, const Matrix& m, std::size_t c) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (m(r, c) != 0) return ambient.weight(r);
  return 0;
}

}  // namespace detail

/// Subspaces are given by spanning columns in ambient coordinates. The list is
/// closed under pairwise sums and deduplicated; an empty list yields {0}.
/// Element ids are "U0", "U1", ... in discovery order.
inline InclusionSystem inclusion_system(const GradedSpace& ambient, const std::vector<Matrix>& subspaces) {
  std::vector<Matrix> nodes;
  auto add_node = [&](Matrix b) {
    for (const auto& n : nodes)
      if (n == b) return false;
    nodes.push_back(std::move(b));
    return true;
  };
  for (const auto& s : subspaces) add_node(detail::canonical_graded_basis(ambient, s));
  if (nodes.empty()) add_node(Matrix(ambient.dim(), 0));

  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t a = 0; a < nodes.size(); ++a)
      for (std::size_t b = a + 1; b < nodes.size(); ++b) {
        Matrix sum = detail::canonical_graded_basis(ambient, hstack(nodes[a], nodes[b]));
        grew = add_node(std::move(sum)) || grew;
      }
  }

  InclusionSystem out;
  out.ambient = ambient;
  std::vector<std::string> ids;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    std::string id = "U" + std::to_string(k);
    ids.push_back(id);
    std::vector<BasisVector> basis;
    for (std::size_t c = 0; c < nodes[k].cols(); ++c)
      basis.push_back({id + "." + std::to_string(c), detail::column_weight(ambient, nodes[k], c)});
    out.system.spaces.emplace(id, GradedSpace(std::move(basis)));
    out.embeddings.emplace(id, nodes[k]);
  }
  std::set<std::pair<std::string, std::string>> leq;
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = 0; b < nodes.size(); ++b) {
      auto coords = solve(nodes[b], nodes[a]);
      if (!coords) continue;
      leq.emplace(ids[a], ids[b]);
      out.system.maps.emplace(std::pair{ids[a], ids[b]},
                              GradeMap{out.system.spaces.at(ids[a]), out.system.spaces.at(ids[b]), *coords});
    }
  out.system.poset = DirectedPoset(ids, std::move(leq));
  return out;
}

struct QMapResult {
  Limit limit;
  GradeMap q;
  bool injective = false;
  bool surjective = false;
};

/// Q: lim α_X -> X with Q ∘ φ_W = (W ⊆ X).
inline QMapResult q_map(const InclusionSystem& incl) {
  QMapResult res;
  res.limit = direct_limit(incl.system);
  Target tgt;
  tgt.space = incl.ambient;
  for (const auto& [id, emb] : incl.embeddings)
    tgt.psis.emplace(id, GradeMap{incl.system.space(id), incl.ambient, emb});
  res.q = universal_map(res.limit, tgt);
  std::size_t rk = rank(res.q.matrix);
  res.injective = rk == res.limit.space.dim();
  res.surjective = rk == incl.ambient.dim();
  return res;
}

}  // namespace vtc::dirlim
