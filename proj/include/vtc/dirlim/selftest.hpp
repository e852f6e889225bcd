#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vtc/dirlim/inclusion.hpp"
#include "vtc/dirlim/random.hpp"
#include "vtc/dirlim/tensor.hpp"

namespace vtc::dirlim {

struct SelftestLimits {
  std::size_t max_poset = 6;
  std::size_t max_dim = 5;
  std::size_t max_ambient = 5;
  std::size_t max_subspaces = 5;
  std::size_t fubini_chain = 3;
  std::size_t fubini_dim = 3;
};

/// Outcome of one seeded case; `failures` names each property that broke.
struct CaseResult {
  std::uint64_t seed = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Leg compatibility φ_j ∘ f_i^j = φ_i.
inline bool legs_compatible(const Limit& lim) {
  for (const auto& [i, j] : lim.system.poset.relation())
    if (!(lim.leg(j).matrix * lim.system.map(i, j).matrix == lim.leg(i).matrix)) return false;
  return true;
}

/// The legs' images span the limit, and (directedness) each probe vector lies
/// inside a single leg image.
inline bool union_of_images(const Limit& lim, const std::vector<std::vector<Rat>>& probes) {
  const auto& E = lim.system.poset.elements();
  Matrix all(lim.space.dim(), 0);
  std::vector<Matrix> images;
  for (const auto& i : E) {
    images.push_back(leg_image(lim, i));
    all = hstack(all, images.back());
  }
  if (rank(all) != lim.space.dim()) return false;
  for (const auto& v : probes) {
    bool found = false;
    for (const auto& img : images)
      if (in_span(img, v)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

inline bool kernel_lemma_holds(const Limit& lim) {
  for (const auto& i : lim.system.poset.elements())
    if (!same_span(kernel_of_leg(lim, i), sum_of_transition_kernels(lim.system, i))) return false;
  return true;
}

/// universal_map recovers a known factorization G, and changing any single
/// entry of the result breaks some F ∘ φ_i = ψ_i.
inline bool universal_map_unique(const Limit& lim, RandomSystems& rnd) {
  GradedSpace T = rnd.space("t", 4);
  GradeMap G = rnd.map(lim.space, T);
  Target tgt{T, {}};
  for (const auto& [i, leg] : lim.legs) tgt.psis.emplace(i, compose(G, leg));
  GradeMap F = universal_map(lim, tgt);
  if (!(F.matrix == G.matrix)) return false;
  for (std::size_t r = 0; r < F.matrix.rows(); ++r)
    for (std::size_t c = 0; c < F.matrix.cols(); ++c) {
      Matrix bumped = F.matrix;
      bumped(r, c) += 1;
      bool broken = false;
      for (const auto& [i, leg] : lim.legs)
        if (!(bumped * leg.matrix == tgt.psis.at(i).matrix)) {
          broken = true;
          break;
        }
      if (!broken) return false;
    }
  return true;
}

/// One case of the direct-limit property suite.
inline CaseResult run_selftest_case(std::uint64_t seed, const SelftestLimits& lim_cfg = {}) {
  CaseResult res{seed, {}};
  RandomSystems rnd(seed);
  auto fail = [&](const std::string& what) { res.failures.push_back(what); };

  DirectedPoset P = rnd.poset(std::size_t(rnd.uniform(1, std::int64_t(lim_cfg.max_poset))));
  DirectSystem sys = rnd.system(P, lim_cfg.max_dim);
  if (!validate_system(sys).ok()) {
    fail("generated system invalid");
    return res;
  }
  Limit lim = direct_limit(sys);
  Limit lim_all = direct_limit(sys, {RelationSet::All, false});

  if (!legs_compatible(lim)) fail("leg compatibility");
  if (lim.space.graded_dims() != lim_all.space.graded_dims()) fail("generating vs full relation set");

  std::vector<std::vector<Rat>> probes;
  for (std::size_t k = 0; k < lim.space.dim(); ++k) {
    std::vector<Rat> e(lim.space.dim());
    e[k] = 1;
    probes.push_back(e);
  }
  {
    std::vector<Rat> v(lim.space.dim());
    for (auto& x : v) x = rnd.entry();
    probes.push_back(v);
  }
  if (!union_of_images(lim, probes)) fail("union of images");
  if (!kernel_lemma_holds(lim)) fail("kernel lemma");
  if (!universal_map_unique(lim, rnd)) fail("universal map uniqueness");

  // Inclusion systems: Q is always injective, surjective iff the subspaces cover.
  GradedSpace ambient = rnd.space("x", lim_cfg.max_ambient);
  std::vector<Matrix> subs;
  std::size_t nsubs = std::size_t(rnd.uniform(0, std::int64_t(lim_cfg.max_subspaces)));
  Matrix cover(ambient.dim(), 0);
  for (std::size_t k = 0; k < nsubs && ambient.dim() > 0; ++k) {
    subs.push_back(rnd.graded_subspace(ambient));
    cover = hstack(cover, subs.back());
  }
  QMapResult q = q_map(inclusion_system(ambient, subs));
  if (!q.injective) fail("Q-map injectivity");
  if (q.surjective != (rank(cover) == ambient.dim())) fail("Q-map surjectivity");

  // Fubini on three chains.
  auto chain = [&](const std::string& prefix) {
    return rnd.chain_system(std::size_t(rnd.uniform(1, std::int64_t(lim_cfg.fubini_chain))), lim_cfg.fubini_dim,
                            prefix);
  };
  DirectSystem a = chain("a"), b = chain("b"), c = chain("c");
  FubiniReport fr = fubini_compare(a, b, c);
  if (!fr.graded_dims_equal || !fr.isomorphism) fail("Fubini comparison");
  return res;
}

}  // namespace vtc::dirlim
