#pragma once

#include <map>
#include <string>

#include "vtc/dirlim/limit.hpp"

namespace vtc::dirlim {

/// α ⊠ β over I × J: W(i) ⊗ U(j) with weights adding and maps f ⊗ g.
inline DirectSystem tensor_system(const DirectSystem& a, const DirectSystem& b) {
  DirectSystem out;
  out.poset = product(a.poset, b.poset);
  for (const auto& i : a.poset.elements())
    for (const auto& j : b.poset.elements()) out.spaces.emplace(pair_id(i, j), tensor(a.space(i), b.space(j)));
  for (const auto& [i1, i2] : a.poset.relation())
    for (const auto& [j1, j2] : b.poset.relation())
      out.maps.emplace(std::pair{pair_id(i1, j1), pair_id(i2, j2)}, tensor(a.map(i1, i2), b.map(j1, j2)));
  return out;
}

/// Multiple limit over I×J×K against the iterated limit lim_I (W(i) ⊗ lim_{J×K} U⊗V).
struct FubiniReport {
  Limit multiple;
  Limit inner;
  Limit iterated;
  GradeMap comparison;
  bool graded_dims_equal = false;
  bool isomorphism = false;
};

inline FubiniReport fubini_compare(const DirectSystem& a, const DirectSystem& b, const DirectSystem& c) {
  for (const auto* s : {&a, &b, &c}) {
    auto rep = validate_system(*s);
    if (!rep.ok()) throw InvalidSystem("invalid direct system:\n" + rep.summary());
  }
  // Tensor products of valid systems are valid.
  const LimitOptions trusted{RelationSet::Generating, true};

  FubiniReport rep;
  DirectSystem bc = tensor_system(b, c);
  rep.inner = direct_limit(bc, trusted);
  rep.multiple = direct_limit(tensor_system(a, bc), trusted);

  DirectSystem iter;
  iter.poset = a.poset;
  for (const auto& i : a.poset.elements()) iter.spaces.emplace(i, tensor(a.space(i), rep.inner.space));
  for (const auto& [i, j] : a.poset.relation())
    iter.maps.emplace(std::pair{i, j}, tensor(a.map(i, j), GradeMap::identity(rep.inner.space)));
  rep.iterated = direct_limit(iter, trusted);

  Target tgt;
  tgt.space = rep.iterated.space;
  for (const auto& i : a.poset.elements())
    for (const auto& jk : bc.poset.elements()) {
      GradeMap inner_leg = tensor(GradeMap::identity(a.space(i)), rep.inner.leg(jk));
      tgt.psis.emplace(pair_id(i, jk), compose(rep.iterated.leg(i), inner_leg));
    }
  rep.comparison = universal_map(rep.multiple, tgt);
  rep.graded_dims_equal = rep.multiple.space.graded_dims() == rep.iterated.space.graded_dims();
  rep.isomorphism = rep.comparison.matrix.rows() == rep.comparison.matrix.cols() &&
                    rank(rep.comparison.matrix) == rep.comparison.matrix.rows();
  return rep;
}

}  // namespace vtc::dirlim
