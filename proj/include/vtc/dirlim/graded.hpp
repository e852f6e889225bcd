#pragma once

#include <map>
#include <string>
#include <vector>

#include "vtc/exact/rat.hpp"
#include "vtc/linalg.hpp"

namespace vtc::dirlim {

struct BasisVector {
  std::string id;
  Rat weight;
  friend bool operator==(const BasisVector&, const BasisVector&) = default;
};

/// Finite-dimensional vector space over Q with a homogeneous basis.
class GradedSpace {
 public:
  GradedSpace() = default;
  explicit GradedSpace(std::vector<BasisVector> basis) : basis_(std::move(basis)) {}

  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisVector>& basis() const { return basis_; }
  const Rat& weight(std::size_t i) const { return basis_[i].weight; }

  /// weight -> multiplicity
  std::map<Rat, std::size_t> graded_dims() const {
    std::map<Rat, std::size_t> d;
    for (const auto& b : basis_) ++d[b.weight];
    return d;
  }

  /// Indices of basis vectors of the given weight, in basis order.
  std::vector<std::size_t> indices_of_weight(const Rat& w) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i].weight == w) out.push_back(i);
    return out;
  }

  friend bool operator==(const GradedSpace&, const GradedSpace&) = default;

 private:
  std::vector<BasisVector> basis_;
};

/// Basis ids "a*b", weights add, ordering row-major (a-index outer).
inline GradedSpace tensor(const GradedSpace& a, const GradedSpace& b) {
  std::vector<BasisVector> basis;
  basis.reserve(a.dim() * b.dim());
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) basis.push_back({x.id + "*" + y.id, x.weight + y.weight});
  return GradedSpace(std::move(basis));
}

/// Linear map between graded spaces; columns index the source basis.
struct GradeMap {
  GradedSpace source;
  GradedSpace target;
  Matrix matrix;

  static GradeMap identity(const GradedSpace& s) { return {s, s, Matrix::identity(s.dim())}; }
  static GradeMap zero(const GradedSpace& s, const GradedSpace& t) { return {s, t, Matrix(t.dim(), s.dim())}; }

  bool has_consistent_shape() const {
    return matrix.rows() == target.dim() && matrix.cols() == source.dim();
  }

  /// No entry connects basis vectors of different weights.
  bool is_grade_preserving() const {
    for (std::size_t r = 0; r < matrix.rows(); ++r)
      for (std::size_t c = 0; c < matrix.cols(); ++c)
        if (matrix(r, c) != 0 && target.weight(r) != source.weight(c)) return false;
    return true;
  }
};

/// g ∘ f
inline GradeMap compose(const GradeMap& g, const GradeMap& f) {
  return {f.source, g.target, g.matrix * f.matrix};
}

inline GradeMap tensor(const GradeMap& f, const GradeMap& g) {
  return {tensor(f.source, g.source), tensor(f.target, g.target), kron(f.matrix, g.matrix)};
}

}  // namespace vtc::dirlim
