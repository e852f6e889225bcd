#pragma once

#include <cassert>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vtc/exact/rat.hpp"

namespace vtc {

/// Dense row-major matrix over Rat. Zero-sized dimensions are allowed.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rat> column(std::size_t c) const {
    std::vector<Rat> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  std::vector<Rat> row(std::size_t r) const {
    return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
  }

  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<Rat>>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    return m;
  }
  static Matrix from_rows(std::size_t cols, const std::vector<std::vector<Rat>>& rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    return m;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rat& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j) != 0) out(i, j) += aik * b(k, j);
      }
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

inline Matrix hstack(const Matrix& a, const Matrix& b) {
  assert(a.rows() == b.rows());
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

inline Matrix select_columns(const Matrix& m, std::span<const std::size_t> cols) {
  Matrix out(m.rows(), cols.size());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = m(r, cols[c]);
  return out;
}

/// Reduced row echelon form; rows beyond pivots.size() are zero.
struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

namespace detail {

using IntRow = std::vector<Int>;

inline void make_primitive(IntRow& row) {
  Int g = 0;
  for (const auto& v : row) {
    if (v != 0) g = gcd(g, v);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& v : row) v /= g;
}

// dst <- p*dst - q*src, then strip content. p and q are copies: q usually aliases dst.
inline void cross_eliminate(IntRow& dst, const IntRow& src, const Int p, const Int q) {
  for (std::size_t c = 0; c < dst.size(); ++c) {
    if (src[c] == 0) {
      if (dst[c] != 0) dst[c] *= p;
    } else {
      dst[c] = p * dst[c] - q * src[c];
    }
  }
  make_primitive(dst);
}

}  // namespace detail

/// Gauss-Jordan elimination carried out fraction-free on integer-scaled rows;
/// division happens once per pivot row at the very end.
inline Rref rref(const Matrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<detail::IntRow> rows(R, detail::IntRow(C));
  for (std::size_t r = 0; r < R; ++r) {
    Int l = 1;
    for (std::size_t c = 0; c < C; ++c) l = lcm(l, denominator(m(r, c)));
    for (std::size_t c = 0; c < C; ++c) rows[r][c] = numerator(m(r, c)) * (l / denominator(m(r, c)));
    detail::make_primitive(rows[r]);
  }
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < C && rank < R; ++c) {
    std::size_t p = rank;
    while (p < R && rows[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t k = 0; k < R; ++k) {
      if (k == rank || rows[k][c] == 0) continue;
      detail::cross_eliminate(rows[k], rows[rank], rows[rank][c], rows[k][c]);
    }
    pivots.push_back(c);
    ++rank;
  }
  Matrix out(R, C);
  for (std::size_t r = 0; r < rank; ++r) {
    const Int& piv = rows[r][pivots[r]];
    for (std::size_t c = 0; c < C; ++c)
      if (rows[r][c] != 0) out(r, c) = ratio(rows[r][c], piv);
  }
  return {std::move(out), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// Columns form a basis of {x : m x = 0}.
inline Matrix nullspace(const Matrix& m) {
  Rref e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(m.cols(), basis);
}

/// A maximal independent subset of the columns of m, in order.
inline Matrix column_basis(const Matrix& m) {
  auto piv = rref(m).pivots;
  return select_columns(m, piv);
}

/// Some X with a X = b, or nullopt when inconsistent. Free variables are zero.
inline std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  assert(a.rows() == b.rows());
  Rref e = rref(hstack(a, b));
  for (auto p : e.pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix x(a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, a.cols() + j);
  return x;
}

/// span(cols of a) == span(cols of b).
inline bool same_span(const Matrix& a, const Matrix& b) {
  std::size_t ra = rank(a), rb = rank(b);
  return ra == rb && rank(hstack(a, b)) == ra;
}

inline bool in_span(const Matrix& a, const std::vector<Rat>& v) {
  Matrix col = Matrix::from_columns(a.rows(), {v});
  return rank(hstack(a, col)) == rank(a);
}

}  // namespace vtc
