#pragma once

// Exact linear algebra over a field scalar (RatFunc in practice).
// Dense routines work on Eigen matrices; nothing here rounds or uses tolerances.

#include "ospq/scalars.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ospq {

template <class Scalar>
std::size_t pivot_cost(const Scalar&) {
  return 0;
}
inline std::size_t pivot_cost(const RatFunc& x) { return x.complexity(); }

template <class Scalar>
bool is_zero_matrix(const Mat<Scalar>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class Scalar>
struct Echelon {
  Mat<Scalar> reduced;           // reduced row echelon form, zero rows dropped
  std::vector<Eigen::Index> pivots;  // pivot column of each row
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

/// Reduced row echelon form. Pivot rows are chosen by lowest pivot_cost within the column.
template <class Scalar>
Echelon<Scalar> rref(Mat<Scalar> m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index best = -1;
    std::size_t best_cost = 0;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (is_zero(m(i, c))) continue;
      std::size_t cost = pivot_cost(m(i, c));
      if (best < 0 || cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    if (best < 0) continue;
    if (best != r) m.row(best).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j)
      if (!is_zero(m(r, j))) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Scalar factor = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j)
        if (!is_zero(m(r, j))) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Echelon<Scalar> out;
  out.reduced = m.topRows(r);
  out.pivots = std::move(pivots);
  return out;
}

template <class Scalar>
Eigen::Index rank(const Mat<Scalar>& m) {
  return rref(m).rank();
}

/// Rows of the result form the reduced echelon basis of the row space of m.
template <class Scalar>
Mat<Scalar> echelon_rows(const Mat<Scalar>& m) {
  return rref(m).reduced;
}

/// Basis of {x : m x = 0} as columns; the basis is echelonized so each column's first
/// nonzero entry is 1 and leading positions strictly increase.
template <class Scalar>
Mat<Scalar> null_space(const Mat<Scalar>& m) {
  const Eigen::Index cols = m.cols();
  Echelon<Scalar> e = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  Mat<Scalar> basis = Mat<Scalar>::Zero(static_cast<Eigen::Index>(free_cols.size()), cols);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const auto f = free_cols[k];
    basis(static_cast<Eigen::Index>(k), f) = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      const auto& v = e.reduced(static_cast<Eigen::Index>(r), f);
      if (!is_zero(v)) basis(static_cast<Eigen::Index>(k), e.pivots[r]) = -v;
    }
  }
  if (basis.rows() == 0) return Mat<Scalar>(cols, 0);
  return echelon_rows(basis).transpose();
}

/// Inverse of a square matrix; throws std::domain_error when singular.
template <class Scalar>
Mat<Scalar> inverse(const Mat<Scalar>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const Eigen::Index n = a.rows();
  Mat<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = Mat<Scalar>::Identity(n, n);
  Echelon<Scalar> e = rref(aug);
  if (e.rank() < n || (n > 0 && e.pivots[static_cast<std::size_t>(n - 1)] >= n))
    throw std::domain_error("singular matrix");
  return e.reduced.rightCols(n);
}

/// Solves a x = b column by column; returns false when b is not in the column span of a.
/// Free variables are set to zero.
template <class Scalar>
bool solve_in_span(const Mat<Scalar>& a, const Mat<Scalar>& b, Mat<Scalar>& x) {
  const Eigen::Index n = a.cols();
  Mat<Scalar> aug(a.rows(), n + b.cols());
  aug.leftCols(n) = a;
  aug.rightCols(b.cols()) = b;
  Echelon<Scalar> e = rref(aug);
  x = Mat<Scalar>::Zero(n, b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= n) return false;
    x.row(e.pivots[r]) = e.reduced.row(static_cast<Eigen::Index>(r)).rightCols(b.cols());
  }
  return true;
}

/// Incrementally grown span of vectors. Keeps reduced rows together with the combination of
/// inserted vectors producing each row, so coordinates w.r.t. the inserted vectors are exact.
template <class Scalar>
class SpanBuilder {
 public:
  Eigen::Index size() const { return static_cast<Eigen::Index>(rows_.size()); }

  /// Adds v if it is independent of the vectors already present; returns whether it was added.
  bool add(const Vec<Scalar>& v) {
    Vec<Scalar> r = v;
    Vec<Scalar> comb = Vec<Scalar>::Zero(size() + 1);
    comb(size()) = Scalar(1);
    reduce(r, comb);
    Eigen::Index p = -1;
    for (Eigen::Index i = 0; i < r.size(); ++i)
      if (!is_zero(r(i))) {
        p = i;
        break;
      }
    if (p < 0) return false;
    const Scalar inv = Scalar(1) / r(p);
    for (Eigen::Index i = p; i < r.size(); ++i)
      if (!is_zero(r(i))) r(i) *= inv;
    for (Eigen::Index i = 0; i < comb.size(); ++i)
      if (!is_zero(comb(i))) comb(i) *= inv;
    for (auto& c : combos_) {
      c.conservativeResize(size() + 1);
      c(size()) = Scalar(0);
    }
    rows_.push_back(std::move(r));
    combos_.push_back(std::move(comb));
    pivots_.push_back(p);
    return true;
  }

  /// Coefficients c with v = sum_k c_k (k-th added vector); false when v is outside the span.
  bool coordinates(const Vec<Scalar>& v, Vec<Scalar>& c) const {
    Vec<Scalar> r = v;
    Vec<Scalar> comb = Vec<Scalar>::Zero(size());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Scalar a = r(pivots_[k]);
      if (is_zero(a)) continue;
      for (Eigen::Index i = pivots_[k]; i < r.size(); ++i)
        if (!is_zero(rows_[k](i))) r(i) -= a * rows_[k](i);
      for (Eigen::Index i = 0; i < comb.size(); ++i)
        if (!is_zero(combos_[k](i))) comb(i) += a * combos_[k](i);
    }
    for (Eigen::Index i = 0; i < r.size(); ++i)
      if (!is_zero(r(i))) return false;
    c = std::move(comb);
    return true;
  }

 private:
  // Subtracts existing rows from r; records -multiples into comb so that
  // r_final = sum_k comb_k * inserted_k.
  void reduce(Vec<Scalar>& r, Vec<Scalar>& comb) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Scalar a = r(pivots_[k]);
      if (is_zero(a)) continue;
      for (Eigen::Index i = pivots_[k]; i < r.size(); ++i)
        if (!is_zero(rows_[k](i))) r(i) -= a * rows_[k](i);
      for (Eigen::Index i = 0; i < combos_[k].size(); ++i)
        if (!is_zero(combos_[k](i))) comb(i) -= a * combos_[k](i);
    }
  }

  std::vector<Vec<Scalar>> rows_;
  std::vector<Vec<Scalar>> combos_;
  std::vector<Eigen::Index> pivots_;
};

// ------------------------------------------------------------------ sparse helpers

/// Drops explicitly stored zeros (products over an exact field can cancel).
template <class Scalar>
void prune_zeros(SpMat<Scalar>& m) {
  m.prune([](Eigen::Index, Eigen::Index, const Scalar& v) { return !is_zero(v); });
}

template <class Scalar>
bool sparse_equal(const SpMat<Scalar>& a, const SpMat<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  SpMat<Scalar> d = a - b;
  prune_zeros(d);
  return d.nonZeros() == 0;
}

template <class Scalar, class Expr>
bool sparse_equal(const SpMat<Scalar>& a, const Eigen::SparseMatrixBase<Expr>& b) {
  return sparse_equal(a, SpMat<Scalar>(b));
}

template <class Scalar>
bool sparse_is_zero(const SpMat<Scalar>& a) {
  for (Eigen::Index k = 0; k < a.outerSize(); ++k)
    for (typename SpMat<Scalar>::InnerIterator it(a, k); it; ++it)
      if (!is_zero(it.value())) return false;
  return true;
}

template <class Scalar>
SpMat<Scalar> sparse_identity(Eigen::Index n) {
  SpMat<Scalar> m(n, n);
  m.setIdentity();
  return m;
}

template <class Scalar>
SpMat<Scalar> sparse_diagonal(const std::vector<Scalar>& d) {
  const auto n = static_cast<Eigen::Index>(d.size());
  std::vector<Eigen::Triplet<Scalar>> t;
  for (Eigen::Index i = 0; i < n; ++i)
    if (!is_zero(d[static_cast<std::size_t>(i)])) t.emplace_back(i, i, d[static_cast<std::size_t>(i)]);
  SpMat<Scalar> m(n, n);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

/// Product with cancelled entries removed.
template <class Scalar>
SpMat<Scalar> multiply(const SpMat<Scalar>& a, const SpMat<Scalar>& b) {
  SpMat<Scalar> c = a * b;
  prune_zeros(c);
  return c;
}

/// Kronecker product a (x) b with index (i, r) -> i * b.rows() + r.
template <class Scalar>
SpMat<Scalar> kronecker(const SpMat<Scalar>& a, const SpMat<Scalar>& b) {
  std::vector<Eigen::Triplet<Scalar>> t;
  t.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
  for (Eigen::Index ka = 0; ka < a.outerSize(); ++ka)
    for (typename SpMat<Scalar>::InnerIterator ia(a, ka); ia; ++ia)
      for (Eigen::Index kb = 0; kb < b.outerSize(); ++kb)
        for (typename SpMat<Scalar>::InnerIterator ib(b, kb); ib; ++ib)
          t.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(),
                         ia.value() * ib.value());
  SpMat<Scalar> m(a.rows() * b.rows(), a.cols() * b.cols());
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

template <class Scalar>
Mat<Scalar> to_dense(const SpMat<Scalar>& a) {
  Mat<Scalar> d = Mat<Scalar>::Zero(a.rows(), a.cols());
  for (Eigen::Index k = 0; k < a.outerSize(); ++k)
    for (typename SpMat<Scalar>::InnerIterator it(a, k); it; ++it) d(it.row(), it.col()) = it.value();
  return d;
}

template <class Scalar>
SpMat<Scalar> to_sparse(const Mat<Scalar>& a) {
  std::vector<Eigen::Triplet<Scalar>> t;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!is_zero(a(i, j))) t.emplace_back(i, j, a(i, j));
  SpMat<Scalar> m(a.rows(), a.cols());
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

}  // namespace ospq
