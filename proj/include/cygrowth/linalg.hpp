#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cygrowth/numeric.hpp"

namespace cygrowth {

/// Dense matrix over the exact rationals.
class QMat {
 public:
  QMat() = default;
  QMat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}
  static QMat identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  QMat operator*(const QMat& o) const;
  QMat operator+(const QMat& o) const;
  QMat operator-(const QMat& o) const;
  bool operator==(const QMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  QMat transpose() const;
  bool is_zero() const;

  /// Exact inverse; empty when singular.
  std::optional<QMat> inverse() const;
  Rat det() const;
  /// In-place reduced row echelon form; returns the pivot columns.
  std::vector<int> rref();
  /// Basis of the right kernel {x : Ax = 0}, one column vector per basis element.
  std::vector<std::vector<Rat>> kernel() const;
  int rank() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<Rat> a_;
};

/// Sparse row over a field scalar: (column, coefficient) pairs sorted by
/// column, no zeros.
template <typename F>
using SparseRowT = std::vector<std::pair<int, F>>;

namespace detail {

// row -= f * pivot, merged over sorted columns.
template <typename F>
SparseRowT<F> sparse_axpy(const SparseRowT<F>& row, const F& f, const SparseRowT<F>& pivot) {
  SparseRowT<F> out;
  out.reserve(row.size() + pivot.size());
  size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -f * pivot[j].second);
      ++j;
    } else {
      F v = row[i].second - f * pivot[j].second;
      if (!(v == F(0))) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace detail

/// Incrementally maintained reduced row space; rows are fully inter-reduced so
/// pivot rows read off normal forms directly. The scalar must be a field.
template <typename F>
class RowSpaceT {
 public:
  /// Normal form: row minus its projection onto the span.
  SparseRowT<F> reduce(SparseRowT<F> row) const {
    size_t scan = 0;
    while (scan < row.size()) {
      auto it = pivots_.find(row[scan].first);
      if (it == pivots_.end()) {
        ++scan;
        continue;
      }
      F f = row[scan].second;
      row = detail::sparse_axpy(row, f, it->second);
      // Columns before `scan` were already pivot-free and stay untouched.
    }
    return row;
  }

  /// Reduces the row against the space; absorbs the remainder when nonzero.
  /// Returns true when the rank grew.
  bool add(SparseRowT<F> row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    F lead = row.front().second;
    for (auto& [c, v] : row) v = v / lead;
    int col = row.front().first;
    // Back-reduce existing pivot rows so the basis stays fully reduced.
    for (auto& [lc, prow] : pivots_) {
      auto hit = std::lower_bound(prow.begin(), prow.end(), col,
                                  [](const std::pair<int, F>& e, int c) { return e.first < c; });
      if (hit != prow.end() && hit->first == col) {
        F f = hit->second;
        prow = detail::sparse_axpy(prow, f, row);
      }
    }
    pivots_.emplace(col, std::move(row));
    return true;
  }

  int rank() const { return static_cast<int>(pivots_.size()); }
  const std::map<int, SparseRowT<F>>& pivot_rows() const { return pivots_; }

 private:
  std::map<int, SparseRowT<F>> pivots_;  // leading column -> monic row
};

using SparseRow = SparseRowT<Rat>;
using RowSpace = RowSpaceT<Rat>;

}  // namespace cygrowth
