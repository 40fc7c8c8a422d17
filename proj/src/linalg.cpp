#include "cygrowth/linalg.hpp"

#include "cygrowth/error.hpp"

namespace cygrowth {

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::operator*(const QMat& o) const {
  if (c_ != o.r_) throw Error(Errc::DimensionMismatch, "matrix product shape mismatch");
  QMat out(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Rat& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.c_; ++j) out.at(i, j) += v * o.at(k, j);
    }
  return out;
}

QMat QMat::operator+(const QMat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw Error(Errc::DimensionMismatch, "matrix sum shape mismatch");
  QMat out(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
  return out;
}

QMat QMat::operator-(const QMat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw Error(Errc::DimensionMismatch, "matrix diff shape mismatch");
  QMat out(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
  return out;
}

QMat QMat::transpose() const {
  QMat out(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool QMat::is_zero() const {
  for (auto& v : a_)
    if (v != 0) return false;
  return true;
}

std::optional<QMat> QMat::inverse() const {
  if (r_ != c_) throw Error(Errc::DimensionMismatch, "inverse of a non-square matrix");
  QMat work = *this;
  QMat inv = identity(r_);
  for (int col = 0; col < c_; ++col) {
    int piv = -1;
    for (int i = col; i < r_; ++i)
      if (work.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != col)
      for (int j = 0; j < c_; ++j) {
        std::swap(work.at(piv, j), work.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    Rat d = work.at(col, col);
    for (int j = 0; j < c_; ++j) {
      work.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (int i = 0; i < r_; ++i) {
      if (i == col) continue;
      Rat f = work.at(i, col);
      if (f == 0) continue;
      for (int j = 0; j < c_; ++j) {
        work.at(i, j) -= f * work.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

Rat QMat::det() const {
  if (r_ != c_) throw Error(Errc::DimensionMismatch, "determinant of a non-square matrix");
  QMat work = *this;
  Rat d(1);
  for (int col = 0; col < c_; ++col) {
    int piv = -1;
    for (int i = col; i < r_; ++i)
      if (work.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      for (int j = 0; j < c_; ++j) std::swap(work.at(piv, j), work.at(col, j));
      d = -d;
    }
    d *= work.at(col, col);
    Rat p = work.at(col, col);
    for (int i = col + 1; i < r_; ++i) {
      Rat f = work.at(i, col) / p;
      if (f == 0) continue;
      for (int j = col; j < c_; ++j) work.at(i, j) -= f * work.at(col, j);
    }
  }
  return d;
}

std::vector<int> QMat::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < c_ && row < r_; ++col) {
    int piv = -1;
    for (int i = row; i < r_; ++i)
      if (at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < c_; ++j) std::swap(at(piv, j), at(row, j));
    Rat d = at(row, col);
    for (int j = col; j < c_; ++j) at(row, j) /= d;
    for (int i = 0; i < r_; ++i) {
      if (i == row) continue;
      Rat f = at(i, col);
      if (f == 0) continue;
      for (int j = col; j < c_; ++j) at(i, j) -= f * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Rat>> QMat::kernel() const {
  QMat work = *this;
  std::vector<int> pivots = work.rref();
  std::vector<bool> is_pivot(c_, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < c_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(c_, Rat(0));
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

int QMat::rank() const {
  QMat work = *this;
  return static_cast<int>(work.rref().size());
}

}  // namespace cygrowth
