#include "cygrowth/matpoly.hpp"

#include "cygrowth/error.hpp"

namespace cygrowth {

MatPoly MatPoly::identity(int n) {
  MatPoly m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Poly::one();
  return m;
}

MatPoly MatPoly::t_diag(const std::vector<long>& ell) {
  MatPoly m(static_cast<int>(ell.size()));
  for (int i = 0; i < m.n(); ++i) m.at(i, i) = Poly::t(ell[i]);
  return m;
}

MatPoly MatPoly::constant(const QMat& q) {
  MatPoly m(q.rows());
  for (int i = 0; i < q.rows(); ++i)
    for (int j = 0; j < q.cols(); ++j)
      if (q.at(i, j) != 0) m.at(i, j) = Poly(q.at(i, j));
  return m;
}

MatPoly MatPoly::operator+(const MatPoly& o) const {
  if (n_ != o.n_) throw Error(Errc::DimensionMismatch, "matrix sum shape mismatch");
  MatPoly out(n_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
  return out;
}

MatPoly MatPoly::operator-(const MatPoly& o) const {
  if (n_ != o.n_) throw Error(Errc::DimensionMismatch, "matrix diff shape mismatch");
  MatPoly out(n_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
  return out;
}

MatPoly MatPoly::operator*(const MatPoly& o) const {
  if (n_ != o.n_) throw Error(Errc::DimensionMismatch, "matrix product shape mismatch");
  MatPoly out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Poly& v = at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        out.at(i, j) += v * o.at(k, j);
      }
    }
  return out;
}

MatPoly MatPoly::operator-() const {
  MatPoly out(n_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = -e_[i];
  return out;
}

bool MatPoly::is_zero() const {
  for (auto& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

long MatPoly::min_exponent() const {
  long m = 0;
  bool any = false;
  for (auto& p : e_) {
    if (p.is_zero()) continue;
    if (!any || p.val() < m) m = p.val();
    any = true;
  }
  return any ? m : 0;
}

QMat MatPoly::eval(const Rat& x) const {
  QMat out(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.at(i, j) = at(i, j).eval(x);
  return out;
}

std::vector<Poly> MatPoly::apply(const std::vector<Poly>& v) const {
  if (static_cast<int>(v.size()) != n_)
    throw Error(Errc::DimensionMismatch, "matrix-vector shape mismatch");
  std::vector<Poly> out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

std::vector<std::string> MatPoly::entry_strings() const {
  std::vector<std::string> out;
  out.reserve(e_.size());
  for (auto& p : e_) out.push_back(p.str());
  return out;
}

MatPoly transpose(const MatPoly& m) {
  MatPoly out(m.n());
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) out.at(i, j) = m.at(j, i);
  return out;
}

MatPoly substitute_inverse_t(const MatPoly& m) {
  MatPoly out(m.n());
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) out.at(i, j) = m.at(i, j).subst_inv();
  return out;
}

namespace {

Poly det_cofactor(const MatPoly& m, std::vector<int>& rows, std::vector<int>& cols) {
  size_t k = rows.size();
  if (k == 1) return m.at(rows[0], cols[0]);
  Poly acc;
  int r = rows[0];
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (size_t j = 0; j < k; ++j) {
    const Poly& piv = m.at(r, cols[j]);
    if (piv.is_zero()) continue;
    std::vector<int> sub_cols;
    sub_cols.reserve(k - 1);
    for (size_t jj = 0; jj < k; ++jj)
      if (jj != j) sub_cols.push_back(cols[jj]);
    Poly minor = det_cofactor(m, sub_rows, sub_cols);
    if ((j % 2) == 0)
      acc += piv * minor;
    else
      acc -= piv * minor;
  }
  return acc;
}

// Fraction-free elimination; every division below is exact in Q[t, 1/t].
Poly det_bareiss(const MatPoly& m) {
  int n = m.n();
  std::vector<Poly> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m.at(i, j);
  auto at = [&](int i, int j) -> Poly& { return a[static_cast<size_t>(i) * n + j]; };
  Poly prev = Poly::one();
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!at(i, k).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return Poly();
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Poly num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        auto q = num.divided_by(prev);
        if (!q) throw Error(Errc::Internal, "non-exact division in fraction-free elimination");
        at(i, j) = *q;
      }
    prev = at(k, k);
  }
  Poly d = at(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

}  // namespace

Poly det(const MatPoly& m) {
  int n = m.n();
  if (n == 0) return Poly::one();
  if (n <= 3) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::vector<int> rows = idx, cols = idx;
    return det_cofactor(m, rows, cols);
  }
  return det_bareiss(m);
}

MatPoly adjugate(const MatPoly& m) {
  int n = m.n();
  MatPoly out(n);
  if (n == 1) {
    out.at(0, 0) = Poly::one();
    return out;
  }
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> rows, cols;
      for (int k = 0; k < n; ++k) {
        if (k != i) rows.push_back(k);
        if (k != j) cols.push_back(k);
      }
      MatPoly sub(n - 1);
      for (int a = 0; a < n - 1; ++a)
        for (int b = 0; b < n - 1; ++b) sub.at(a, b) = m.at(rows[a], cols[b]);
      Poly minor = det(sub);
      out.at(j, i) = ((i + j) % 2 == 0) ? minor : -minor;
    }
  return out;
}

MatSeries invert_as_series(const MatPoly& m, long D) {
  int n = m.n();
  if (D < 0) throw Error(Errc::DimensionMismatch, "negative truncation degree");
  if (m.min_exponent() < 0)
    throw Error(Errc::SingularConstantTerm, "series inverse of a matrix with t^-k terms");
  long dmax = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!m.at(i, j).is_zero()) dmax = std::max(dmax, m.at(i, j).deg());
  std::vector<QMat> A(dmax + 1, QMat(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (auto& [e, v] : m.at(i, j).coeffs()) A[e].at(i, j) = v;
  auto B0 = A[0].inverse();
  if (!B0)
    throw Error(Errc::SingularConstantTerm, "constant coefficient matrix is singular");
  MatSeries s;
  s.n = n;
  s.truncation = D;
  s.coeff.assign(D + 1, QMat(n, n));
  s.coeff[0] = *B0;
  for (long k = 1; k <= D; ++k) {
    QMat acc(n, n);
    for (long j = 1; j <= std::min(k, dmax); ++j) acc = acc + A[j] * s.coeff[k - j];
    QMat zero(n, n);
    s.coeff[k] = zero - (*B0) * acc;
  }
  return s;
}

std::vector<std::vector<RatFun>> entrywise_rational(const MatPoly& m) {
  Poly d = det(m);
  if (d.is_zero()) throw Error(Errc::SingularConstantTerm, "matrix is singular over Q(t)");
  MatPoly adj = adjugate(m);
  std::vector<std::vector<RatFun>> out(m.n(), std::vector<RatFun>(m.n()));
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) out[i][j] = reduce(adj.at(i, j), d);
  return out;
}

}  // namespace cygrowth
