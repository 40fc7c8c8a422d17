#pragma once

#include <vector>

#include "cygrowth/linalg.hpp"
#include "cygrowth/poly.hpp"
#include "cygrowth/ratfun.hpp"

namespace cygrowth {

/// Square matrix of Laurent polynomials.
class MatPoly {
 public:
  MatPoly() = default;
  explicit MatPoly(int n) : n_(n), e_(static_cast<size_t>(n) * n) {}
  static MatPoly identity(int n);
  /// Diagonal matrix diag(t^{ell_1}, ..., t^{ell_n}).
  static MatPoly t_diag(const std::vector<long>& ell);
  /// From an integer matrix times t^0.
  static MatPoly constant(const QMat& m);

  int n() const { return n_; }
  Poly& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const Poly& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

  MatPoly operator+(const MatPoly& o) const;
  MatPoly operator-(const MatPoly& o) const;
  MatPoly operator*(const MatPoly& o) const;
  MatPoly operator-() const;
  bool operator==(const MatPoly& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const MatPoly& o) const { return !(*this == o); }

  bool is_zero() const;
  /// Smallest exponent appearing in any entry; 0 for the zero matrix.
  long min_exponent() const;
  /// Entrywise evaluation; entries must have val() >= 0 when x == 0.
  QMat eval(const Rat& x) const;
  std::vector<Poly> apply(const std::vector<Poly>& v) const;

  std::vector<std::string> entry_strings() const;

 private:
  int n_ = 0;
  std::vector<Poly> e_;
};

/// Truncated matrix power series: coefficient matrices H_0..H_D.
struct MatSeries {
  int n = 0;
  long truncation = 0;
  std::vector<QMat> coeff;  // coeff[k] is the t^k matrix, k = 0..truncation

  const Rat& at(int i, int j, long k) const { return coeff[k].at(i, j); }
};

Poly det(const MatPoly& m);
MatPoly adjugate(const MatPoly& m);
MatPoly transpose(const MatPoly& m);
/// Entrywise t -> 1/t.
MatPoly substitute_inverse_t(const MatPoly& m);

/// Power-series inverse modulo t^{D+1}; requires m(0) invertible over Q.
MatSeries invert_as_series(const MatPoly& m, long D);

/// Reduced rational entries of m^{-1} via the adjugate route adj(m)/det(m).
std::vector<std::vector<RatFun>> entrywise_rational(const MatPoly& m);

}  // namespace cygrowth
