#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cygrowth/numeric.hpp"

namespace cygrowth {

/// Laurent polynomial in one variable t with exact rational coefficients.
/// The zero coefficient is never stored, so structural equality is canonical.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rat& constant) { set(0, constant); }
  explicit Poly(long constant) { set(0, Rat(constant)); }

  static Poly t(long e = 1) { return term(Rat(1), e); }
  static Poly term(const Rat& c, long e) {
    Poly p;
    p.set(e, c);
    return p;
  }
  static Poly one() { return Poly(1); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }
  /// True for 1 and -1.
  bool is_unit_constant() const;

  /// Largest exponent with nonzero coefficient. Zero polynomial has no degree.
  long deg() const;
  /// Smallest exponent with nonzero coefficient (the t-adic valuation).
  long val() const;
  bool is_laurent() const { return !c_.empty() && c_.begin()->first < 0; }

  Rat coeff(long e) const;
  Rat leading_coeff() const;
  Rat constant_coeff() const { return coeff(0); }
  void set(long e, const Rat& v);
  const std::map<long, Rat>& coeffs() const { return c_; }
  int term_count() const { return static_cast<int>(c_.size()); }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly operator*(const Rat& s) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }
  bool operator<(const Poly& o) const { return c_ < o.c_; }

  Poly pow(unsigned long k) const;
  /// Multiplies by t^k (degree shift).
  Poly shifted(long k) const;
  /// Substitutes t -> 1/t.
  Poly subst_inv() const;
  Poly derivative() const;

  /// Evaluation; requires val() >= 0 when x == 0.
  Rat eval(const Rat& x) const;
  std::complex<double> eval(const std::complex<double>& x) const;

  bool is_integral() const;
  /// gcd of numerators over lcm of denominators; content() * primitive() == *this.
  Rat content() const;
  Poly primitive() const;

  /// Exact division in Q[t, 1/t]; empty when the division leaves a remainder.
  std::optional<Poly> divided_by(const Poly& d) const;
  /// Quotient/remainder in Q[t]; both operands must have val() >= 0.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Monic gcd in Q[t] of the polynomial parts (valuations stripped first).
  static Poly gcd(const Poly& a, const Poly& b);

  /// Factors out the largest power of (1-t): p = (1-t)^k * c with c(1) != 0.
  /// Returns {k, c}; requires p != 0.
  std::pair<long, Poly> order_at_one() const;

  /// Leading coefficient of the expansion in powers of (1-t); 0 for the zero polynomial.
  Rat eps() const;

  /// Renders as "c0 + c1*t + c2*t^2" with ascending exponents.
  std::string str() const;

 private:
  std::map<long, Rat> c_;
};

inline Poly operator*(const Rat& s, const Poly& p) { return p * s; }

/// Ascending coefficients of the squarefree part p/gcd(p, p'); roots kept, multiplicities dropped.
Poly squarefree_part(const Poly& p);

/// Roots of p (val-stripped) as companion-matrix eigenvalues; p must be nonzero.
std::vector<std::complex<double>> numeric_roots(const Poly& p);

/// Roots of c0 + c1 x + ... + cn x^n with complex coefficients, cn != 0.
std::vector<std::complex<double>> numeric_roots(const std::vector<std::complex<double>>& ascending);

}  // namespace cygrowth
