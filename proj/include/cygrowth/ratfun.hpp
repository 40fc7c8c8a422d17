#pragma once

#include <string>

#include "cygrowth/poly.hpp"

namespace cygrowth {

/// Reduced rational function num/den over Q(t).
///
/// Canonical form: gcd(num, den) = 1, the denominator is a true polynomial
/// (t-powers live in the Laurent numerator) with nonzero constant term,
/// integer primitive, and den(0) > 0.  Equality is structural.
class RatFun {
 public:
  RatFun() : num_(), den_(Poly::one()) {}
  RatFun(Poly num, Poly den);

  static RatFun zero() { return RatFun(); }
  static RatFun from_poly(const Poly& p) { return RatFun(p, Poly::one()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator-() const;
  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  /// Order of the pole at t=1; negative values mean a zero of that order.
  long pole_order_at_one() const;

  /// Leading Laurent coefficient of the expansion in powers of (1-t); eps(0) = 0.
  Rat eps() const;

  std::string str() const;

 private:
  Poly num_, den_;
};

/// Lowest-terms rational function numer/denom.
RatFun reduce(const Poly& numer, const Poly& denom);

/// Pole order of a reduced rational function at t = 1.
long valuation_at_one(const RatFun& r);

/// Multiplicity: value of (1-t)^m * r at t = 1 for m the pole order.
Rat multiplicity_eps(const RatFun& r);

}  // namespace cygrowth
