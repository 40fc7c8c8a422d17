#include "cygrowth/ratfun.hpp"

#include "cygrowth/error.hpp"

namespace cygrowth {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(Errc::ZeroDenominator, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::one();
    return;
  }
  // Move the denominator's t-power into the numerator and cancel.
  long dv = den_.val();
  if (dv != 0) {
    den_ = den_.shifted(-dv);
    num_ = num_.shifted(-dv);
  }
  long nv = num_.val();
  Poly npoly = num_.shifted(-nv);
  Poly g = Poly::gcd(npoly, den_);
  npoly = *npoly.divided_by(g);
  den_ = *den_.divided_by(g);
  // Scale so that the denominator is integer primitive with den(0) > 0.
  Rat c = den_.content();
  if (den_.constant_coeff() < 0) c = -c;
  den_ = *den_.divided_by(Poly(c));
  npoly = *npoly.divided_by(Poly(c));
  num_ = npoly.shifted(nv);
}

RatFun reduce(const Poly& numer, const Poly& denom) { return RatFun(numer, denom); }

RatFun RatFun::operator+(const RatFun& o) const {
  return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
  return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const { return RatFun(num_ * o.num_, den_ * o.den_); }

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

long RatFun::pole_order_at_one() const {
  if (is_zero()) return 0;
  auto [kd, cd] = den_.order_at_one();
  auto [kn, cn] = num_.order_at_one();
  return kd - kn;
}

Rat RatFun::eps() const {
  if (is_zero()) return Rat(0);
  auto [kd, cd] = den_.order_at_one();
  auto [kn, cn] = num_.order_at_one();
  return cn.eval(Rat(1)) / cd.eval(Rat(1));
}

std::string RatFun::str() const {
  if (is_zero()) return "0";
  if (den_ == Poly::one()) return num_.str();
  std::string n = num_.str();
  if (num_.term_count() > 1) n = "(" + n + ")";
  return n + " / (" + den_.str() + ")";
}

long valuation_at_one(const RatFun& r) { return r.pole_order_at_one(); }

Rat multiplicity_eps(const RatFun& r) { return r.eps(); }

}  // namespace cygrowth
