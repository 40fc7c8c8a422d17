#include "cygrowth/poly.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <sstream>

#include "cygrowth/error.hpp"

namespace cygrowth {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw Error(Errc::ParseError, "empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw Error(Errc::ParseError, "bad rational literal: " + s);
  if (q.get_den() == 0) throw Error(Errc::ZeroDenominator, "rational with zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

bool Poly::is_unit_constant() const {
  return c_.size() == 1 && c_.begin()->first == 0 &&
         (c_.begin()->second == 1 || c_.begin()->second == -1);
}

long Poly::deg() const {
  if (c_.empty()) throw Error(Errc::ZeroPolynomial, "degree of the zero polynomial");
  return c_.rbegin()->first;
}

long Poly::val() const {
  if (c_.empty()) throw Error(Errc::ZeroPolynomial, "valuation of the zero polynomial");
  return c_.begin()->first;
}

Rat Poly::coeff(long e) const {
  auto it = c_.find(e);
  return it == c_.end() ? Rat(0) : it->second;
}

Rat Poly::leading_coeff() const {
  if (c_.empty()) return Rat(0);
  return c_.rbegin()->second;
}

void Poly::set(long e, const Rat& v) {
  if (v == 0)
    c_.erase(e);
  else
    c_[e] = v;
}

Poly Poly::operator-() const {
  Poly r;
  for (auto& [e, v] : c_) r.c_[e] = -v;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [e, v] : o.c_) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_.emplace(e, v);
    } else {
      it->second += v;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (auto& [e, v] : o.c_) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_.emplace(e, -v);
    } else {
      it->second -= v;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  if (c_.empty() || o.c_.empty()) return r;
  for (auto& [e1, v1] : c_)
    for (auto& [e2, v2] : o.c_) {
      long e = e1 + e2;
      auto it = r.c_.find(e);
      if (it == r.c_.end()) {
        Rat p = v1 * v2;
        if (p != 0) r.c_.emplace(e, std::move(p));
      } else {
        it->second += v1 * v2;
        if (it->second == 0) r.c_.erase(it);
      }
    }
  return r;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly Poly::operator*(const Rat& s) const {
  Poly r;
  if (s == 0) return r;
  for (auto& [e, v] : c_) r.c_[e] = v * s;
  return r;
}

Poly Poly::pow(unsigned long k) const {
  Poly r = Poly::one();
  Poly base = *this;
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

Poly Poly::shifted(long k) const {
  Poly r;
  for (auto& [e, v] : c_) r.c_[e + k] = v;
  return r;
}

Poly Poly::subst_inv() const {
  Poly r;
  for (auto& [e, v] : c_) r.c_[-e] = v;
  return r;
}

Poly Poly::derivative() const {
  Poly r;
  for (auto& [e, v] : c_)
    if (e != 0) r.c_[e - 1] = v * Rat(e);
  return r;
}

Rat Poly::eval(const Rat& x) const {
  if (c_.empty()) return Rat(0);
  if (x == 0) {
    if (val() < 0) throw Error(Errc::ZeroDenominator, "Laurent polynomial evaluated at 0");
    return coeff(0);
  }
  // Horner over the exponent gaps, then shift by the valuation.
  Rat acc(0);
  long prev = 0;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (first) {
      acc = it->second;
      prev = it->first;
      first = false;
      continue;
    }
    for (long k = 0; k < prev - it->first; ++k) acc *= x;
    acc += it->second;
    prev = it->first;
  }
  long v = val();
  if (v > 0) {
    for (long k = 0; k < v; ++k) acc *= x;
  } else if (v < 0) {
    for (long k = 0; k < -v; ++k) acc /= x;
  }
  return acc;
}

std::complex<double> Poly::eval(const std::complex<double>& x) const {
  std::complex<double> acc(0, 0);
  for (auto& [e, v] : c_) acc += to_double(v) * std::pow(x, static_cast<double>(e));
  return acc;
}

bool Poly::is_integral() const {
  for (auto& [e, v] : c_)
    if (!is_integer(v)) return false;
  return true;
}

Rat Poly::content() const {
  if (c_.empty()) return Rat(0);
  Int num_gcd(0), den_lcm(1);
  for (auto& [e, v] : c_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
  }
  Rat c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

Poly Poly::primitive() const {
  if (c_.empty()) return *this;
  Rat c = content();
  Poly r;
  for (auto& [e, v] : c_) r.c_[e] = v / c;
  return r;
}

std::optional<Poly> Poly::divided_by(const Poly& d) const {
  if (d.is_zero()) throw Error(Errc::ZeroDenominator, "division by the zero polynomial");
  if (is_zero()) return Poly();
  long va = val(), vd = d.val();
  auto [q, r] = divmod(shifted(-va), d.shifted(-vd));
  if (!r.is_zero()) return std::nullopt;
  return q.shifted(va - vd);
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(Errc::ZeroDenominator, "divmod by the zero polynomial");
  Poly q, r = a;
  long db = b.deg();
  Rat lb = b.leading_coeff();
  while (!r.is_zero() && r.deg() >= db) {
    long e = r.deg() - db;
    Rat c = r.leading_coeff() / lb;
    Poly m = Poly::term(c, e);
    q += m;
    r -= m * b;
  }
  return {q, r};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly x = a.is_zero() ? a : a.shifted(-a.val());
  Poly y = b.is_zero() ? b : b.shifted(-b.val());
  while (!y.is_zero()) {
    auto [q, r] = divmod(x, y);
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return x * (Rat(1) / x.leading_coeff());
}

std::pair<long, Poly> Poly::order_at_one() const {
  if (is_zero()) throw Error(Errc::ZeroPolynomial, "order at t=1 of the zero polynomial");
  Poly one_minus_t = Poly(1) - Poly::t();
  Poly c = *this;
  long k = 0;
  while (c.eval(Rat(1)) == 0) {
    auto q = c.divided_by(one_minus_t);
    c = *q;  // division is exact whenever 1 is a root
    ++k;
  }
  return {k, c};
}

Rat Poly::eps() const {
  if (is_zero()) return Rat(0);
  auto [k, c] = order_at_one();
  return c.eval(Rat(1));
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, v] : c_) {
    Rat a = v;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (e == 0) {
      os << rat_str(a);
    } else {
      if (a != 1) os << rat_str(a) << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "squarefree part of zero");
  Poly q = p.shifted(-p.val());
  Poly g = Poly::gcd(q, q.derivative());
  auto d = q.divided_by(g);
  return *d;
}

std::vector<std::complex<double>> numeric_roots(const std::vector<std::complex<double>>& coeffs) {
  int n = static_cast<int>(coeffs.size()) - 1;
  while (n > 0 && std::abs(coeffs[n]) == 0.0) --n;
  if (n <= 0) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -coeffs[i] / coeffs[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, false);
  std::vector<std::complex<double>> roots;
  roots.reserve(n);
  for (int i = 0; i < n; ++i) roots.push_back(es.eigenvalues()(i));
  return roots;
}

std::vector<std::complex<double>> numeric_roots(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "roots of the zero polynomial");
  Poly q = p.shifted(-p.val());
  std::vector<std::complex<double>> coeffs(q.deg() + 1, {0.0, 0.0});
  for (auto& [e, v] : q.coeffs()) coeffs[e] = to_complex(v);
  return numeric_roots(coeffs);
}

}  // namespace cygrowth
