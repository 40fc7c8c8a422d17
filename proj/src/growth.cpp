#include "cygrowth/growth.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "cygrowth/error.hpp"

namespace cygrowth {

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

Poly cyclotomic(long n) {
  static std::map<long, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively.
  std::function<Poly(long)> build = [&](long m) -> Poly {
    auto hit = cache.find(m);
    if (hit != cache.end()) return hit->second;
    Poly num = Poly::t(m) - Poly(1);
    for (long d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      Poly phi_d = build(d);
      num = *num.divided_by(phi_d);
    }
    cache.emplace(m, num);
    return num;
  };
  return build(n);
}

std::string CyclotomicFactorization::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto& [n, m] : factors) {
    if (!first) os << " * ";
    os << "Phi_" << n;
    if (m > 1) os << "^" << m;
    first = false;
  }
  if (first) os << "1";
  if (!(remainder == Poly::one())) os << " * (" << remainder.str() << ")";
  if (stripped_t_power != 0) os << " * t^" << stripped_t_power;
  return os.str();
}

CyclotomicFactorization all_roots_are_roots_of_unity(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "roots-of-unity test on the zero polynomial");
  CyclotomicFactorization out;
  out.stripped_t_power = p.val();
  Poly work = p.shifted(-p.val());
  // Normalizing to integer primitive form leaves the root set unchanged.
  work = work.primitive();
  long deg0 = work.is_zero() ? 0 : work.deg();
  if (deg0 == 0) {
    out.remainder = work;
    out.all_roots_of_unity = work.is_unit_constant();
    return out;
  }
  bool unimodular_ends = rat_abs(work.leading_coeff()) == 1 && rat_abs(work.constant_coeff()) == 1;
  if (unimodular_ends) {
    // phi(n) >= sqrt(n/2), so indices beyond 2*deg^2 cannot divide.
    long bound = 2 * deg0 * deg0;
    for (long n = 1; n <= bound; ++n) {
      if (work.deg() == 0) break;
      if (euler_phi(n) > work.deg()) continue;
      Poly phi = cyclotomic(n);
      int mult = 0;
      while (true) {
        auto q = work.divided_by(phi);
        if (!q) break;
        work = *q;
        ++mult;
      }
      if (mult > 0) out.factors.emplace_back(n, mult);
    }
  }
  out.remainder = work;
  out.all_roots_of_unity = work.is_unit_constant();
  return out;
}

double max_unit_circle_deviation(const Poly& p) {
  Poly sf = squarefree_part(p);
  if (sf.is_constant()) return 0.0;
  double worst = 0.0;
  for (auto& r : numeric_roots(sf)) worst = std::max(worst, std::abs(std::abs(r) - 1.0));
  return worst;
}

GrowthReport classify_algebra(const MatPoly& q) {
  int n = q.n();
  if (q.min_exponent() < 0)
    throw Error(Errc::NonUnimodularConstantTerm, "q(t) has negative t-exponents");
  QMat q0 = q.eval(Rat(0));
  Rat d0 = q0.det();
  if (d0 != 1 && d0 != -1)
    throw Error(Errc::NonUnimodularConstantTerm,
                "det q(0) = " + rat_str(d0) + ", expected +-1");
  GrowthReport rep;
  rep.det_q = det(q);
  rep.factorization = all_roots_are_roots_of_unity(rep.det_q);
  rep.eps_det = rep.det_q.eps();
  rep.entries = entrywise_rational(q);
  rep.per_entry_pole_orders.assign(n, std::vector<long>(n, 0));
  long max_pole = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long ord = rep.entries[i][j].is_zero() ? 0 : rep.entries[i][j].pole_order_at_one();
      rep.per_entry_pole_orders[i][j] = ord;
      max_pole = std::max(max_pole, ord);
    }
  if (rep.factorization.all_roots_of_unity) {
    rep.growth_class = GrowthClass::FiniteGK;
    rep.gk_dimension = max_pole;
  } else {
    rep.growth_class = GrowthClass::Exponential;
  }
  return rep;
}

ModuleGrowthResult module_growth(const ModuleSeriesSpec& spec) {
  int n = spec.q.n();
  if (static_cast<int>(spec.v.size()) != n)
    throw Error(Errc::DimensionMismatch, "module numerator size does not match q");
  QMat q0 = spec.q.eval(Rat(0));
  Rat d0 = q0.det();
  if (d0 != 1 && d0 != -1)
    throw Error(Errc::NonUnimodularConstantTerm, "det q(0) != +-1");
  Poly d = det(spec.q);
  MatPoly adj = adjugate(spec.q);
  std::vector<Poly> num = adj.apply(spec.v);
  ModuleGrowthResult out;
  out.coordinates.reserve(n);
  bool all_zero = true;
  bool finite = true;
  long max_pole = 0;
  RatFun total;
  for (int i = 0; i < n; ++i) {
    RatFun h = reduce(num[i], d);
    total = total + h;
    if (!h.is_zero()) {
      all_zero = false;
      auto fact = all_roots_are_roots_of_unity(h.den());
      if (!fact.all_roots_of_unity)
        finite = false;
      else
        max_pole = std::max(max_pole, h.pole_order_at_one());
    }
    out.coordinates.push_back(std::move(h));
  }
  if (all_zero)
    throw Error(Errc::ZeroPolynomial, "module series is identically zero");
  if (finite) out.gk = max_pole;
  out.total = total;
  out.eps = total.eps();
  return out;
}

bool eps_additivity_check(const RatFun& a, const RatFun& b) {
  auto finite = [](const RatFun& r) {
    return r.is_zero() || all_roots_are_roots_of_unity(r.den()).all_roots_of_unity;
  };
  if (!finite(a) || !finite(b))
    throw Error(Errc::DimensionMismatch, "series does not have finite GK-dimension");
  if (a.pole_order_at_one() != b.pole_order_at_one())
    throw Error(Errc::DimensionMismatch, "series have different pole orders at t=1");
  RatFun sum = a + b;
  return sum.eps() == a.eps() + b.eps();
}

}  // namespace cygrowth
