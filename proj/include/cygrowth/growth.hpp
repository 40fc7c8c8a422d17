#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cygrowth/matpoly.hpp"

namespace cygrowth {

enum class GrowthClass { FiniteGK, Exponential };

/// n-th cyclotomic polynomial (cached).
Poly cyclotomic(long n);
long euler_phi(long n);

struct CyclotomicFactorization {
  bool all_roots_of_unity = false;
  std::vector<std::pair<long, int>> factors;  // (cyclotomic index, multiplicity)
  Poly remainder;                             // the non-cyclotomic cofactor
  long stripped_t_power = 0;
  std::string str() const;
};

/// True iff p is +-1 times a product of cyclotomic polynomials (t-powers stripped).
/// Always returns the divided-out factor list as evidence.
CyclotomicFactorization all_roots_are_roots_of_unity(const Poly& p);

/// Numeric cross-check: max | |root| - 1 | over the squarefree part of p.
double max_unit_circle_deviation(const Poly& p);

struct GrowthReport {
  GrowthClass growth_class = GrowthClass::Exponential;
  std::optional<long> gk_dimension;
  Poly det_q;
  CyclotomicFactorization factorization;
  Rat eps_det;
  std::vector<std::vector<long>> per_entry_pole_orders;
  std::vector<std::vector<RatFun>> entries;  // reduced entries of q(t)^{-1}

  std::string growth_str() const {
    return growth_class == GrowthClass::FiniteGK ? "FiniteGK" : "Exponential";
  }
};

/// Growth of the algebra with Hilbert series q(t)^{-1}; requires det q(0) = +-1.
GrowthReport classify_algebra(const MatPoly& q);

struct ModuleSeriesSpec {
  std::vector<Poly> v;  // numerator column
  MatPoly q;
};

struct ModuleGrowthResult {
  std::optional<long> gk;  // absent when some coordinate grows exponentially
  Rat eps;                 // multiplicity of the total series
  std::vector<RatFun> coordinates;
  RatFun total;
};

ModuleGrowthResult module_growth(const ModuleSeriesSpec& spec);

/// Checks eps(a+b) == eps(a) + eps(b); both series must have roots-of-unity
/// denominators and equal pole order at 1.
bool eps_additivity_check(const RatFun& a, const RatFun& b);

}  // namespace cygrowth
