#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "cygrowth/error.hpp"
#include "cygrowth/growth.hpp"
#include "doctest.h"

using namespace cygrowth;

namespace {

Poly P(std::initializer_list<std::pair<long, long>> terms) {
  Poly p;
  for (auto& [e, c] : terms) p.set(e, Rat(c));
  return p;
}

std::mt19937 rng(424242);

Poly random_cyclotomic_product(int max_deg) {
  std::uniform_int_distribution<int> pick(1, 12);
  Poly p = Poly::one();
  int guard = 0;
  while (guard++ < 40) {
    long n = pick(rng);
    Poly phi = cyclotomic(n);
    if (p.deg() + phi.deg() > max_deg) break;
    p *= phi;
    std::uniform_int_distribution<int> stop(0, 2);
    if (stop(rng) == 0) break;
  }
  return p;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == P({{0, -1}, {1, 1}}));
  CHECK(cyclotomic(2) == P({{0, 1}, {1, 1}}));
  CHECK(cyclotomic(4) == P({{0, 1}, {2, 1}}));
  CHECK(cyclotomic(6) == P({{0, 1}, {1, -1}, {2, 1}}));
  CHECK(cyclotomic(12) == P({{0, 1}, {2, -1}, {4, 1}}));
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(97) == 96);
}

TEST_CASE("roots of unity classifier fixtures") {
  // (1-t^2)(1-t)^2 = Phi_1^3 Phi_2 up to sign.
  Poly p = P({{0, 1}, {2, -1}}) * P({{0, 1}, {1, -1}}) * P({{0, 1}, {1, -1}});
  auto f = all_roots_are_roots_of_unity(p);
  CHECK(f.all_roots_of_unity);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == std::pair<long, int>{1, 3});
  CHECK(f.factors[1] == std::pair<long, int>{2, 1});

  CHECK_FALSE(all_roots_are_roots_of_unity(P({{0, 1}, {1, -2}})).all_roots_of_unity);

  // (1-t)^3 expanded.
  auto g = all_roots_are_roots_of_unity(P({{0, 1}, {1, -3}, {2, 3}, {3, -1}}));
  CHECK(g.all_roots_of_unity);
  REQUIRE(g.factors.size() == 1);
  CHECK(g.factors[0] == std::pair<long, int>{1, 3});

  CHECK_THROWS_AS(all_roots_are_roots_of_unity(Poly()), Error);
}

TEST_CASE("classifier handles t-power factors and non-unimodular leads") {
  auto f = all_roots_are_roots_of_unity(P({{2, 1}, {3, 1}}));  // t^2 (1 + t)
  CHECK(f.all_roots_of_unity);
  CHECK(f.stripped_t_power == 2);
  CHECK_FALSE(all_roots_are_roots_of_unity(P({{0, 1}, {1, -1}, {2, 2}})).all_roots_of_unity);
}

TEST_CASE("random cyclotomic products classify as finite, spoiled ones do not") {
  std::uniform_int_distribution<int> shift(0, 5), sign(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    // +-t^k times a product of cyclotomics keeps every root on the unit circle.
    Poly p = random_cyclotomic_product(12).shifted(shift(rng));
    if (sign(rng)) p = -p;
    CHECK(all_roots_are_roots_of_unity(p).all_roots_of_unity);
    Poly spoiled = p * P({{0, 1}, {1, -2}});
    CHECK_FALSE(all_roots_are_roots_of_unity(spoiled).all_roots_of_unity);
    // Numeric oracle agreement on the squarefree part.
    CHECK(max_unit_circle_deviation(p) <= 1e-8);
    CHECK(max_unit_circle_deviation(spoiled) > 1e-8);
  }
}

TEST_CASE("classify_algebra on the skew-group matrix") {
  MatPoly q(2);
  q.at(0, 0) = P({{0, 1}, {1, -1}});
  q.at(1, 1) = P({{0, 1}, {1, -1}});
  q.at(0, 1) = P({{1, -1}, {2, 1}});
  q.at(1, 0) = P({{1, -1}, {2, 1}});
  GrowthReport rep = classify_algebra(q);
  CHECK(rep.growth_class == GrowthClass::FiniteGK);
  REQUIRE(rep.gk_dimension.has_value());
  CHECK(*rep.gk_dimension == 2);  // det vanishes to order 3 at 1, entries only to order 2
  CHECK(rep.det_q.order_at_one().first == 3);
  for (auto& row : rep.per_entry_pole_orders)
    for (long ord : row) CHECK(ord == 2);
  CHECK(rep.eps_det == Rat(2));
}

TEST_CASE("classify_algebra on one vertex, loops of weight 1 and 2") {
  MatPoly q(1);
  q.at(0, 0) = P({{0, 1}, {1, -1}, {2, -1}, {3, 1}});
  GrowthReport rep = classify_algebra(q);
  CHECK(rep.growth_class == GrowthClass::FiniteGK);
  CHECK(*rep.gk_dimension == 2);
  CHECK(rep.entries[0][0] ==
        reduce(Poly::one(), P({{0, 1}, {1, -1}}) * P({{0, 1}, {2, -1}})));
}

TEST_CASE("classify_algebra flags exponential growth") {
  // I - Mt + t^2 I for M = [[0,3],[3,0]]: det = (1-3t+t^2)(1+3t+t^2).
  MatPoly q(2);
  q.at(0, 0) = P({{0, 1}, {2, 1}});
  q.at(1, 1) = P({{0, 1}, {2, 1}});
  q.at(0, 1) = P({{1, -3}});
  q.at(1, 0) = P({{1, -3}});
  GrowthReport rep = classify_algebra(q);
  CHECK(rep.det_q == P({{0, 1}, {2, 1}}) * P({{0, 1}, {2, 1}}) - P({{2, 9}}));
  CHECK(rep.growth_class == GrowthClass::Exponential);
  CHECK_FALSE(rep.gk_dimension.has_value());
}

TEST_CASE("classify_algebra rejects non-unimodular constant terms") {
  MatPoly q(1);
  q.at(0, 0) = P({{0, 2}, {1, -1}});
  CHECK_THROWS_AS(classify_algebra(q), Error);
}

TEST_CASE("gk dimension is bounded by the det vanishing order") {
  std::uniform_int_distribution<int> d(-1, 1);
  for (int trial = 0; trial < 20; ++trial) {
    MatPoly q = MatPoly::identity(2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int e = 1; e <= 2; ++e) q.at(i, j) += Poly::term(Rat(d(rng)), e);
    GrowthReport rep;
    try {
      rep = classify_algebra(q);
    } catch (const Error&) {
      continue;
    }
    if (rep.growth_class != GrowthClass::FiniteGK) continue;
    CHECK(*rep.gk_dimension <= rep.det_q.order_at_one().first);
  }
}

TEST_CASE("module growth fixtures") {
  // Simple module: v = first column of q gives the standard basis vector.
  MatPoly q(2);
  q.at(0, 0) = P({{0, 1}, {1, -1}});
  q.at(1, 1) = P({{0, 1}, {1, -1}});
  q.at(0, 1) = P({{1, -1}, {2, 1}});
  q.at(1, 0) = P({{1, -1}, {2, 1}});
  {
    ModuleSeriesSpec spec;
    spec.q = q;
    spec.v = {q.at(0, 0), q.at(1, 0)};
    auto res = module_growth(spec);
    REQUIRE(res.gk.has_value());
    CHECK(*res.gk == 0);
    CHECK(res.coordinates[0] == RatFun::from_poly(Poly::one()));
    CHECK(res.coordinates[1].is_zero());
  }
  {
    // All-ones numerator: total 2/(1-t)^2, GK 2, eps 2.
    ModuleSeriesSpec spec;
    spec.q = q;
    spec.v = {Poly::one(), Poly::one()};
    auto res = module_growth(spec);
    REQUIRE(res.gk.has_value());
    CHECK(*res.gk == 2);
    CHECK(res.eps == Rat(2));
    CHECK(res.total == reduce(Poly(2), P({{0, 1}, {1, -1}}) * P({{0, 1}, {1, -1}})));
  }
  {
    // Dimension-1 two-cycle: (I - N)^{-1} e_1 has GK 1, total 1/(1-t).
    MatPoly q1 = MatPoly::identity(2);
    q1.at(0, 1) = -Poly::t();
    q1.at(1, 0) = -Poly::t();
    ModuleSeriesSpec spec;
    spec.q = q1;
    spec.v = {Poly::one(), Poly()};
    auto res = module_growth(spec);
    REQUIRE(res.gk.has_value());
    CHECK(*res.gk == 1);
    CHECK(res.total == reduce(Poly::one(), P({{0, 1}, {1, -1}})));
  }
}

TEST_CASE("module growth rejects the zero module and bad constant terms") {
  MatPoly q = MatPoly::identity(2);
  q.at(0, 1) = -Poly::t();
  ModuleSeriesSpec spec;
  spec.q = q;
  spec.v = {Poly(), Poly()};
  CHECK_THROWS_AS(module_growth(spec), Error);
  spec.v = {Poly::one()};
  CHECK_THROWS_AS(module_growth(spec), Error);  // size mismatch
}

TEST_CASE("eps additivity rejects exponential inputs") {
  RatFun bad = reduce(Poly::one(), P({{0, 1}, {1, -2}}));
  CHECK_THROWS_AS(eps_additivity_check(bad, bad), Error);
}

TEST_CASE("eps additivity check") {
  Poly d2 = P({{0, 1}, {1, -1}}) * P({{0, 1}, {1, -1}});
  RatFun a = reduce(Poly::one(), d2);
  CHECK(eps_additivity_check(a, a));
  RatFun b = reduce(Poly(2), d2), c = reduce(Poly(3), d2);
  CHECK(eps_additivity_check(b, c));
  RatFun half = reduce(Poly::one(), P({{0, 1}, {1, -1}}) * P({{0, 1}, {2, -1}}));
  CHECK(multiplicity_eps(half) == Rat(1, 2));
  CHECK(eps_additivity_check(half, half));
  CHECK((half + half).eps() == Rat(1));
  RatFun lower = reduce(Poly::one(), P({{0, 1}, {1, -1}}));
  CHECK_THROWS_AS(eps_additivity_check(a, lower), Error);
}

TEST_CASE("entry multiplicities are integer multiples over the reduced denominator") {
  // For finite-growth reports, eps(entry) * eps(den(entry)) is an integer.
  MatPoly q(2);
  q.at(0, 0) = P({{0, 1}, {1, -1}});
  q.at(1, 1) = P({{0, 1}, {1, -1}});
  q.at(0, 1) = P({{1, -1}, {2, 1}});
  q.at(1, 0) = P({{1, -1}, {2, 1}});
  GrowthReport rep = classify_algebra(q);
  REQUIRE(rep.growth_class == GrowthClass::FiniteGK);
  for (auto& row : rep.entries)
    for (auto& e : row) {
      if (e.is_zero()) continue;
      Rat product = e.eps() * e.den().eps();
      CHECK(is_integer(product));
    }
}

TEST_CASE("module growth reports exponential coordinates by omitting gk") {
  MatPoly q(2);
  q.at(0, 0) = P({{0, 1}, {2, 1}});
  q.at(1, 1) = P({{0, 1}, {2, 1}});
  q.at(0, 1) = P({{1, -3}});
  q.at(1, 0) = P({{1, -3}});
  ModuleSeriesSpec spec;
  spec.q = q;
  spec.v = {Poly::one(), Poly::one()};
  auto res = module_growth(spec);
  CHECK_FALSE(res.gk.has_value());
}

TEST_CASE("numeric cross validation agrees with the exact verdict") {
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    Poly p = Poly::one();
    for (int e = 1; e <= 8; ++e) p += Poly::term(Rat(coeff(rng)), e);
    bool exact = all_roots_are_roots_of_unity(p).all_roots_of_unity;
    bool numeric = max_unit_circle_deviation(p) <= 1e-8;
    CHECK(exact == numeric);
  }
}
