#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <numeric>
#include <random>

#include "cygrowth/json_io.hpp"
#include "cygrowth/quiver.hpp"
#include "doctest.h"

using namespace cygrowth;

namespace {

WeightedQuiver make(int n, std::initializer_list<Arrow> arrows) {
  WeightedQuiver q;
  q.n_vertices = n;
  q.arrows = arrows;
  return q;
}

bool has_diag(const std::vector<std::string>& diags, const std::string& needle) {
  for (auto& d : diags)
    if (d.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("validate_quiver fixtures") {
  CHECK(validate_quiver(make(1, {})).empty());
  auto loop0 = validate_quiver(make(1, {{"x", 1, 1, 0}}));
  CHECK(has_diag(loop0, "Q0 has a cycle"));
  auto twocycle0 = validate_quiver(make(2, {{"a", 1, 2, 0}, {"b", 2, 1, 0}}));
  CHECK(has_diag(twocycle0, "Q0 has a cycle"));
  // A weight-0 arrow without a cycle is fine at this layer.
  CHECK(validate_quiver(make(2, {{"a", 1, 2, 0}})).empty());
  CHECK(has_diag(validate_quiver(make(1, {{"x", 1, 2, 1}})), "out of range"));
  CHECK(has_diag(validate_quiver(make(1, {{"x", 1, 1, 1}, {"x", 1, 1, 2}})), "duplicate"));
}

TEST_CASE("incidence fixtures") {
  // Two vertices, loop at each, one arrow each way, all weight 1.
  auto q = make(2, {{"a1", 1, 1, 1}, {"a2", 2, 2, 1}, {"b", 1, 2, 1}, {"c", 2, 1, 1}});
  IncidenceData inc = incidence(q);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(inc.M.at(i, j) == Rat(1));
      CHECK(inc.N.at(i, j) == Poly::t());
    }
  // One vertex, loops of weight 1 and m.
  auto q2 = make(1, {{"x", 1, 1, 1}, {"y", 1, 1, 4}});
  IncidenceData inc2 = incidence(q2);
  Poly expect = Poly::t() + Poly::t(4);
  CHECK(inc2.N.at(0, 0) == expect);
  CHECK(inc2.M.at(0, 0) == Rat(2));
  // No arrows.
  auto inc3 = incidence(make(2, {}));
  CHECK(inc3.N.is_zero());
}

TEST_CASE("incidence is additive over disjoint unions") {
  auto a = make(2, {{"a", 1, 2, 1}, {"b", 2, 1, 3}});
  auto b = make(1, {{"c", 1, 1, 2}});
  WeightedQuiver uni;
  uni.n_vertices = 3;
  uni.arrows = {{"a", 1, 2, 1}, {"b", 2, 1, 3}, {"c", 3, 3, 2}};
  IncidenceData ia = incidence(a), ib = incidence(b), iu = incidence(uni);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(iu.N.at(i, j) == ia.N.at(i, j));
  CHECK(iu.N.at(2, 2) == ib.N.at(0, 0));
  CHECK(iu.N.at(0, 2).is_zero());
}

TEST_CASE("connectivity") {
  auto cyc = make(2, {{"a", 1, 2, 1}, {"b", 2, 1, 1}});
  CHECK(is_connected(cyc));
  CHECK(is_strongly_connected(cyc));
  auto arrow = make(2, {{"a", 1, 2, 1}});
  CHECK(is_connected(arrow));
  CHECK_FALSE(is_strongly_connected(arrow));
  auto isolated = make(2, {});
  CHECK_FALSE(is_connected(isolated));
  CHECK_FALSE(is_strongly_connected(isolated));
  CHECK(is_connected(make(1, {})));
  CHECK(is_strongly_connected(make(1, {})));
}

TEST_CASE("canonical key identifies isomorphic quivers") {
  auto a = make(2, {{"p", 1, 2, 1}, {"q", 2, 1, 3}});
  auto b = make(2, {{"u", 2, 1, 1}, {"v", 1, 2, 3}});  // relabeled vertices
  CHECK(canonical_key(a) == canonical_key(b));
  auto c = make(2, {{"p", 1, 2, 1}, {"q", 2, 1, 2}});
  CHECK(canonical_key(a) != canonical_key(c));
  // Arrow ids do not matter.
  auto d = make(2, {{"zzz", 1, 2, 1}, {"w", 2, 1, 3}});
  CHECK(canonical_key(a) == canonical_key(d));
}

TEST_CASE("canonical key is invariant under random relabelings") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> nd(1, 4), cd(0, 6), vd(0, 3), wd(0, 3);
  for (int trial = 0; trial < 40; ++trial) {
    int n = nd(rng);
    WeightedQuiver q;
    q.n_vertices = n;
    int arrows = cd(rng);
    for (int k = 0; k < arrows; ++k) {
      Arrow a;
      a.id = "x" + std::to_string(k);
      a.source = 1 + vd(rng) % n;
      a.target = 1 + vd(rng) % n;
      a.weight = wd(rng);
      q.arrows.push_back(a);
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    WeightedQuiver relabeled = q;
    for (auto& a : relabeled.arrows) {
      a.source = perm[a.source - 1];
      a.target = perm[a.target - 1];
    }
    CHECK(canonical_key(q) == canonical_key(relabeled));
  }
}

TEST_CASE("cy datum validation") {
  auto q = make(2, {{"a1", 1, 1, 1}, {"a2", 2, 2, 1}, {"b", 1, 2, 1}, {"c", 2, 1, 1}});
  CYDatum cy;
  cy.dimension = 2;
  cy.mu = {2, 1};
  cy.ell = {2, 2};
  CHECK(validate_cy_datum(q, cy).empty());
  cy.mu = {2, 2};
  CHECK_FALSE(validate_cy_datum(q, cy).empty());
  cy.mu = {2, 1};
  cy.ell = {2, 3};
  CHECK(has_diag(validate_cy_datum(q, cy), "uniform"));
  CHECK(cy.mu_inverse() == std::vector<int>{2, 1});
}

TEST_CASE("quiver json round trip") {
  QuiverFile qf;
  qf.quiver = make(2, {{"a", 1, 2, 1}, {"b", 2, 1, 3}});
  CYDatum cy;
  cy.dimension = 2;
  cy.mu = {2, 1};
  cy.ell = {4, 4};
  qf.cy = cy;
  std::string path = "/tmp/cygrowth_roundtrip.json";
  {
    std::ofstream f(path);
    f << quiver_to_json(qf);
  }
  QuiverFile back = load_quiver_file(path);
  CHECK(back.quiver.n_vertices == 2);
  REQUIRE(back.quiver.arrows.size() == 2);
  CHECK(back.quiver.arrows[1].id == "b");
  CHECK(back.quiver.arrows[1].weight == 3);
  REQUIRE(back.cy.has_value());
  CHECK(back.cy->mu == cy.mu);
  CHECK(back.cy->ell == cy.ell);
}

TEST_CASE("local finiteness flag") {
  CHECK(is_locally_finite(make(1, {{"x", 1, 1, 1}})));
  CHECK_FALSE(is_locally_finite(make(1, {{"x", 1, 1, 0}})));
  CHECK(is_locally_finite(make(2, {{"a", 1, 2, 0}})));  // acyclic weight-0 part
}

TEST_CASE("permutation matrix and P t^L") {
  CYDatum cy;
  cy.dimension = 2;
  cy.mu = {2, 1};
  cy.ell = {2, 2};
  QMat p = permutation_matrix(cy.mu);
  CHECK(p.at(0, 1) == Rat(1));
  CHECK(p.at(1, 0) == Rat(1));
  CHECK(p.at(0, 0) == Rat(0));
  MatPoly ptl = p_t_l(cy);
  CHECK(ptl.at(0, 1) == Poly::t(2));
  CHECK(ptl.at(1, 0) == Poly::t(2));
  // Asymmetric ell: entry (i, mu(i)) carries t^{ell_{mu(i)}}.
  cy.ell = {5, 7};
  ptl = p_t_l(cy);
  CHECK(ptl.at(0, 1) == Poly::t(7));
  CHECK(ptl.at(1, 0) == Poly::t(5));
}
