#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "cygrowth/cy_series.hpp"
#include "cygrowth/error.hpp"
#include "cygrowth/oracle.hpp"
#include "doctest.h"

using namespace cygrowth;

namespace {

WeightedQuiver loops(std::initializer_list<std::pair<const char*, long>> spec) {
  WeightedQuiver q;
  q.n_vertices = 1;
  for (auto& [id, w] : spec) q.arrows.push_back({id, 1, 1, w});
  return q;
}

CYDatum datum(int d, std::vector<int> mu, std::vector<long> ell) {
  CYDatum cy;
  cy.dimension = d;
  cy.mu = std::move(mu);
  cy.ell = std::move(ell);
  return cy;
}

GradedPresentation two_loop_presentation() {
  // k<x,y>/(yx - xy - x^3) with deg x = 1, deg y = 2.
  GradedPresentation p;
  p.quiver = loops({{"x", 1}, {"y", 2}});
  Relation r;
  r.source = 1;
  r.target = 1;
  r.weight = 3;
  r.terms = {{Rat(1), {"y", "x"}}, {Rat(-1), {"x", "y"}}, {Rat(-1), {"x", "x", "x"}}};
  p.relations = {r};
  return p;
}

GradedPresentation commutator_presentation() {
  GradedPresentation p;
  p.quiver = loops({{"x", 1}, {"y", 1}, {"z", 1}});
  auto rel = [&](const char* a, const char* b) {
    Relation r;
    r.source = 1;
    r.target = 1;
    r.weight = 2;
    r.terms = {{Rat(1), {a, b}}, {Rat(-1), {b, a}}};
    return r;
  };
  p.relations = {rel("y", "z"), rel("z", "x"), rel("x", "y")};
  return p;
}

Poly P4() {
  Poly p;
  p.set(0, Rat(1));
  p.set(1, Rat(-2));
  p.set(3, Rat(2));
  p.set(4, Rat(-1));
  return p;
}

Semipotential commutator_potential() {
  Semipotential sp;
  sp.y_basis = {"x", "y", "z"};
  auto entry = [](const char* y, const char* x, long coeff, const char* g) {
    Semipotential::Entry e;
    e.y = y;
    e.x = x;
    e.g = {{Rat(coeff), {g}}};
    return e;
  };
  sp.entries = {entry("x", "z", 1, "y"),  entry("y", "x", 1, "z"),  entry("z", "y", 1, "x"),
                entry("x", "y", -1, "z"), entry("z", "x", -1, "y"), entry("y", "z", -1, "x")};
  return sp;
}

}  // namespace

TEST_CASE("free algebra dimensions double each degree") {
  GradedPresentation p;
  p.quiver = loops({{"x", 1}, {"y", 1}});
  DimTable t = graded_dims(p, 4);
  long expect = 1;
  for (long n = 0; n <= 4; ++n) {
    CHECK(t.at(1, 1, n) == expect);
    expect *= 2;
  }
}

TEST_CASE("weighted two-loop quotient matches 1/((1-t)(1-t^2))") {
  DimTable t = graded_dims(two_loop_presentation(), 10);
  long expect[] = {1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6};
  for (long n = 0; n <= 10; ++n) CHECK(t.at(1, 1, n) == expect[n]);

  CYSeriesModel m = build_q(loops({{"x", 1}, {"y", 2}}), datum(2, {1}, {3}));
  SeriesComparison cmp = check_against_series(t, m.q);
  CHECK(cmp.match);
}

TEST_CASE("free algebra mismatch against the symmetric-algebra series") {
  GradedPresentation p;
  p.quiver = loops({{"x", 1}, {"y", 1}});
  DimTable t = graded_dims(p, 3);
  MatPoly q(1);
  Poly one_minus_t;
  one_minus_t.set(0, Rat(1));
  one_minus_t.set(1, Rat(-1));
  q.at(0, 0) = one_minus_t * one_minus_t;
  SeriesComparison cmp = check_against_series(t, q);
  CHECK_FALSE(cmp.match);
  REQUIRE(cmp.first_mismatch.has_value());
  CHECK(*cmp.first_mismatch == std::make_tuple(1, 1, 2L));
  CHECK(cmp.oracle_value == 4);
  CHECK(cmp.series_value == Rat(3));
}

TEST_CASE("commutator relations give polynomial-ring dimensions") {
  DimTable t = graded_dims(commutator_presentation(), 6);
  for (long n = 0; n <= 6; ++n) CHECK(t.at(1, 1, n) == (n + 1) * (n + 2) / 2);
}

TEST_CASE("mesh relations for the skew-group quiver match the closed series") {
  WeightedQuiver q;
  q.n_vertices = 2;
  q.arrows = {{"a1", 1, 1, 1}, {"a2", 2, 2, 1}, {"b", 1, 2, 1}, {"c", 2, 1, 1}};
  CYDatum cy = datum(2, {2, 1}, {2, 2});
  MeshData tau;
  tau.tau["a1"] = {{Rat(1), "c"}};
  tau.tau["c"] = {{Rat(-1), "a2"}};
  tau.tau["b"] = {{Rat(1), "a1"}};
  tau.tau["a2"] = {{Rat(-1), "b"}};
  GradedPresentation pres = build_mesh_relations(q, cy, tau);
  CHECK(pres.relations.size() == 2);  // one relation per vertex
  DimTable t = graded_dims(pres, 8);
  CYSeriesModel model = build_q(q, cy);
  SeriesComparison cmp = check_against_series(t, model.q);
  CHECK(cmp.match);
}

TEST_CASE("mesh relations on the three-vertex double cycle match the closed series") {
  // Arrows a_i: i -> i+1 and b_i: i+1 -> i around a triangle; mu = id, ell = 2.
  // tau(a_i) = b_i, tau(b_i) = -a_i gives the relation b_{r-1} a_{r-1} - a_r b_r
  // at each vertex r, the classical mesh presentation on this quiver.
  WeightedQuiver q;
  q.n_vertices = 3;
  for (int i = 1; i <= 3; ++i) {
    int next = (i % 3) + 1;
    q.arrows.push_back({"a" + std::to_string(i), i, next, 1});
    q.arrows.push_back({"b" + std::to_string(i), next, i, 1});
  }
  CYDatum cy = datum(2, {1, 2, 3}, {2, 2, 2});
  MeshData tau;
  for (int i = 1; i <= 3; ++i) {
    tau.tau["a" + std::to_string(i)] = {{Rat(1), "b" + std::to_string(i)}};
    tau.tau["b" + std::to_string(i)] = {{Rat(-1), "a" + std::to_string(i)}};
  }
  GradedPresentation pres = build_mesh_relations(q, cy, tau);
  CHECK(pres.relations.size() == 3);
  CYSeriesModel model = build_q(q, cy);
  SpectralReport spec = dim2_spectral_criterion(model);
  CHECK(spec.verdict == CriterionVerdict::Pass);
  DimTable t = graded_dims(pres, 8);
  CHECK(check_against_series(t, model.q).match);
  CHECK(truncated_socle_trivial(pres, Side::Right, 8).trivial_up_to_cutoff);
}

TEST_CASE("mesh validation failures") {
  WeightedQuiver q;
  q.n_vertices = 2;
  q.arrows = {{"a", 1, 2, 1}, {"b", 2, 1, 1}};
  CYDatum cy = datum(2, {1, 2}, {2, 2});
  {
    // tau sending a to itself: a is 1->2 but tau(a) must live in 2->1 arrows.
    MeshData tau;
    tau.tau["a"] = {{Rat(1), "a"}};
    tau.tau["b"] = {{Rat(1), "a"}};
    CHECK_THROWS_WITH_AS(build_mesh_relations(q, cy, tau),
                         doctest::Contains("tau(a)"), Error);
  }
  {
    // Rank-deficient tau: both arrows map to the same image.
    MeshData tau;
    tau.tau["a"] = {{Rat(1), "b"}};
    tau.tau["b"] = {{Rat(1), "a"}};
    GradedPresentation ok = build_mesh_relations(q, cy, tau);
    CHECK(ok.relations.size() == 2);
    MeshData degenerate;
    degenerate.tau["a"] = {};
    degenerate.tau["b"] = {{Rat(1), "a"}};
    CHECK_THROWS_AS(build_mesh_relations(q, cy, degenerate), Error);
  }
  {
    // Degree mismatch: identity-permutation tau on a 2-cycle with ell = 3.
    CYDatum cy3 = datum(2, {1, 2}, {3, 3});
    MeshData tau;
    tau.tau["a"] = {{Rat(1), "b"}};
    tau.tau["b"] = {{Rat(1), "a"}};
    bool threw = false;
    try {
      build_mesh_relations(q, cy3, tau);
    } catch (const Error& e) {
      threw = true;
      CHECK(e.code() == Errc::DegreeMismatch);
    }
    CHECK(threw);
  }
}

TEST_CASE("semipotential relations: commutator potential") {
  WeightedQuiver q = loops({{"x", 1}, {"y", 1}, {"z", 1}});
  CYDatum cy = datum(3, {1}, {3});
  SemipotentialRelations sr = build_semipotential_relations(q, cy, commutator_potential());
  REQUIRE(sr.rows.relations.size() == 3);
  REQUIRE(sr.columns.relations.size() == 3);
  DimTable rows = graded_dims(sr.rows, 6);
  DimTable cols = graded_dims(sr.columns, 6);
  for (long n = 0; n <= 6; ++n) {
    CHECK(rows.at(1, 1, n) == (n + 1) * (n + 2) / 2);
    CHECK(cols.at(1, 1, n) == rows.at(1, 1, n));
  }
  CYSeriesModel model = build_q(q, cy);
  CHECK(check_against_series(rows, model.q).match);
}

TEST_CASE("semipotential relations: degree-4 potential on two loops") {
  // Cyclic symmetrization of (xy - yx)^2; its one-sided strips are the
  // enveloping-algebra relations 2yxy - xy^2 - y^2x and 2xyx - yx^2 - x^2y,
  // so the quotient has series 1/((1-t)^2(1-t^2)) = (1 - 2t + 2t^3 - t^4)^{-1}.
  WeightedQuiver q = loops({{"x", 1}, {"y", 1}});
  CYDatum cy = datum(3, {1}, {4});
  Semipotential sp;
  sp.y_basis = {"x", "y"};
  auto entry = [](const char* y, const char* x, long c, std::vector<std::string> path) {
    Semipotential::Entry e;
    e.y = y;
    e.x = x;
    e.g = {{Rat(c), std::move(path)}};
    return e;
  };
  sp.entries = {entry("x", "y", 2, {"y", "x"}),  entry("x", "y", -1, {"x", "y"}),
                entry("y", "x", 2, {"x", "y"}),  entry("y", "x", -1, {"y", "x"}),
                entry("x", "x", -1, {"y", "y"}), entry("y", "y", -1, {"x", "x"})};
  SemipotentialRelations sr = build_semipotential_relations(q, cy, sp);
  REQUIRE(sr.rows.relations.size() == 2);
  REQUIRE(sr.columns.relations.size() == 2);
  DimTable rows = graded_dims(sr.rows, 10);
  DimTable cols = graded_dims(sr.columns, 10);
  for (long n = 0; n <= 10; ++n) CHECK(rows.at(1, 1, n) == cols.at(1, 1, n));
  CYSeriesModel model = build_q(q, cy);
  CHECK(model.q.at(0, 0) == P4());
  CHECK(check_against_series(rows, model.q).match);
  SocleReport soc = truncated_socle_trivial(sr.rows, Side::Right, 8);
  CHECK(soc.trivial_up_to_cutoff);
}

TEST_CASE("semipotential weak-potential violation") {
  WeightedQuiver q;
  q.n_vertices = 2;
  q.arrows = {{"a", 1, 2, 1}, {"b", 2, 1, 1}, {"c", 1, 1, 1}, {"d", 2, 2, 1}};
  CYDatum cy = datum(3, {2, 1}, {3, 3});
  Semipotential sp;
  sp.y_basis = {"a", "b", "c", "d"};
  Semipotential::Entry e;
  // y = a starts at 1, but mu^{-1}(target(x=c)) = mu^{-1}(1) = 2.
  e.y = "a";
  e.x = "c";
  e.g = {{Rat(1), {"b"}}};
  sp.entries = {e};
  bool threw = false;
  try {
    build_semipotential_relations(q, cy, sp);
  } catch (const Error& err) {
    threw = true;
    CHECK(err.code() == Errc::NotWeakPotential);
  }
  CHECK(threw);
}

TEST_CASE("socle detection") {
  // k<x>/(x^2): x kills J on both sides.
  GradedPresentation p;
  p.quiver = loops({{"x", 1}});
  Relation r;
  r.source = 1;
  r.target = 1;
  r.weight = 2;
  r.terms = {{Rat(1), {"x", "x"}}};
  p.relations = {r};
  SocleReport right = truncated_socle_trivial(p, Side::Right, 4);
  CHECK_FALSE(right.trivial_up_to_cutoff);
  REQUIRE(!right.witnesses.empty());
  CHECK(right.witnesses.front().degree == 1);
  SocleReport left = truncated_socle_trivial(p, Side::Left, 4);
  CHECK_FALSE(left.trivial_up_to_cutoff);

  SocleReport good = truncated_socle_trivial(two_loop_presentation(), Side::Right, 8);
  CHECK(good.trivial_up_to_cutoff);
  CHECK(good.checked_up_to == 6);
  SocleReport good_left = truncated_socle_trivial(two_loop_presentation(), Side::Left, 8);
  CHECK(good_left.trivial_up_to_cutoff);

  SocleReport poly = truncated_socle_trivial(commutator_presentation(), Side::Right, 6);
  CHECK(poly.trivial_up_to_cutoff);
}

TEST_CASE("monotone truncation: dims never change with larger D") {
  GradedPresentation p = two_loop_presentation();
  DimTable small = graded_dims(p, 6);
  DimTable large = graded_dims(p, 9);
  for (auto& [key, value] : small.dims)
    CHECK(large.at(std::get<0>(key), std::get<1>(key), std::get<2>(key)) == value);
}

TEST_CASE("quotient dims never exceed the free algebra") {
  GradedPresentation p = commutator_presentation();
  GradedPresentation free_p;
  free_p.quiver = p.quiver;
  DimTable quo = graded_dims(p, 5);
  DimTable fre = graded_dims(free_p, 5);
  for (auto& [key, value] : quo.dims) {
    CHECK(value >= 0);
    CHECK(value <= fre.at(std::get<0>(key), std::get<1>(key), std::get<2>(key)));
  }
}

TEST_CASE("redundant relation detection") {
  GradedPresentation p = commutator_presentation();
  CHECK(redundant_relations(p).empty());
  // Duplicate a relation; the copy is redundant.
  p.relations.push_back(p.relations[0]);
  auto red = redundant_relations(p);
  CHECK(red.size() == 2);  // both copies lie in the ideal of the others
}

TEST_CASE("validation rejects malformed relations") {
  GradedPresentation p;
  p.quiver = loops({{"x", 1}});
  Relation r;
  r.source = 1;
  r.target = 1;
  r.weight = 2;
  r.terms = {{Rat(1), {"x"}}};  // length-1 path
  p.relations = {r};
  CHECK_THROWS_AS(validate_presentation(p), Error);
  p.relations[0].terms = {{Rat(1), {"x", "x"}}};
  p.relations[0].weight = 3;  // wrong degree
  CHECK_THROWS_AS(validate_presentation(p), Error);
}

TEST_CASE("free path algebra dims equal the coefficients of (I - N)^{-1}") {
  // Independent routes: DFS path counting vs power-series inversion.
  std::mt19937 rng(31415);
  std::uniform_int_distribution<int> nd(1, 3), arrows(1, 4), vd(1, 3), wd(1, 3);
  for (int trial = 0; trial < 12; ++trial) {
    WeightedQuiver q;
    q.n_vertices = nd(rng);
    int count = arrows(rng);
    for (int k = 0; k < count; ++k) {
      Arrow a;
      a.id = "x" + std::to_string(k);
      a.source = 1 + (vd(rng) - 1) % q.n_vertices;
      a.target = 1 + (vd(rng) - 1) % q.n_vertices;
      a.weight = wd(rng);
      q.arrows.push_back(a);
    }
    GradedPresentation p;
    p.quiver = q;
    DimTable table = graded_dims(p, 8);
    MatPoly m = MatPoly::identity(q.n_vertices) - incidence(q).N;
    SeriesComparison cmp = check_against_series(table, m);
    CHECK(cmp.match);
    for (int i = 1; i <= q.n_vertices; ++i)
      for (int j = 1; j <= q.n_vertices; ++j)
        CHECK(table.at(i, j, 0) == (i == j ? 1 : 0));
  }
}

TEST_CASE("prime-field seam reproduces the rational dimension counts") {
  for (const GradedPresentation& p : {two_loop_presentation(), commutator_presentation()}) {
    DimTable exact = graded_dims(p, 7);
    DimTable modp = graded_dims_prime_field(p, 7);
    CHECK(exact.dims == modp.dims);
  }
}

TEST_CASE("path cap raises TruncationTooLarge") {
  GradedPresentation p;
  p.quiver = loops({{"x", 1}, {"y", 1}});
  bool threw = false;
  try {
    graded_dims(p, 12, 100);
  } catch (const Error& e) {
    threw = true;
    CHECK(e.code() == Errc::TruncationTooLarge);
  }
  CHECK(threw);
}
