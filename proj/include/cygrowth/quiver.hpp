#pragma once

#include <string>
#include <vector>

#include "cygrowth/matpoly.hpp"

namespace cygrowth {

struct Arrow {
  std::string id;
  int source = 0;  // vertices are 1-based
  int target = 0;
  long weight = 0;
};

struct WeightedQuiver {
  int n_vertices = 0;
  std::vector<Arrow> arrows;

  int arrow_index(const std::string& id) const;  // -1 when unknown
  const Arrow& arrow(const std::string& id) const;
};

/// Nakayama permutation and AS-index, as supplied with the quiver.
struct CYDatum {
  std::vector<int> mu;    // mu[i-1] is the image of vertex i (1-based values)
  std::vector<long> ell;  // AS-index vector
  int dimension = 0;      // 1, 2 or 3

  std::vector<int> mu_inverse() const;
};

struct IncidenceData {
  MatPoly N;  // weighted incidence matrix, N_{ij} = sum over arrows i->j of t^weight
  QMat M;     // N(1), plain arrow counts
};

/// Empty iff the quiver is well-formed and the weight-0 subquiver is acyclic.
std::vector<std::string> validate_quiver(const WeightedQuiver& q);

/// The path algebra has finite-dimensional graded pieces iff Q0 is acyclic.
bool is_locally_finite(const WeightedQuiver& q);

IncidenceData incidence(const WeightedQuiver& q);

bool is_connected(const WeightedQuiver& q);
bool is_strongly_connected(const WeightedQuiver& q);

/// Isomorphism key: lexicographically minimal weighted adjacency tensor over
/// all vertex relabelings. Feasible for small vertex counts only.
std::vector<long> canonical_key(const WeightedQuiver& q);

/// Permutation matrix P with P_{ij} = 1 iff mu(i) = j.
QMat permutation_matrix(const std::vector<int>& mu);

/// The matrix Laurent monomial P t^L for the datum (mu, ell).
MatPoly p_t_l(const CYDatum& cy);

/// Diagnostics for the datum itself (bijectivity, sizes, uniform-ell rule).
std::vector<std::string> validate_cy_datum(const WeightedQuiver& q, const CYDatum& cy);

}  // namespace cygrowth
