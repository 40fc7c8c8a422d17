#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cygrowth/linalg.hpp"
#include "cygrowth/matpoly.hpp"
#include "cygrowth/quiver.hpp"

namespace cygrowth {

struct PathTerm {
  Rat coeff;
  std::vector<std::string> path;  // arrow ids, composed left to right
};

/// Homogeneous S-compatible relation: every term is a path source -> target
/// of the stated total weight.
struct Relation {
  int source = 0;
  int target = 0;
  long weight = 0;
  std::vector<PathTerm> terms;
};

struct GradedPresentation {
  WeightedQuiver quiver;
  std::vector<Relation> relations;
};

/// Arrow-space endomorphism tau, given arrow by arrow as a combination of arrows.
struct MeshData {
  std::map<std::string, std::vector<std::pair<Rat, std::string>>> tau;
};

/// Twisted semipotential sum_{i,j} y_i g_ij x_j with y drawn from a second
/// arrow basis (a relabeling of the arrows) and g_ij given as path combinations.
struct Semipotential {
  std::vector<std::string> y_basis;
  struct Entry {
    std::string y;
    std::string x;
    std::vector<PathTerm> g;
  };
  std::vector<Entry> entries;
};

struct DimTable {
  long D = 0;
  int n = 0;
  // dims[(i, j, deg)] with 1-based vertices; absent means 0.
  std::map<std::tuple<int, int, long>, long> dims;

  long at(int i, int j, long deg) const;
  std::string csv() const;
};

/// Throws on malformed input (endpoints, inhomogeneity, paths of length < 2).
void validate_presentation(const GradedPresentation& p);

/// One relation per vertex r: h_r = sum_{x with target r} tau(x) . x.
GradedPresentation build_mesh_relations(const WeightedQuiver& quiver, const CYDatum& cy,
                                        const MeshData& tau);

struct SemipotentialRelations {
  GradedPresentation rows;     // h_i = sum_j g_ij x_j
  GradedPresentation columns;  // h'_j = sum_i y_i g_ij
};

SemipotentialRelations build_semipotential_relations(const WeightedQuiver& quiver,
                                                     const CYDatum& cy, const Semipotential& sp);

/// Exact graded dimensions of kQ/I up to degree D by degreewise elimination.
DimTable graded_dims(const GradedPresentation& p, long D,
                     long path_cap_per_degree = 2'000'000);

/// Speed seam: the same count with elimination over F_p for the fixed prime
/// 2^31 - 1. Prime-field ranks bound the rational ranks from below, so
/// entries can only over-count at bad primes. Off the default path.
DimTable graded_dims_prime_field(const GradedPresentation& p, long D,
                                 long path_cap_per_degree = 2'000'000);

struct SeriesComparison {
  bool match = true;
  std::optional<std::tuple<int, int, long>> first_mismatch;  // (i, j, degree)
  long oracle_value = 0;
  Rat series_value;
};

/// Compares oracle dimensions against the coefficients of q(t)^{-1}.
SeriesComparison check_against_series(const DimTable& table, const MatPoly& q);

enum class Side { Left, Right };

struct SocleWitness {
  long degree = 0;
  std::string element;  // rendered combination of basis paths
};

struct SocleReport {
  bool trivial_up_to_cutoff = true;
  long checked_up_to = 0;  // kernels tested in degrees <= this bound
  std::vector<SocleWitness> witnesses;
};

/// Kernel of arrow multiplication degree by degree; a witness certifies a
/// nonzero socle, triviality is only certified up to the cutoff.
SocleReport truncated_socle_trivial(const GradedPresentation& p, Side side, long D,
                                    long path_cap_per_degree = 2'000'000);

/// Truncated minimality: relation k is redundant when it lies in the ideal
/// generated by the others in its own degree. Returns the redundant indices.
std::vector<int> redundant_relations(const GradedPresentation& p,
                                     long path_cap_per_degree = 2'000'000);

}  // namespace cygrowth
