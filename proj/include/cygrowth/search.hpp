#pragma once

#include <string>
#include <vector>

#include "cygrowth/growth.hpp"
#include "cygrowth/quiver.hpp"

namespace cygrowth {

struct SearchBounds {
  int max_vertices = 3;
  int max_mult = 3;
  int dimension = 3;
  long ell_min = 3;
  long ell_max = 4;
  int threads = 0;  // 0 = from CYGROWTH_THREADS or hardware
};

struct SearchHit {
  int n = 0;
  std::vector<long> M_flat;  // row-major arrow counts (weight-1 quiver)
  std::vector<int> mu;
  long ell = 0;
  std::string det_str;
  std::string factorization;

  std::string key() const;  // sort/dedupe key
};

/// Enumerates canonical strongly connected weight-1 quivers within bounds and
/// keeps the (quiver, P, ell) data passing the finite-growth gates:
///   d=2: mesh compatibility M = P M^T, cyclotomic det q, rho(M) = 2
///   d=3: P M = M P, cyclotomic det q, and for normal M the whole spectrum
///        must fit the untwisted dimension-3 region (ell in {3,4} only)
/// Output is deterministic: sorted by key, deduplicated.
std::vector<SearchHit> search_candidates(const SearchBounds& bounds);

}  // namespace cygrowth
