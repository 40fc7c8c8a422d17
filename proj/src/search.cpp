#include "cygrowth/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "cygrowth/cy_series.hpp"
#include "cygrowth/error.hpp"

namespace cygrowth {

namespace {

/// Untwisted spectrum gate for normal M: every eigenvalue must sit in the
/// dimension-3 region attached to zeta = 1 (deltoid for ell=3, half astroid
/// for ell=4).
bool spectrum_fits_untwisted_region(const QMat& M, long ell) {
  Eigen::MatrixXd m(M.rows(), M.cols());
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) m(i, j) = to_double(M.at(i, j));
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  for (int i = 0; i < M.rows(); ++i)
    if (!hypocycloid_contains(es.eigenvalues()(i), static_cast<int>(ell), {1.0, 0.0}))
      return false;
  return true;
}

WeightedQuiver quiver_from_counts(int n, const std::vector<long>& M_flat) {
  WeightedQuiver q;
  q.n_vertices = n;
  int counter = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (long k = 0; k < M_flat[static_cast<size_t>(i) * n + j]; ++k) {
        Arrow a;
        a.id = "x" + std::to_string(++counter);
        a.source = i + 1;
        a.target = j + 1;
        a.weight = 1;
        q.arrows.push_back(a);
      }
  return q;
}

bool is_canonical(int n, const std::vector<long>& M) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    bool smaller = false, bigger = false;
    for (int i = 0; i < n && !smaller && !bigger; ++i)
      for (int j = 0; j < n; ++j) {
        long a = M[static_cast<size_t>(perm[i]) * n + perm[j]];
        long b = M[static_cast<size_t>(i) * n + j];
        if (a < b) {
          smaller = true;
          break;
        }
        if (a > b) {
          bigger = true;
          break;
        }
      }
    if (smaller) return false;
  }
  return true;
}

std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

QMat counts_matrix(int n, const std::vector<long>& M_flat) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Rat(M_flat[static_cast<size_t>(i) * n + j]);
  return m;
}

int thread_budget(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CYGROWTH_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// q(t) assembled straight from the matrix data; avoids per-candidate quiver
/// plumbing on the enumeration hot path.
MatPoly assemble_q(int d, const QMat& M, const QMat& P, long ell) {
  int n = M.rows();
  MatPoly q = MatPoly::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (M.at(i, j) != 0) q.at(i, j) -= Poly::term(M.at(i, j), 1);
      if (d == 2 && P.at(i, j) != 0) q.at(i, j) += Poly::term(P.at(i, j), ell);
      if (d == 3 && P.at(i, j) != 0) q.at(i, j) -= Poly::term(P.at(i, j), ell);
    }
  if (d == 3) {
    QMat PMt = P * M.transpose();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (PMt.at(i, j) != 0) q.at(i, j) += Poly::term(PMt.at(i, j), ell - 1);
  }
  return q;
}

bool rho_is_two(const QMat& M) {
  if (!positive_integer_eigenvector(M, 2)) return false;
  Eigen::MatrixXd m(M.rows(), M.cols());
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) m(i, j) = to_double(M.at(i, j));
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  for (int i = 0; i < M.rows(); ++i)
    if (std::abs(es.eigenvalues()(i)) > 2.0 + 1e-8) return false;
  return true;
}

void push_hit(std::vector<SearchHit>& sink, int n, const std::vector<long>& M_flat,
              const std::vector<int>& mu, long ell, const Poly& det_q,
              const CyclotomicFactorization& fact) {
  SearchHit hit;
  hit.n = n;
  hit.M_flat = M_flat;
  hit.mu = mu;
  hit.ell = ell;
  hit.det_str = det_q.str();
  hit.factorization = fact.str();
  sink.push_back(std::move(hit));
}

void evaluate_quiver(const SearchBounds& bounds, int n, const std::vector<long>& M_flat,
                     std::vector<SearchHit>& sink) {
  WeightedQuiver quiver = quiver_from_counts(n, M_flat);
  if (!is_strongly_connected(quiver)) return;
  QMat M = counts_matrix(n, M_flat);
  bool normal = M * M.transpose() == M.transpose() * M;
  bool rho2 = (bounds.dimension == 2) ? rho_is_two(M) : false;
  bool fits3 = false, fits4 = false;
  if (bounds.dimension == 3 && normal) {
    // Finite growth in the normal case pins rho(M) = 6 - ell with a positive
    // eigenvector (the region caps rho from above, the Perron eigenvalue
    // supplies the floor), exactly like the rho = 2 gate in dimension 2.
    fits3 = spectrum_fits_untwisted_region(M, 3) && positive_integer_eigenvector(M, 3).has_value();
    fits4 = spectrum_fits_untwisted_region(M, 4) && positive_integer_eigenvector(M, 2).has_value();
  }

  for (auto& mu : permutations_of(n)) {
    QMat P = permutation_matrix(mu);
    if (bounds.dimension == 2) {
      // Mesh data needs M = P M^T; weight-1 arrows pin the AS-index to 2, and
      // finite growth needs the spectral radius to be exactly 2.
      if (!rho2) continue;
      if (!(M == P * M.transpose())) continue;
      MatPoly q = assemble_q(2, M, P, 2);
      Poly d = det(q);
      auto fact = all_roots_are_roots_of_unity(d);
      if (!fact.all_roots_of_unity) continue;
      push_hit(sink, n, M_flat, mu, 2, d, fact);
    } else if (bounds.dimension == 3) {
      if (!(P * M == M * P)) continue;
      for (long ell = std::max<long>(3, bounds.ell_min); ell <= bounds.ell_max; ++ell) {
        if (normal) {
          // Normal incidence matrices admit the eigenvalue-region criterion;
          // beyond ell = 4 no finite-growth datum exists there.
          if (ell != 3 && ell != 4) continue;
          if (!(ell == 3 ? fits3 : fits4)) continue;
        }
        MatPoly q = assemble_q(3, M, P, ell);
        Poly d = det(q);
        auto fact = all_roots_are_roots_of_unity(d);
        if (!fact.all_roots_of_unity) continue;
        push_hit(sink, n, M_flat, mu, ell, d, fact);
      }
    } else if (bounds.dimension == 1) {
      // Dimension 1 admits exactly the directed cycles; mu must follow the arrows.
      bool cycle = true;
      for (int i = 0; i < n && cycle; ++i)
        for (int j = 0; j < n; ++j) {
          Rat expect = (mu[i] - 1 == j) ? Rat(1) : Rat(0);
          if (M.at(i, j) != expect) {
            cycle = false;
            break;
          }
        }
      if (!cycle) continue;
      MatPoly q = MatPoly::identity(n);
      for (int i = 0; i < n; ++i) q.at(i, mu[i] - 1) -= Poly::t();
      Poly d = det(q);
      auto fact = all_roots_are_roots_of_unity(d);
      push_hit(sink, n, M_flat, mu, 1, d, fact);
    }
  }
}

}  // namespace

std::string SearchHit::key() const {
  std::ostringstream os;
  os << n << "|";
  for (long v : M_flat) os << v << ",";
  os << "|";
  for (int v : mu) os << v << ",";
  os << "|" << ell;
  return os.str();
}

std::vector<SearchHit> search_candidates(const SearchBounds& bounds) {
  if (bounds.max_vertices < 1 || bounds.max_vertices > 4 || bounds.max_mult < 0 ||
      bounds.max_mult > 6)
    throw Error(Errc::BoundsTooLarge, "search is limited to <= 4 vertices, multiplicity <= 6");
  if (bounds.dimension < 1 || bounds.dimension > 3)
    throw Error(Errc::BoundsTooLarge, "search dimension must be 1, 2 or 3");

  // Collect canonical candidate matrices first so work can be sharded.
  std::vector<std::pair<int, std::vector<long>>> candidates;
  for (int n = 1; n <= bounds.max_vertices; ++n) {
    std::vector<long> M(static_cast<size_t>(n) * n, 0);
    long cells = static_cast<long>(n) * n;
    while (true) {
      if (is_canonical(n, M)) candidates.push_back({n, M});
      long c = 0;
      while (c < cells) {
        if (++M[c] <= bounds.max_mult) break;
        M[c] = 0;
        ++c;
      }
      if (c == cells) break;
    }
  }

  int workers = thread_budget(bounds.threads);
  std::vector<SearchHit> hits;
  std::mutex sink_mu;
  std::atomic<size_t> next{0};
  auto work = [&]() {
    std::vector<SearchHit> local;
    while (true) {
      size_t idx = next.fetch_add(1);
      if (idx >= candidates.size()) break;
      evaluate_quiver(bounds, candidates[idx].first, candidates[idx].second, local);
    }
    std::lock_guard<std::mutex> lock(sink_mu);
    for (auto& h : local) hits.push_back(std::move(h));
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  std::sort(hits.begin(), hits.end(),
            [](const SearchHit& a, const SearchHit& b) { return a.key() < b.key(); });
  hits.erase(std::unique(hits.begin(), hits.end(),
                         [](const SearchHit& a, const SearchHit& b) { return a.key() == b.key(); }),
             hits.end());
  return hits;
}

}  // namespace cygrowth
