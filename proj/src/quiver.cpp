#include "cygrowth/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cygrowth/error.hpp"

namespace cygrowth {

int WeightedQuiver::arrow_index(const std::string& id) const {
  for (size_t k = 0; k < arrows.size(); ++k)
    if (arrows[k].id == id) return static_cast<int>(k);
  return -1;
}

const Arrow& WeightedQuiver::arrow(const std::string& id) const {
  int k = arrow_index(id);
  if (k < 0) throw Error(Errc::InvalidQuiver, "unknown arrow id: " + id);
  return arrows[k];
}

std::vector<int> CYDatum::mu_inverse() const {
  std::vector<int> inv(mu.size(), 0);
  for (size_t i = 0; i < mu.size(); ++i) inv[mu[i] - 1] = static_cast<int>(i) + 1;
  return inv;
}

namespace {

bool zero_weight_subquiver_has_cycle(const WeightedQuiver& q) {
  int n = q.n_vertices;
  std::vector<std::vector<int>> adj(n);
  for (auto& a : q.arrows)
    if (a.weight == 0 && a.source >= 1 && a.source <= n && a.target >= 1 && a.target <= n)
      adj[a.source - 1].push_back(a.target - 1);
  std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
  std::vector<std::pair<int, size_t>> stack;
  for (int s = 0; s < n; ++s) {
    if (state[s] != 0) continue;
    stack.push_back({s, 0});
    state[s] = 1;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx < adj[v].size()) {
        int w = adj[v][idx++];
        if (state[w] == 1) return true;
        if (state[w] == 0) {
          state[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

}  // namespace

std::vector<std::string> validate_quiver(const WeightedQuiver& q) {
  std::vector<std::string> diags;
  if (q.n_vertices < 1) diags.push_back("quiver must have at least one vertex");
  std::set<std::string> ids;
  for (auto& a : q.arrows) {
    if (a.id.empty()) diags.push_back("arrow with empty id");
    if (!ids.insert(a.id).second) diags.push_back("duplicate arrow id: " + a.id);
    if (a.source < 1 || a.source > q.n_vertices)
      diags.push_back("arrow " + a.id + ": source out of range");
    if (a.target < 1 || a.target > q.n_vertices)
      diags.push_back("arrow " + a.id + ": target out of range");
    if (a.weight < 0) diags.push_back("arrow " + a.id + ": negative weight");
  }
  if (diags.empty() && zero_weight_subquiver_has_cycle(q))
    diags.push_back("Q0 has a cycle (path algebra is not locally finite)");
  return diags;
}

bool is_locally_finite(const WeightedQuiver& q) {
  return !zero_weight_subquiver_has_cycle(q);
}

IncidenceData incidence(const WeightedQuiver& q) {
  int n = q.n_vertices;
  IncidenceData d;
  d.N = MatPoly(n);
  d.M = QMat(n, n);
  for (auto& a : q.arrows) {
    d.N.at(a.source - 1, a.target - 1) += Poly::t(a.weight);
    d.M.at(a.source - 1, a.target - 1) += 1;
  }
  return d;
}

namespace {

std::vector<std::vector<int>> adjacency(const WeightedQuiver& q, bool undirected) {
  std::vector<std::vector<int>> adj(q.n_vertices);
  for (auto& a : q.arrows) {
    adj[a.source - 1].push_back(a.target - 1);
    if (undirected) adj[a.target - 1].push_back(a.source - 1);
  }
  return adj;
}

int reachable_count(const std::vector<std::vector<int>>& adj, int start) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<int> stack{start};
  seen[start] = true;
  int count = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++count;
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return count;
}

}  // namespace

bool is_connected(const WeightedQuiver& q) {
  if (q.n_vertices == 0) return false;
  return reachable_count(adjacency(q, true), 0) == q.n_vertices;
}

bool is_strongly_connected(const WeightedQuiver& q) {
  if (q.n_vertices == 0) return false;
  auto fwd = adjacency(q, false);
  if (reachable_count(fwd, 0) != q.n_vertices) return false;
  std::vector<std::vector<int>> rev(q.n_vertices);
  for (auto& a : q.arrows) rev[a.target - 1].push_back(a.source - 1);
  return reachable_count(rev, 0) == q.n_vertices;
}

std::vector<long> canonical_key(const WeightedQuiver& q) {
  int n = q.n_vertices;
  if (n > 8) throw Error(Errc::BoundsTooLarge, "canonical form limited to 8 vertices");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<long> best;
  do {
    std::vector<long> key;
    key.reserve(static_cast<size_t>(n) * n * 2);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::vector<long> weights;
        for (auto& a : q.arrows)
          if (perm[a.source - 1] == i && perm[a.target - 1] == j) weights.push_back(a.weight);
        std::sort(weights.begin(), weights.end());
        for (long w : weights) key.push_back(w);
        key.push_back(-1);  // block separator
      }
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

QMat permutation_matrix(const std::vector<int>& mu) {
  int n = static_cast<int>(mu.size());
  QMat p(n, n);
  for (int i = 0; i < n; ++i) p.at(i, mu[i] - 1) = 1;
  return p;
}

MatPoly p_t_l(const CYDatum& cy) {
  int n = static_cast<int>(cy.mu.size());
  MatPoly m(n);
  for (int i = 0; i < n; ++i) m.at(i, cy.mu[i] - 1) = Poly::t(cy.ell[cy.mu[i] - 1]);
  return m;
}

std::vector<std::string> validate_cy_datum(const WeightedQuiver& q, const CYDatum& cy) {
  std::vector<std::string> diags;
  int n = q.n_vertices;
  if (cy.dimension < 1 || cy.dimension > 3)
    diags.push_back("cy.dimension must be 1, 2 or 3");
  if (static_cast<int>(cy.mu.size()) != n) diags.push_back("cy.mu must list all vertices");
  if (static_cast<int>(cy.ell.size()) != n) diags.push_back("cy.ell must list all vertices");
  if (static_cast<int>(cy.mu.size()) == n) {
    std::vector<bool> seen(n, false);
    for (int v : cy.mu) {
      if (v < 1 || v > n) {
        diags.push_back("cy.mu contains an out-of-range vertex");
        break;
      }
      if (seen[v - 1]) {
        diags.push_back("cy.mu is not a bijection");
        break;
      }
      seen[v - 1] = true;
    }
  }
  if (diags.empty() && (cy.dimension == 2 || cy.dimension == 3)) {
    bool all_weight_one = true;
    for (auto& a : q.arrows)
      if (a.weight != 1) all_weight_one = false;
    if (all_weight_one && !q.arrows.empty() && is_connected(q)) {
      for (long l : cy.ell)
        if (l != cy.ell[0]) {
          diags.push_back("connected weight-1 quiver requires a uniform AS-index");
          break;
        }
    }
  }
  return diags;
}

}  // namespace cygrowth
