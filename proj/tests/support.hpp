#pragma once

// Independent oracles for the test suites. They work on plain adjacency
// lists and sets of states and never call the library's relational algebra.

#include <deque>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "kad/domain.hpp"
#include "kad/models/rel_model.hpp"
#include "kad/models/relation.hpp"

namespace kad::testing {

using StateSet = std::set<int>;  // 1-based

inline StateSet states_of(const Relation& test) {
  StateSet out;
  for (Eigen::Index i = 0; i < test.size(); ++i) {
    if (test(i, i)) out.insert(static_cast<int>(i) + 1);
  }
  return out;
}

inline Relation test_of(int n, const StateSet& s) {
  Relation r(n);
  for (int x : s) r.set(x - 1, x - 1);
  return r;
}

inline std::vector<std::vector<int>> successors(const Relation& r) {
  const auto n = r.size();
  std::vector<std::vector<int>> adj(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (r(i, j)) adj[i].push_back(static_cast<int>(j));
    }
  }
  return adj;
}

/// States from which some target is reachable (reverse breadth-first search).
inline StateSet reverse_bfs(const Relation& r, const StateSet& targets) {
  const auto n = static_cast<int>(r.size());
  std::vector<std::vector<int>> pred(n);
  const auto adj = successors(r);
  for (int i = 0; i < n; ++i) {
    for (int j : adj[i]) pred[j].push_back(i);
  }
  std::vector<char> seen(n, 0);
  std::deque<int> queue;
  for (int t : targets) {
    seen[t - 1] = 1;
    queue.push_back(t - 1);
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int u : pred[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        queue.push_back(u);
      }
    }
  }
  StateSet out;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) out.insert(i + 1);
  }
  return out;
}

/// Depth-first search for a directed cycle (self-loops included).
inline bool has_cycle(const Relation& r) {
  const auto adj = successors(r);
  std::vector<int> colour(adj.size(), 0);
  std::function<bool(int)> visit = [&](int v) {
    colour[v] = 1;
    for (int w : adj[v]) {
      if (colour[w] == 1 || (colour[w] == 0 && visit(w))) return true;
    }
    colour[v] = 2;
    return false;
  };
  for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
    if (colour[v] == 0 && visit(v)) return true;
  }
  return false;
}

/// Union of R^0 .. R^n by explicit pair composition.
inline std::set<std::pair<int, int>> union_of_powers(const Relation& r, bool include_identity = true) {
  const int n = static_cast<int>(r.size());
  std::set<std::pair<int, int>> base;
  for (const auto& p : r.pairs()) base.insert(p);
  std::set<std::pair<int, int>> power;
  std::set<std::pair<int, int>> acc;
  if (include_identity) {
    for (int i = 1; i <= n; ++i) power.insert({i, i});
  } else {
    power = base;
  }
  for (int k = 0; k <= n; ++k) {
    acc.insert(power.begin(), power.end());
    std::set<std::pair<int, int>> next;
    for (const auto& [x, y] : power) {
      for (const auto& [u, v] : base) {
        if (y == u) next.insert({x, v});
      }
    }
    power = std::move(next);
  }
  return acc;
}

/// States all of whose successors lie in p.
inline StateSet wlp_oracle(const Relation& r, const StateSet& p) {
  const auto adj = successors(r);
  StateSet out;
  for (int i = 0; i < static_cast<int>(adj.size()); ++i) {
    bool ok = true;
    for (int j : adj[i]) ok = ok && p.count(j + 1);
    if (ok) out.insert(i + 1);
  }
  return out;
}

inline Relation random_digraph(int n, std::mt19937_64& rng) {
  const double density = std::uniform_real_distribution<double>(0.05, 0.5)(rng);
  return random_relation(n, density, rng);
}

inline StateSet random_states(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.3);
  StateSet s;
  for (int i = 1; i <= n; ++i) {
    if (coin(rng)) s.insert(i);
  }
  return s;
}

/// rel_domain(3) takes a moment to build; share it within a test binary.
inline const DomainStructure& rel3() {
  static const DomainStructure d = rel_domain(3);
  return d;
}

inline const DomainStructure& rel2() {
  static const DomainStructure d = rel_domain(2);
  return d;
}

}  // namespace kad::testing
