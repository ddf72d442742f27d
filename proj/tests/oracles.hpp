#pragma once

// Slow reference implementations used to cross-check the engine. None of these
// call into the solver, the enumerators or the symmetry code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pebble/graph.hpp"

namespace oracle {

using pebble::Graph;
using pebble::VertexId;
using State = std::vector<int>;

/// Plain breadth-first search over every reachable state.
inline bool bfs_solvable(const Graph& g, const State& start, const State& demand) {
  auto meets = [&](const State& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] < demand[i]) return false;
    return true;
  };
  std::set<State> seen{start};
  std::queue<State> q;
  q.push(start);
  while (!q.empty()) {
    State s = q.front();
    q.pop();
    if (meets(s)) return true;
    for (VertexId a = 0; a < g.order(); ++a) {
      if (s[a] < 2) continue;
      for (VertexId b : g.neighbors(a)) {
        State next = s;
        next[a] -= 2;
        next[b] += 1;
        if (seen.insert(next).second) q.push(next);
      }
    }
  }
  return false;
}

/// All length-n vectors of non-negative integers summing to p.
inline void all_distributions(std::size_t n, int p, const std::function<void(const State&)>& fn) {
  State cur(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      cur[i] = left;
      fn(cur);
      cur[i] = 0;
      return;
    }
    for (int x = 0; x <= left; ++x) {
      cur[i] = x;
      rec(i + 1, left - x);
    }
    cur[i] = 0;
  };
  if (n > 0) rec(0, p);
}

inline std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// f_t(G, v) from the definition: smallest p with every distribution solvable.
inline int rooted_number(const Graph& g, VertexId v, int t = 1) {
  State demand(g.order(), 0);
  demand[v] = t;
  for (int p = 0;; ++p) {
    bool all = true;
    all_distributions(g.order(), p, [&](const State& s) {
      if (all && !bfs_solvable(g, s, demand)) all = false;
    });
    if (all) return p;
  }
}

inline std::set<std::pair<VertexId, VertexId>> edge_set(const Graph& g) {
  std::set<std::pair<VertexId, VertexId>> s;
  for (auto [a, b] : g.edges()) s.insert({a, b});
  return s;
}

/// Finds a bijection mapping edges onto edges, trying all n! orders.
inline bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  std::vector<VertexId> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [a, b] : g.edges())
      if (!h.adjacent(perm[a], perm[b])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool connected(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<std::vector<VertexId>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

/// One edge list per isomorphism class of connected graphs on n vertices.
inline std::vector<std::vector<std::pair<VertexId, VertexId>>> connected_graphs(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> slots;
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) slots.push_back({a, b});
  std::set<std::uint32_t> classes;
  std::vector<std::vector<std::pair<VertexId, VertexId>>> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1u) edges.push_back(slots[i]);
    if (n > 1 && !connected(n, edges)) continue;
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t best = ~0u;
    do {
      std::uint32_t code = 0;
      for (auto [a, b] : edges) {
        auto x = std::min(perm[a], perm[b]), y = std::max(perm[a], perm[b]);
        auto pos = std::find(slots.begin(), slots.end(), std::pair<VertexId, VertexId>{x, y}) - slots.begin();
        code |= 1u << pos;
      }
      best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (classes.insert(best).second) out.push_back(edges);
  }
  return out;
}

/// Prufer decoding: parent array rooted at vertex 0.
inline std::vector<long> prufer_to_parents(const std::vector<std::size_t>& seq, std::size_t n) {
  std::vector<std::size_t> degree(n, 1);
  for (auto x : seq) ++degree[x];
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto x : seq)
    for (std::size_t leaf = 0; leaf < n; ++leaf)
      if (degree[leaf] == 1) {
        edges.push_back({leaf, x});
        --degree[leaf];
        --degree[x];
        break;
      }
  std::vector<std::size_t> last;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] == 1) last.push_back(v);
  if (last.size() == 2) edges.push_back({last[0], last[1]});
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<long> parent(n, -2);
  parent[0] = -1;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : adj[v])
      if (parent[w] == -2) {
        parent[w] = static_cast<long>(v);
        stack.push_back(w);
      }
  }
  return parent;
}

inline std::string ahu(const std::vector<std::vector<std::size_t>>& adj, std::size_t v, std::size_t from) {
  std::vector<std::string> kids;
  for (auto w : adj[v])
    if (w != from) kids.push_back(ahu(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

struct RootedTree {
  std::vector<long> parents;
  std::size_t root;
};

/// One representative per isomorphism class of rooted trees on n vertices.
inline std::vector<RootedTree> rooted_trees(std::size_t n) {
  std::vector<RootedTree> out;
  if (n == 1) return {{{-1}, 0}};
  std::set<std::string> seen;
  std::vector<std::size_t> seq(n - 2, 0);
  while (true) {
    auto parents = prufer_to_parents(seq, n);
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t v = 0; v < n; ++v)
      if (parents[v] >= 0) {
        adj[v].push_back(static_cast<std::size_t>(parents[v]));
        adj[static_cast<std::size_t>(parents[v])].push_back(v);
      }
    for (std::size_t r = 0; r < n; ++r)
      if (seen.insert(ahu(adj, r, n)).second) out.push_back({parents, r});
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return out;
}

inline std::vector<long> random_tree(std::size_t n, std::mt19937_64& rng) {
  std::vector<long> parents(n, -1);
  for (std::size_t v = 1; v < n; ++v) parents[v] = static_cast<long>(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng));
  return parents;
}

/// Every decomposition of the root-directed tree edges into downward paths,
/// as nonincreasing size vectors. Each non-root vertex picks which child (if
/// any) continues the path entering it.
inline std::vector<std::vector<std::uint64_t>> all_path_partitions(const Graph& tree, VertexId root) {
  const std::size_t n = tree.order();
  std::vector<long> parent(n, -2);
  std::vector<std::vector<VertexId>> children(n);
  std::vector<VertexId> order{root};
  parent[root] = -1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (VertexId w : tree.neighbors(order[i]))
      if (parent[w] == -2) {
        parent[w] = order[i];
        children[order[i]].push_back(w);
        order.push_back(w);
      }
  std::vector<long> cont(n, -1);
  std::vector<std::vector<std::uint64_t>> out;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == order.size()) {
      // a path starts at every edge (w, c) that does not continue the path into w
      std::vector<std::uint64_t> sizes;
      for (VertexId w : order)
        for (VertexId c : children[w]) {
          if (w != root && cont[w] == static_cast<long>(c)) continue;
          std::uint64_t len = 1;
          for (long x = cont[c]; x >= 0; x = cont[static_cast<VertexId>(x)]) ++len;
          sizes.push_back(len);
        }
      std::sort(sizes.rbegin(), sizes.rend());
      out.push_back(sizes);
      return;
    }
    VertexId v = order[idx];
    cont[v] = -1;
    if (v == root || children[v].empty()) {
      rec(idx + 1);
      return;
    }
    rec(idx + 1);
    for (VertexId c : children[v]) {
      cont[v] = c;
      rec(idx + 1);
    }
    cont[v] = -1;
  };
  rec(0);
  return out;
}

}  // namespace oracle
