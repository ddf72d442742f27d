#pragma once

// Closed-form pebbling numbers: trees via maximum path partitions, cycles, and
// middle graphs of even cycles.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "pebble/graph.hpp"

namespace pebble {

/// Edge-disjoint directed paths covering a rooted tree, longest first.
/// paths[i] runs from its far end to the vertex where it meets the root side;
/// sizes[i] is its edge count.
struct PathPartition {
  std::vector<std::uint64_t> sizes;
  std::vector<std::vector<VertexId>> paths;
};

/// Majorisation order on nonincreasing size sequences: the first differing
/// entry decides; a proper prefix counts as smaller.
inline bool majorizes(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end()) || a == b;
}

namespace detail {

struct RootedTree {
  std::vector<long> parent;
  std::vector<std::vector<VertexId>> children;
  std::vector<std::uint64_t> height;  // longest downward path, in edges
};

inline RootedTree root_tree(const Graph& tree, VertexId root) {
  if (!tree.is_tree()) throw GraphError(tree.family() + " is not a tree");
  if (root >= tree.order()) throw GraphError("root out of range");
  const std::size_t n = tree.order();
  RootedTree rt{std::vector<long>(n, -2), std::vector<std::vector<VertexId>>(n), std::vector<std::uint64_t>(n, 0)};
  std::vector<VertexId> order{root};
  rt.parent[root] = -1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (VertexId w : tree.neighbors(order[i]))
      if (rt.parent[w] == -2) {
        rt.parent[w] = order[i];
        rt.children[order[i]].push_back(w);
        order.push_back(w);
      }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (VertexId c : rt.children[*it]) rt.height[*it] = std::max(rt.height[*it], rt.height[c] + 1);
  return rt;
}

/// Child continuing the longest path through v (ties: smallest index).
inline long best_child(const RootedTree& rt, VertexId v) {
  long best = -1;
  for (VertexId c : rt.children[v])  // children are in ascending index order
    if (best < 0 || rt.height[c] > rt.height[static_cast<VertexId>(best)]) best = c;
  return best;
}

}  // namespace detail

/// Greedy peeling: at every vertex the tallest child extends the path coming
/// down from above; each other child, and every child of the root, starts a new
/// path that descends greedily to a leaf.
inline PathPartition max_path_partition(const Graph& tree, VertexId root) {
  const auto rt = detail::root_tree(tree, root);
  struct Item {
    std::uint64_t size;
    std::vector<VertexId> path;
  };
  std::vector<Item> items;
  std::vector<VertexId> queue{root};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const VertexId w = queue[qi];
    const long cont = w == root ? -1 : detail::best_child(rt, w);
    for (VertexId c : rt.children[w]) {
      queue.push_back(c);
      if (static_cast<long>(c) == cont) continue;
      std::vector<VertexId> down{w, c};
      for (long next = detail::best_child(rt, c); next >= 0; next = detail::best_child(rt, static_cast<VertexId>(next)))
        down.push_back(static_cast<VertexId>(next));
      std::reverse(down.begin(), down.end());
      items.push_back({down.size() - 1, std::move(down)});
    }
  }
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.size > b.size; });
  PathPartition out;
  for (auto& it : items) {
    out.sizes.push_back(it.size);
    out.paths.push_back(std::move(it.path));
  }
  return out;
}

/// f_t(T, v) = t 2^a1 + 2^a2 + ... + 2^ar - r + 1 over the maximum path partition.
inline std::uint64_t tree_formula(const Graph& tree, VertexId root, std::uint64_t t = 1) {
  if (t < 1) throw PebbleError("t must be positive");
  const auto part = max_path_partition(tree, root);
  if (part.sizes.empty()) return t;  // single vertex
  if (part.sizes.front() >= 62) throw PebbleError("tree too deep for 64-bit formula");
  std::uint64_t value = t << part.sizes.front();
  for (std::size_t i = 1; i < part.sizes.size(); ++i) value += std::uint64_t{1} << part.sizes[i];
  return value - part.sizes.size() + 1;
}

/// f(C_n): (2^(2k+2) - 1)/3 for n = 4k+1, (2^(2k+3) + 1)/3 for n = 4k+3, 2^(n/2) for even n.
inline std::uint64_t cycle_formula(std::uint64_t n) {
  if (n < 3) throw PebbleError("cycle length must be >= 3");
  if (n > 120) throw PebbleError("cycle too long for 64-bit formula");
  if (n % 2 == 0) return std::uint64_t{1} << (n / 2);
  const std::uint64_t k = n / 4;
  if (n % 4 == 1) return ((std::uint64_t{1} << (2 * k + 2)) - 1) / 3;
  return ((std::uint64_t{1} << (2 * k + 3)) + 1) / 3;
}

/// f(M(C_2n)) and f(M*(C_2n), v0): both 2^(n+1) + 2n - 2.
inline std::uint64_t middle_cycle_formula(std::uint64_t n, bool rooted_mstar = false) {
  (void)rooted_mstar;
  if (n < 2) throw PebbleError("half cycle length must be >= 2");
  if (n > 60) throw PebbleError("cycle too long for 64-bit formula");
  return (std::uint64_t{1} << (n + 1)) + 2 * n - 2;
}

}  // namespace pebble
