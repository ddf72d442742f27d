#pragma once

// Immutable simple graphs for the pebbling workbench.
//
// Vertex indexing is deterministic for every family:
//   path P_m       x1..xm          -> 0..m-1
//   cycle C_n      v0..v(n-1)      -> 0..n-1
//   middle M(C_n)  v_i -> 2i, u_i -> 2i+1 (u_i subdivides v_i v_(i+1))
//   middle M(G)    originals keep 0..n-1, the vertex on edge e gets n+e
//   product G x H  (a,b) -> a*|H|+b
//   T_k            x1..xk -> 0..k-1, y1..y(k-1) -> k..2k-2

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pebble {

using VertexId = std::uint32_t;
using Permutation = std::vector<VertexId>;
using Edge = std::pair<VertexId, VertexId>;

class PebbleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GraphError : public PebbleError {
 public:
  using PebbleError::PebbleError;
};

class Graph {
 public:
  Graph(std::vector<std::vector<VertexId>> adjacency, std::vector<std::string> labels,
        std::string family, std::vector<Permutation> sym_gens = {})
      : adjacency_(std::move(adjacency)),
        labels_(std::move(labels)),
        family_(std::move(family)),
        sym_gens_(std::move(sym_gens)) {
    validate();
  }

  /// Builds a graph from an edge list; adjacency is sorted and symmetrised.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels,
                          std::string family, std::vector<Permutation> sym_gens = {}) {
    std::vector<std::vector<VertexId>> adj(n);
    for (auto [a, b] : edges) {
      if (a >= n || b >= n) throw GraphError("edge endpoint out of range");
      if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    for (auto& nb : adj) {
      std::sort(nb.begin(), nb.end());
      if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) throw GraphError("parallel edge");
    }
    return Graph(std::move(adj), std::move(labels), std::move(family), std::move(sym_gens));
  }

  std::size_t order() const { return adjacency_.size(); }
  std::size_t edge_count() const {
    std::size_t deg = 0;
    for (const auto& nb : adjacency_) deg += nb.size();
    return deg / 2;
  }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  bool adjacent(VertexId a, VertexId b) const {
    const auto& nb = adjacency_.at(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  /// Edges (a, b) with a < b in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (VertexId a = 0; a < order(); ++a)
      for (VertexId b : adjacency_[a])
        if (a < b) out.emplace_back(a, b);
    return out;
  }

  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<VertexId> find_label(std::string_view name) const {
    for (VertexId v = 0; v < order(); ++v)
      if (labels_[v] == name) return v;
    return std::nullopt;
  }
  VertexId vertex(std::string_view name) const {
    if (auto v = find_label(name)) return *v;
    throw GraphError("unknown vertex label '" + std::string(name) + "'");
  }

  const std::string& family() const { return family_; }
  const std::vector<Permutation>& sym_gens() const { return sym_gens_; }

  Graph without_symmetry() const { return Graph(adjacency_, labels_, family_, {}); }
  Graph with_family(std::string family) const { return Graph(adjacency_, labels_, std::move(family), sym_gens_); }

  bool is_tree() const { return edge_count() + 1 == order(); }

 private:
  void validate() const {
    const std::size_t n = adjacency_.size();
    if (n == 0) throw GraphError("graph must have at least one vertex");
    if (labels_.size() != n) throw GraphError("label count does not match vertex count");
    for (VertexId v = 0; v < n; ++v) {
      const auto& nb = adjacency_[v];
      if (!std::is_sorted(nb.begin(), nb.end())) throw GraphError("adjacency lists must be sorted");
      if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) throw GraphError("parallel edge");
      for (VertexId w : nb) {
        if (w >= n) throw GraphError("neighbor index out of range");
        if (w == v) throw GraphError("self-loop at vertex " + std::to_string(v));
        if (!std::binary_search(adjacency_[w].begin(), adjacency_[w].end(), v))
          throw GraphError("adjacency is not symmetric");
      }
    }
    {
      auto sorted = labels_;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw GraphError("vertex labels must be unique");
    }
    std::vector<bool> seen(n, false);
    std::vector<VertexId> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : adjacency_[v])
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached != n) throw GraphError("graph is disconnected");
    for (const auto& perm : sym_gens_) {
      if (perm.size() != n) throw GraphError("symmetry generator has wrong length");
      std::vector<bool> hit(n, false);
      for (VertexId image : perm) {
        if (image >= n || hit[image]) throw GraphError("symmetry generator is not a permutation");
        hit[image] = true;
      }
      for (VertexId a = 0; a < n; ++a)
        for (VertexId b : adjacency_[a])
          if (!std::binary_search(adjacency_[perm[a]].begin(), adjacency_[perm[a]].end(), perm[b]))
            throw GraphError("symmetry generator does not preserve edges");
    }
  }

  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::string> labels_;
  std::string family_;
  std::vector<Permutation> sym_gens_;
};

// ---------------------------------------------------------------------------
// Base families

inline Graph make_path(std::size_t m) {
  if (m < 1) throw GraphError("path length must be >= 1");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (VertexId i = 0; i < m; ++i) {
    labels.push_back("x" + std::to_string(i + 1));
    if (i + 1 < m) edges.emplace_back(i, i + 1);
  }
  std::vector<Permutation> gens;
  if (m >= 2) {
    Permutation flip(m);
    for (VertexId i = 0; i < m; ++i) flip[i] = static_cast<VertexId>(m - 1 - i);
    gens.push_back(std::move(flip));
  }
  return Graph::from_edges(m, edges, std::move(labels), "path:" + std::to_string(m), std::move(gens));
}

inline Graph make_cycle(std::size_t n) {
  if (n < 3) throw GraphError("cycle length must be >= 3");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  Permutation rotate(n), reflect(n);
  for (VertexId i = 0; i < n; ++i) {
    labels.push_back("v" + std::to_string(i));
    edges.emplace_back(i, static_cast<VertexId>((i + 1) % n));
    rotate[i] = static_cast<VertexId>((i + 1) % n);
    reflect[i] = static_cast<VertexId>((n - i) % n);
  }
  return Graph::from_edges(n, edges, std::move(labels), "cycle:" + std::to_string(n),
                           {std::move(rotate), std::move(reflect)});
}

inline Graph make_complete(std::size_t n) {
  if (n < 1) throw GraphError("complete graph order must be >= 1");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (VertexId i = 0; i < n; ++i) {
    labels.push_back("k" + std::to_string(i));
    for (VertexId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation swap01(n), shift(n);
    for (VertexId i = 0; i < n; ++i) {
      swap01[i] = i;
      shift[i] = static_cast<VertexId>((i + 1) % n);
    }
    std::swap(swap01[0], swap01[1]);
    gens.push_back(std::move(swap01));
    if (n > 2) gens.push_back(std::move(shift));
  }
  return Graph::from_edges(n, edges, std::move(labels), "complete:" + std::to_string(n), std::move(gens));
}

inline std::string render_parents(std::span<const long> parents) {
  std::string s = "[";
  for (std::size_t i = 0; i < parents.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parents[i]);
  }
  return s + "]";
}

/// Tree from a parent array: exactly one entry is -1 (the root); labels t0..t(n-1).
inline Graph make_tree(std::span<const long> parents) {
  const std::size_t n = parents.size();
  if (n < 1) throw GraphError("tree needs at least one vertex");
  std::size_t roots = 0;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    if (parents[i] == -1) {
      ++roots;
      continue;
    }
    if (parents[i] < 0 || static_cast<std::size_t>(parents[i]) >= n)
      throw GraphError("tree parent index out of range");
    edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(parents[i]));
  }
  if (roots != 1) throw GraphError("tree parent array must contain exactly one root (-1)");
  // every vertex must reach the root without revisiting
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t v = i, steps = 0;
    while (parents[v] != -1) {
      v = static_cast<std::size_t>(parents[v]);
      if (++steps > n) throw GraphError("tree parent array is cyclic");
    }
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("t" + std::to_string(i));
  return Graph::from_edges(n, edges, std::move(labels), "tree:" + render_parents(parents));
}

/// Edge-list text: "n m" followed by m lines "u w" (0-based). Labels are v0..v(n-1).
inline Graph read_edge_list(std::istream& in, std::string family = "edgelist") {
  long n = -1, m = -1;
  if (!(in >> n >> m) || n < 1 || m < 0) throw GraphError("edge list: bad header, expected \"n m\"");
  std::vector<Edge> edges;
  for (long i = 0; i < m; ++i) {
    long a = -1, b = -1;
    if (!(in >> a >> b)) throw GraphError("edge list: expected " + std::to_string(m) + " edges");
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw GraphError("edge list: endpoint out of range on edge " + std::to_string(i));
    edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
  }
  std::vector<std::string> labels;
  for (long i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  return Graph::from_edges(static_cast<std::size_t>(n), edges, std::move(labels), std::move(family));
}

// ---------------------------------------------------------------------------
// Derived constructions

namespace detail {

/// True when g is C_n with edges i ~ i+1 (mod n) in index order.
inline bool is_indexed_cycle(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) return false;
  for (VertexId i = 0; i < n; ++i)
    if (g.degree(i) != 2 || !g.adjacent(i, static_cast<VertexId>((i + 1) % n))) return false;
  return true;
}

inline std::vector<Permutation> permute_generators(const std::vector<Permutation>& gens,
                                                   const std::vector<Edge>& edges, std::size_t n,
                                                   const auto& original_index, const auto& edge_index) {
  std::vector<Permutation> out;
  std::map<Edge, std::size_t> lookup;
  for (std::size_t e = 0; e < edges.size(); ++e) lookup[edges[e]] = e;
  for (const auto& sigma : gens) {
    Permutation p(n + edges.size());
    for (VertexId v = 0; v < n; ++v) p[original_index(v)] = original_index(sigma[v]);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      VertexId a = sigma[edges[e].first], b = sigma[edges[e].second];
      if (a > b) std::swap(a, b);
      p[edge_index(e)] = edge_index(lookup.at({a, b}));
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace detail

/// Subdivides every edge and joins subdivision vertices of edges sharing an endpoint.
/// Symmetry generators of g are carried over through their action on edges.
inline Graph middle_graph(const Graph& g) {
  const std::size_t n = g.order();
  if (g.edge_count() == 0) throw GraphError("middle graph needs at least one edge");

  if (detail::is_indexed_cycle(g)) {
    // edge e_i = v_i v_(i+1), its subdivision vertex is u_i
    std::vector<Edge> cyc_edges;
    for (VertexId i = 0; i < n; ++i) {
      VertexId j = static_cast<VertexId>((i + 1) % n);
      cyc_edges.push_back({std::min(i, j), std::max(i, j)});
    }
    std::vector<Edge> edges;
    std::vector<std::string> labels(2 * n);
    for (VertexId i = 0; i < n; ++i) {
      VertexId next = static_cast<VertexId>((i + 1) % n);
      labels[2 * i] = g.label(i);
      labels[2 * i + 1] = "u" + std::to_string(i);
      edges.emplace_back(2 * i, 2 * i + 1);
      edges.emplace_back(2 * i + 1, 2 * next);
      edges.emplace_back(2 * i + 1, 2 * next + 1);
    }
    // cyc_edges[e] is {i, i+1} except the wrap edge which sorts as {0, n-1}
    auto gens = detail::permute_generators(
        g.sym_gens(), cyc_edges, n, [](VertexId v) { return 2 * v; },
        [&](std::size_t e) { return static_cast<VertexId>(2 * e + 1); });
    return Graph::from_edges(2 * n, edges, std::move(labels), "middle(" + g.family() + ")", std::move(gens));
  }

  const auto old_edges = g.edges();
  std::vector<Edge> edges;
  std::vector<std::string> labels = g.labels();
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t e = 0; e < old_edges.size(); ++e) {
    auto [a, b] = old_edges[e];
    VertexId mid = static_cast<VertexId>(n + e);
    std::string name = "u" + std::to_string(e);
    while (std::find(labels.begin(), labels.end(), name) != labels.end()) name += '\'';
    labels.push_back(std::move(name));
    edges.emplace_back(a, mid);
    edges.emplace_back(mid, b);
    incident[a].push_back(e);
    incident[b].push_back(e);
  }
  for (VertexId v = 0; v < n; ++v)
    for (std::size_t i = 0; i < incident[v].size(); ++i)
      for (std::size_t j = i + 1; j < incident[v].size(); ++j)
        edges.emplace_back(static_cast<VertexId>(n + incident[v][i]), static_cast<VertexId>(n + incident[v][j]));
  // two edges share at most one endpoint in a simple graph, so no duplicates arise
  auto gens = detail::permute_generators(
      g.sym_gens(), old_edges, n, [](VertexId v) { return v; },
      [n](std::size_t e) { return static_cast<VertexId>(n + e); });
  return Graph::from_edges(n + old_edges.size(), edges, std::move(labels), "middle(" + g.family() + ")",
                           std::move(gens));
}

inline Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t ng = g.order(), nh = h.order();
  auto idx = [nh](VertexId a, VertexId b) { return static_cast<VertexId>(a * nh + b); };
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (VertexId a = 0; a < ng; ++a)
    for (VertexId b = 0; b < nh; ++b) labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
  for (auto [a, c] : g.edges())
    for (VertexId b = 0; b < nh; ++b) edges.emplace_back(idx(a, b), idx(c, b));
  for (auto [b, d] : h.edges())
    for (VertexId a = 0; a < ng; ++a) edges.emplace_back(idx(a, b), idx(a, d));
  std::vector<Permutation> gens;
  for (const auto& sigma : g.sym_gens()) {
    Permutation p(ng * nh);
    for (VertexId a = 0; a < ng; ++a)
      for (VertexId b = 0; b < nh; ++b) p[idx(a, b)] = idx(sigma[a], b);
    gens.push_back(std::move(p));
  }
  for (const auto& tau : h.sym_gens()) {
    Permutation p(ng * nh);
    for (VertexId a = 0; a < ng; ++a)
      for (VertexId b = 0; b < nh; ++b) p[idx(a, b)] = idx(a, tau[b]);
    gens.push_back(std::move(p));
  }
  return Graph::from_edges(ng * nh, edges, std::move(labels), "prod(" + g.family() + "," + h.family() + ")",
                           std::move(gens));
}

/// Copy of g without the listed edges; symmetry generators are dropped.
inline Graph remove_edges(const Graph& g, std::span<const Edge> removed, std::string family) {
  std::vector<Edge> keep;
  for (auto e : g.edges()) {
    bool drop = false;
    for (auto [a, b] : removed)
      if ((e.first == a && e.second == b) || (e.first == b && e.second == a)) drop = true;
    if (!drop) keep.push_back(e);
  }
  for (auto [a, b] : removed)
    if (!g.adjacent(a, b)) throw GraphError("cannot remove missing edge " + g.label(a) + g.label(b));
  return Graph::from_edges(g.order(), keep, g.labels(), std::move(family));
}

/// The edge named v_i v_i in the M* construction names no edge of M(C_2n).
/// Both readings below are buildable; the default is the one whose rooted
/// pebbling number at v0 matches 2^(n+1) + 2n - 2 (checked in the tests).
enum class MStarReading {
  own_subdivision,      // v_i u_i
  previous_subdivision  // u_(i-1) v_i
};

inline constexpr MStarReading default_mstar_reading = MStarReading::own_subdivision;

inline VertexId middle_v(std::size_t i) { return static_cast<VertexId>(2 * i); }
inline VertexId middle_u(std::size_t i) { return static_cast<VertexId>(2 * i + 1); }

inline std::vector<Edge> mstar_removed_edges(std::size_t n, MStarReading reading) {
  const std::size_t len = 2 * n;
  std::vector<Edge> out;
  for (std::size_t i = 1; i <= n - 1; ++i)
    out.push_back(reading == MStarReading::own_subdivision ? Edge{middle_v(i), middle_u(i)}
                                                           : Edge{middle_u(i - 1), middle_v(i)});
  out.push_back({middle_u(n - 1), middle_u(n)});
  for (std::size_t j = n; j <= 2 * n - 2; ++j) out.push_back({middle_u(j), middle_v((j + 1) % len)});
  return out;
}

inline Graph make_mstar(std::size_t n, MStarReading reading = default_mstar_reading) {
  if (n < 2) throw GraphError("M* needs n >= 2");
  auto removed = mstar_removed_edges(n, reading);
  std::string family = "mstar:" + std::to_string(n);
  if (reading != default_mstar_reading) family += "/alt";
  return remove_edges(middle_graph(make_cycle(2 * n)), removed, std::move(family));
}

inline std::vector<Edge> mprime_removed_edges(std::size_t n) {
  const std::size_t len = 2 * n;
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 2 <= n; ++i) out.push_back({middle_u(i), middle_v(i + 1)});
  for (std::size_t j = n + 2; j <= 2 * n - 1; ++j) out.push_back({middle_u(j), middle_v(j)});
  out.push_back({middle_u(n), middle_v(n)});
  out.push_back({middle_u(n), middle_v((n + 1) % len)});
  out.push_back({middle_u(0), middle_v(0)});
  return out;
}

inline Graph make_mprime(std::size_t n) {
  if (n < 2) throw GraphError("M' needs n >= 2");
  return remove_edges(middle_graph(make_cycle(2 * n)), mprime_removed_edges(n), "mprime:" + std::to_string(n));
}

/// Path x1..xk with a pendant y_i at x_i for 1 <= i <= k-1.
inline Graph make_tk(std::size_t k) {
  if (k < 2) throw GraphError("T_k needs k >= 2");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= k; ++i) labels.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i < k; ++i) labels.push_back("y" + std::to_string(i));
  for (VertexId i = 0; i + 1 < k; ++i) {
    edges.emplace_back(i, i + 1);
    edges.emplace_back(i, static_cast<VertexId>(k + i));
  }
  return Graph::from_edges(2 * k - 1, edges, std::move(labels), "tk:" + std::to_string(k));
}

/// Subgraph induced by `keep` (in the given order); throws if disconnected.
inline Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep, std::string family) {
  std::vector<long> pos(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<long>(i);
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (VertexId v : keep) labels.push_back(g.label(v));
  for (auto [a, b] : g.edges())
    if (pos[a] >= 0 && pos[b] >= 0) edges.emplace_back(static_cast<VertexId>(pos[a]), static_cast<VertexId>(pos[b]));
  return Graph::from_edges(keep.size(), edges, std::move(labels), std::move(family));
}

// ---------------------------------------------------------------------------
// Distances

class DistanceTable {
 public:
  explicit DistanceTable(const Graph& g) : n_(g.order()), dist_(n_ * n_, 0) {
    for (VertexId s = 0; s < n_; ++s) {
      std::vector<int> d(n_, -1);
      std::queue<VertexId> q;
      d[s] = 0;
      q.push(s);
      while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId w : g.neighbors(v))
          if (d[w] < 0) {
            d[w] = d[v] + 1;
            q.push(w);
          }
      }
      for (VertexId t = 0; t < n_; ++t) dist_[s * n_ + t] = static_cast<unsigned>(d[t]);
    }
  }

  unsigned operator()(VertexId a, VertexId b) const { return dist_[a * n_ + b]; }
  unsigned eccentricity(VertexId v) const {
    unsigned e = 0;
    for (VertexId w = 0; w < n_; ++w) e = std::max(e, (*this)(v, w));
    return e;
  }
  unsigned diameter() const {
    unsigned d = 0;
    for (VertexId v = 0; v < n_; ++v) d = std::max(d, eccentricity(v));
    return d;
  }
  std::size_t order() const { return n_; }

 private:
  std::size_t n_;
  std::vector<unsigned> dist_;
};

inline DistanceTable distances(const Graph& g) { return DistanceTable(g); }

}  // namespace pebble
