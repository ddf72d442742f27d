#pragma once

// Finite permutation groups generated by a graph's symmetry generators, and
// lexicographically minimal representatives of pebble distributions under them.

#include <algorithm>
#include <iostream>
#include <set>
#include <span>
#include <vector>

#include "pebble/graph.hpp"

namespace pebble {

inline constexpr std::size_t default_group_cap = 10000;

class PermutationGroup {
 public:
  static PermutationGroup trivial(std::size_t n) {
    PermutationGroup grp;
    grp.degree_ = n;
    grp.elements_.push_back(identity(n));
    grp.build_inverses();
    return grp;
  }

  /// Closure of the generators. When the group would exceed `cap` elements the
  /// trivial group is returned and truncated() reports true.
  static PermutationGroup generate(std::size_t n, const std::vector<Permutation>& gens,
                                   std::size_t cap = default_group_cap, bool warn = true) {
    std::set<Permutation> seen{identity(n)};
    std::vector<Permutation> frontier{identity(n)};
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& elem : frontier)
        for (const auto& gen : gens) {
          Permutation prod(n);
          for (std::size_t v = 0; v < n; ++v) prod[v] = gen[elem[v]];
          if (seen.insert(prod).second) {
            if (seen.size() > cap) {
              if (warn)
                std::clog << "warning: symmetry group exceeds " << cap << " elements; symmetry disabled\n";
              auto grp = trivial(n);
              grp.truncated_ = true;
              return grp;
            }
            next.push_back(std::move(prod));
          }
        }
      frontier = std::move(next);
    }
    PermutationGroup grp;
    grp.degree_ = n;
    grp.elements_.assign(seen.begin(), seen.end());
    grp.build_inverses();
    return grp;
  }

  static PermutationGroup of(const Graph& g, std::size_t cap = default_group_cap) {
    return generate(g.order(), g.sym_gens(), cap);
  }

  std::size_t size() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  bool truncated() const { return truncated_; }
  const std::vector<Permutation>& elements() const { return elements_; }

  /// Elements fixing every vertex in `fixed`.
  PermutationGroup stabilizer(std::span<const VertexId> fixed) const {
    PermutationGroup grp;
    grp.degree_ = degree_;
    grp.truncated_ = truncated_;
    for (const auto& p : elements_)
      if (std::all_of(fixed.begin(), fixed.end(), [&](VertexId v) { return p[v] == v; })) grp.elements_.push_back(p);
    grp.build_inverses();
    return grp;
  }
  PermutationGroup stabilizer(VertexId v) const { return stabilizer(std::span<const VertexId>(&v, 1)); }

  /// Smallest vertex of each orbit, ascending.
  std::vector<VertexId> orbit_representatives() const {
    std::vector<VertexId> reps;
    for (VertexId v = 0; v < degree_; ++v) {
      bool minimal = std::all_of(elements_.begin(), elements_.end(), [&](const Permutation& p) { return p[v] >= v; });
      if (minimal) reps.push_back(v);
    }
    return reps;
  }

  /// Replaces `counts` with its lexicographically smallest image.
  template <typename T>
  void canonicalize(std::span<T> counts, std::vector<T>& scratch) const {
    if (elements_.size() <= 1) return;
    scratch.assign(counts.begin(), counts.end());
    for (const auto& inv : inverses_) {
      // image[pos] = original[inv[pos]]
      std::size_t pos = 0;
      while (pos < degree_ && scratch[inv[pos]] == counts[pos]) ++pos;
      if (pos < degree_ && scratch[inv[pos]] < counts[pos])
        for (; pos < degree_; ++pos) counts[pos] = scratch[inv[pos]];
    }
  }

  /// True when no image of `counts` is lexicographically smaller.
  template <typename T>
  bool is_canonical(std::span<const T> counts) const {
    for (const auto& inv : inverses_) {
      // image[pos] = counts[inv[pos]]
      bool smaller = false;
      for (std::size_t pos = 0; pos < degree_; ++pos) {
        T img = counts[inv[pos]];
        if (img != counts[pos]) {
          smaller = img < counts[pos];
          break;
        }
      }
      if (smaller) return false;
    }
    return true;
  }

 private:
  static Permutation identity(std::size_t n) {
    Permutation p(n);
    for (std::size_t v = 0; v < n; ++v) p[v] = static_cast<VertexId>(v);
    return p;
  }

  void build_inverses() {
    inverses_.clear();
    for (const auto& p : elements_) {
      Permutation inv(degree_);
      for (std::size_t v = 0; v < degree_; ++v) inv[p[v]] = static_cast<VertexId>(v);
      inverses_.push_back(std::move(inv));
    }
  }

  std::size_t degree_ = 0;
  bool truncated_ = false;
  std::vector<Permutation> elements_;
  std::vector<Permutation> inverses_;
};

}  // namespace pebble
