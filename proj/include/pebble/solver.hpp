#pragma once

// Exact solvability of a pebble distribution against a demand vector.
//
// Depth-first search over reachable distributions. Every move removes one
// pebble from the board, so the search is finite. Failed states are memoised
// by their exact count vector, and each node is pruned when some demanded
// vertex s has weight sum_u c(u) 2^-dist(u,s) below its demand. Moves are
// tried in (from, to) index order, which fixes the certificate returned.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "pebble/distribution.hpp"
#include "pebble/graph.hpp"

namespace pebble {

enum class Outcome { solvable, unsolvable };

struct Certificate {
  Outcome outcome = Outcome::unsolvable;
  std::vector<Move> moves;
  std::uint64_t explored = 0;
  bool solvable() const { return outcome == Outcome::solvable; }
};

/// Open-addressing set of fixed-width count vectors. clear() is O(1).
class StateSet {
 public:
  explicit StateSet(std::size_t width) : width_(width) { resize(1u << 10); }

  std::size_t size() const { return size_; }

  void clear() {
    size_ = 0;
    if (++generation_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0u);
      generation_ = 1;
    }
    if (stamp_.size() > (1u << 20)) resize(1u << 10);
  }

  bool contains(std::span<const Count> key) const {
    for (std::size_t slot = hash(key) & mask_;; slot = (slot + 1) & mask_) {
      if (stamp_[slot] != generation_) return false;
      if (std::equal(key.begin(), key.end(), keys_.begin() + static_cast<std::ptrdiff_t>(slot * width_))) return true;
    }
  }

  /// Returns false if the key was already present.
  bool insert(std::span<const Count> key) {
    if (2 * (size_ + 1) > stamp_.size()) resize(stamp_.size() * 2);
    return place(key);
  }

 private:
  std::uint64_t hash(std::span<const Count> key) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (Count c : key) {
      h ^= c;
      h *= 0xff51afd7ed558ccdull;
      h ^= h >> 29;
    }
    return h;
  }

  bool place(std::span<const Count> key) {
    std::size_t slot = hash(key) & mask_;
    for (;; slot = (slot + 1) & mask_) {
      if (stamp_[slot] != generation_) break;
      if (std::equal(key.begin(), key.end(), keys_.begin() + static_cast<std::ptrdiff_t>(slot * width_))) return false;
    }
    stamp_[slot] = generation_;
    std::copy(key.begin(), key.end(), keys_.begin() + static_cast<std::ptrdiff_t>(slot * width_));
    ++size_;
    return true;
  }

  void resize(std::size_t capacity) {
    std::vector<Count> old_keys = std::move(keys_);
    std::vector<std::uint32_t> old_stamp = std::move(stamp_);
    const std::uint32_t old_gen = generation_;
    keys_.assign(capacity * width_, 0);
    stamp_.assign(capacity, 0);
    mask_ = capacity - 1;
    generation_ = 1;
    size_ = 0;
    for (std::size_t slot = 0; slot < old_stamp.size(); ++slot)
      if (old_stamp[slot] == old_gen && old_gen != 0)
        place(std::span<const Count>(old_keys.data() + slot * width_, width_));
  }

  std::size_t width_;
  std::vector<Count> keys_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t generation_ = 1;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
};

class Solver {
 public:
  Solver(const Graph& g, DemandVector demand) : Solver(g, std::move(demand), DistanceTable(g)) {}

  Solver(const Graph& g, DemandVector demand, const DistanceTable& dist)
      : graph_(&g), demand_(std::move(demand)), targets_(demand_.support()), failed_(g.order()) {
    if (demand_.size() != g.order()) throw PebbleError("demand vector size does not match graph");
    const std::size_t n = g.order();
    for (VertexId s : targets_) {
      const unsigned ecc = dist.eccentricity(s);
      if (ecc > 100) throw PebbleError("graph diameter too large for the exact solver");
      std::vector<Wide> coef(n);
      for (VertexId u = 0; u < n; ++u) coef[u] = Wide{1} << (ecc - dist(u, s));
      coef_.push_back(std::move(coef));
      threshold_.push_back(Wide{demand_[s]} << ecc);
    }
    weight_.resize(targets_.size());
    if (targets_.size() == 1) {
      // shortest-path forest toward the single target, deepest vertices first
      const VertexId s = targets_[0];
      order_.resize(n);
      for (VertexId v = 0; v < n; ++v) order_[v] = v;
      std::stable_sort(order_.begin(), order_.end(), [&](VertexId a, VertexId b) { return dist(a, s) > dist(b, s); });
      order_.pop_back();  // s itself
      parent_low_.assign(n, s);
      parent_high_.assign(n, s);
      for (VertexId v = 0; v < n; ++v) {
        if (v == s) continue;
        bool first = true;
        for (VertexId w : g.neighbors(v))
          if (dist(w, s) + 1 == dist(v, s)) {
            if (first) parent_low_[v] = w;
            parent_high_[v] = w;
            first = false;
          }
      }
    }
  }

  const DemandVector& demand() const { return demand_; }
  std::uint64_t explored() const { return explored_; }

  /// Decision only. Tries cheap constructive checks before the exhaustive search.
  bool decide(std::span<const Count> counts) {
    load(counts);
    if (demand_.met_by(state_)) return true;
    if (!weights_sufficient()) return false;
    if (targets_.size() == 1 && (greedy(parent_low_) || greedy(parent_high_))) return true;
    failed_.clear();
    return dfs(false);
  }

  Certificate certify(const Distribution& d) {
    load(d.counts());
    moves_.clear();
    failed_.clear();
    Certificate cert;
    bool ok = dfs(true);
    cert.outcome = ok ? Outcome::solvable : Outcome::unsolvable;
    if (ok) cert.moves = moves_;
    cert.explored = explored_;
    return cert;
  }

 private:
  using Wide = unsigned __int128;

  void load(std::span<const Count> counts) {
    if (counts.size() != graph_->order()) throw PebbleError("distribution size does not match graph");
    state_.assign(counts.begin(), counts.end());
    explored_ = 0;
    for (std::size_t i = 0; i < targets_.size(); ++i) {
      Wide w = 0;
      for (std::size_t u = 0; u < state_.size(); ++u) w += coef_[i][u] * state_[u];
      weight_[i] = w;
    }
  }

  bool weights_sufficient() const {
    for (std::size_t i = 0; i < targets_.size(); ++i)
      if (weight_[i] < threshold_[i]) return false;
    return true;
  }

  bool met() const {
    for (VertexId s : targets_)
      if (state_[s] < demand_[s]) return false;
    return true;
  }

  bool greedy(const std::vector<VertexId>& parent) {
    scratch_.assign(state_.begin(), state_.end());
    for (VertexId v : order_) scratch_[parent[v]] += scratch_[v] / 2;
    return scratch_[targets_[0]] >= demand_[targets_[0]];
  }

  void apply(VertexId from, VertexId to) {
    state_[from] -= 2;
    state_[to] += 1;
    for (std::size_t i = 0; i < targets_.size(); ++i) weight_[i] = weight_[i] - 2 * coef_[i][from] + coef_[i][to];
  }
  void undo(VertexId from, VertexId to) {
    state_[from] += 2;
    state_[to] -= 1;
    for (std::size_t i = 0; i < targets_.size(); ++i) weight_[i] = weight_[i] + 2 * coef_[i][from] - coef_[i][to];
  }

  bool dfs(bool record) {
    ++explored_;
    if (met()) return true;
    if (!weights_sufficient()) return false;
    if (failed_.contains(state_)) return false;
    const std::size_t n = state_.size();
    for (VertexId from = 0; from < n; ++from) {
      if (state_[from] < 2) continue;
      for (VertexId to : graph_->neighbors(from)) {
        apply(from, to);
        if (record) moves_.push_back({from, to});
        if (dfs(record)) {
          undo(from, to);
          return true;
        }
        if (record) moves_.pop_back();
        undo(from, to);
      }
    }
    failed_.insert(state_);
    return false;
  }

  const Graph* graph_;
  DemandVector demand_;
  std::vector<VertexId> targets_;
  std::vector<std::vector<Wide>> coef_;
  std::vector<Wide> threshold_;
  std::vector<Wide> weight_;
  std::vector<VertexId> order_, parent_low_, parent_high_;
  std::vector<Count> state_;
  std::vector<std::uint64_t> scratch_;
  std::vector<Move> moves_;
  StateSet failed_;
  std::uint64_t explored_ = 0;
};

/// One-shot solvability query with a replayable certificate.
inline Certificate solvable(const Graph& g, const Distribution& d, const DemandVector& demand) {
  Solver solver(g, demand);
  return solver.certify(d);
}

/// Replays a certificate, throwing MoveError on an illegal move; returns the final state.
inline Distribution replay(const Graph& g, const Distribution& d, std::span<const Move> moves) {
  Distribution cur = d;
  for (const Move& m : moves) cur = apply_move(g, cur, m.from, m.to);
  return cur;
}

}  // namespace pebble
