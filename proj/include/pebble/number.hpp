#pragma once

// Rooted and global (t-)pebbling numbers.
//
// Unsolvable distributions for a fixed demand are closed under removing
// pebbles, so f_t(G, v) - 1 is the largest size of an unsolvable distribution.
// The default strategy grows that family level by level: level p holds the
// orbit representatives of unsolvable distributions of size p, and level p+1
// is found by adding one pebble to each member and keeping the unsolvable
// children. The first empty level is f_t(G, v).
//
// Strategy::enumerate instead walks p upward from a lower bound and checks
// every orbit representative of each size, stopping at the first size where
// all are solvable. Both strategies report the same witness: the
// lexicographically smallest unsolvable distribution of size f - 1.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pebble/distribution.hpp"
#include "pebble/enumerate.hpp"
#include "pebble/graph.hpp"
#include "pebble/parallel.hpp"
#include "pebble/solver.hpp"
#include "pebble/symmetry.hpp"

namespace pebble {

enum class Strategy { closure, enumerate };

struct NumberOptions {
  bool use_symmetry = true;
  Strategy strategy = Strategy::closure;
  unsigned jobs = 0;  // 0: hardware concurrency
  std::size_t group_cap = default_group_cap;
};

class NumberMode {
 public:
  static NumberMode discover() { return NumberMode{}; }
  static NumberMode verify(std::uint64_t expected) {
    NumberMode m;
    m.expected_ = expected;
    return m;
  }
  bool verifying() const { return expected_.has_value(); }
  std::uint64_t expected() const { return expected_.value(); }

 private:
  std::optional<std::uint64_t> expected_;
};

/// Thrown by verify mode. `counterexample` is an unsolvable distribution of the
/// expected size when the true value is larger; when it is smaller, it is the
/// largest unsolvable distribution found (size below expected - 1).
class NumberMismatch : public PebbleError {
 public:
  NumberMismatch(const std::string& what, Distribution counterexample, VertexId target)
      : PebbleError(what), counterexample(std::move(counterexample)), target(target) {}
  Distribution counterexample;
  VertexId target;
};

struct RootedNumber {
  std::uint64_t value = 0;
  VertexId target = 0;
  unsigned t = 1;
  Distribution witness;       // unsolvable, size value - 1
  std::uint64_t checked = 0;  // solvability queries issued
};

struct PebblingNumber {
  std::uint64_t value = 0;
  VertexId argmax = 0;
  Distribution witness;
  std::uint64_t checked = 0;
  std::vector<RootedNumber> per_root;  // one per vertex-orbit representative
};

namespace detail {

inline PermutationGroup target_group(const Graph& g, std::span<const VertexId> fixed, const NumberOptions& opts) {
  if (!opts.use_symmetry) return PermutationGroup::trivial(g.order());
  return PermutationGroup::of(g, opts.group_cap).stabilizer(fixed);
}

/// Flat storage of equal-width count vectors.
struct Level {
  std::size_t width = 0;
  std::vector<Count> data;
  std::size_t size() const { return width == 0 ? 0 : data.size() / width; }
  std::span<const Count> row(std::size_t i) const { return {data.data() + i * width, width}; }
  void push(std::span<const Count> c) { data.insert(data.end(), c.begin(), c.end()); }
  std::span<const Count> lex_min() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < size(); ++i) {
      auto a = row(i), b = row(best);
      if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())) best = i;
    }
    return row(best);
  }
};

class SolverPool {
 public:
  SolverPool(const Graph& g, const DemandVector& demand, unsigned jobs) : graph_(&g), demand_(demand), dist_(g) {
    for (unsigned w = 0; w < std::max(1u, jobs == 0 ? default_jobs() : jobs); ++w)
      solvers_.emplace_back(g, demand_, dist_);
  }
  Solver& operator[](unsigned worker) { return solvers_.at(worker); }
  unsigned size() const { return static_cast<unsigned>(solvers_.size()); }

 private:
  const Graph* graph_;
  DemandVector demand_;
  DistanceTable dist_;
  std::vector<Solver> solvers_;
};

/// Result of growing the unsolvable family for one demand.
struct ClosureOutcome {
  std::uint64_t max_unsolvable_size = 0;  // size of the last non-empty level
  std::vector<Count> witness;             // lex-min member of that level
  std::uint64_t checked = 0;
  bool stopped = false;                   // reached stop_after with a non-empty level
};

/// Grows levels until one is empty, or until level `stop_after` has been built.
inline ClosureOutcome grow_unsolvable(const Graph& g, const DemandVector& demand, const PermutationGroup& group,
                                      unsigned jobs, std::optional<std::uint64_t> stop_after = std::nullopt) {
  const std::size_t n = g.order();
  SolverPool pool(g, demand, jobs);
  ClosureOutcome out;
  Level level{n, std::vector<Count>(n, 0)};
  if (demand.met_by(level.row(0))) throw PebbleError("demand is met by the empty distribution");
  std::vector<Count> child(n), scratch;
  for (std::uint64_t size = 0;; ++size) {
    if (stop_after && size == *stop_after) {
      out.max_unsolvable_size = size;
      auto w = level.lex_min();
      out.witness.assign(w.begin(), w.end());
      out.stopped = true;
      return out;
    }
    if (size + 1 > std::numeric_limits<Count>::max()) throw PebbleError("pebble count exceeds 65535");
    Level candidates{n, {}};
    StateSet seen(n);
    for (std::size_t i = 0; i < level.size(); ++i) {
      auto parent = level.row(i);
      for (VertexId u = 0; u < n; ++u) {
        std::copy(parent.begin(), parent.end(), child.begin());
        ++child[u];
        group.canonicalize(std::span<Count>(child), scratch);
        if (seen.insert(child)) candidates.push(child);
      }
    }
    const std::size_t m = candidates.size();
    std::vector<char> unsolvable(m, 0);
    parallel_for(m, pool.size(), [&](unsigned worker, std::size_t i) {
      unsolvable[i] = !pool[worker].decide(candidates.row(i));
    });
    out.checked += m;
    Level next{n, {}};
    for (std::size_t i = 0; i < m; ++i)
      if (unsolvable[i]) next.push(candidates.row(i));
    if (next.size() == 0) {
      out.max_unsolvable_size = size;
      auto w = level.lex_min();
      out.witness.assign(w.begin(), w.end());
      return out;
    }
    level = std::move(next);
  }
}

/// Streams count vectors through per-worker predicates in fixed-size batches
/// and records the first vector (in stream order) that fails.
template <typename Check>
class BatchChecker {
 public:
  BatchChecker(std::vector<Check> workers, std::size_t width, std::size_t batch_size = 4096)
      : workers_(std::move(workers)), batch_{width, {}}, batch_size_(batch_size) {}

  /// Returns false once a failure has been recorded.
  bool push(std::span<const Count> c) {
    batch_.push(c);
    return batch_.size() < batch_size_ || flush();
  }

  bool finish() { return batch_.size() == 0 ? !failure : flush(); }

  std::optional<std::vector<Count>> failure;
  std::uint64_t checked = 0;

 private:
  bool flush() {
    const std::size_t m = batch_.size();
    std::vector<char> ok(m, 1);
    parallel_for(m, static_cast<unsigned>(workers_.size()),
                 [&](unsigned worker, std::size_t i) { ok[i] = workers_[worker](batch_.row(i)); });
    for (std::size_t i = 0; i < m; ++i) {
      ++checked;
      if (!ok[i]) {
        auto r = batch_.row(i);
        failure = std::vector<Count>(r.begin(), r.end());
        break;
      }
    }
    batch_.data.clear();
    return !failure;
  }

  std::vector<Check> workers_;
  Level batch_;
  std::size_t batch_size_;
};

/// Per-worker demand checks sharing one distance table.
inline auto demand_checkers(const Graph& g, const DemandVector& demand, unsigned jobs) {
  const DistanceTable dist(g);
  std::vector<Solver> solvers;
  for (unsigned w = 0; w < std::max(1u, jobs == 0 ? default_jobs() : jobs); ++w) solvers.emplace_back(g, demand, dist);
  struct Check {
    Solver solver;
    bool operator()(std::span<const Count> c) { return solver.decide(c); }
  };
  std::vector<Check> out;
  for (auto& s : solvers) out.push_back(Check{std::move(s)});
  return out;
}

/// First unsolvable orbit representative of size p in lex order, if any.
inline std::optional<std::vector<Count>> first_unsolvable(const Graph& g, const DemandVector& demand,
                                                          const PermutationGroup& group, std::uint64_t p,
                                                          unsigned jobs, std::uint64_t& checked) {
  BatchChecker checker(demand_checkers(g, demand, jobs), g.order());
  for_each_canonical(group, p, [&](std::span<const Count> c) { return checker.push(c); });
  checker.finish();
  checked += checker.checked;
  return checker.failure;
}

inline std::uint64_t pow2(unsigned e) {
  if (e >= 63) throw PebbleError("eccentricity too large");
  return std::uint64_t{1} << e;
}

}  // namespace detail

/// f_t(g, v): least p such that every size-p distribution can put t pebbles on v.
inline RootedNumber rooted_number(const Graph& g, VertexId v, unsigned t = 1,
                                  NumberMode mode = NumberMode::discover(), const NumberOptions& opts = {}) {
  if (v >= g.order()) throw PebbleError("target vertex out of range");
  if (t < 1) throw PebbleError("t must be positive");
  const auto demand = DemandVector::single(g.order(), v, static_cast<Count>(t));
  const auto group = detail::target_group(g, std::span<const VertexId>(&v, 1), opts);
  RootedNumber res;
  res.target = v;
  res.t = t;

  auto mismatch = [&](const std::string& why, std::span<const Count> c) {
    return NumberMismatch("f_" + std::to_string(t) + "(" + g.family() + ", " + g.label(v) + "): " + why,
                          Distribution(c), v);
  };

  if (opts.strategy == Strategy::closure) {
    if (mode.verifying()) {
      const std::uint64_t expected = mode.expected();
      if (expected == 0) throw mismatch("value is at least 1", std::vector<Count>(g.order(), 0));
      auto out = detail::grow_unsolvable(g, demand, group, opts.jobs, expected);
      res.checked = out.checked;
      if (out.stopped) throw mismatch("an unsolvable distribution of size " + std::to_string(expected) + " exists",
                                      out.witness);
      if (out.max_unsolvable_size + 1 != expected)
        throw mismatch("every distribution of size " + std::to_string(expected - 1) + " is solvable", out.witness);
      res.value = expected;
      res.witness = Distribution(out.witness);
      return res;
    }
    auto out = detail::grow_unsolvable(g, demand, group, opts.jobs);
    res.value = out.max_unsolvable_size + 1;
    res.witness = Distribution(out.witness);
    res.checked = out.checked;
    return res;
  }

  // enumeration strategy
  if (mode.verifying()) {
    const std::uint64_t expected = mode.expected();
    if (expected == 0) throw mismatch("value is at least 1", std::vector<Count>(g.order(), 0));
    auto below = detail::first_unsolvable(g, demand, group, expected - 1, opts.jobs, res.checked);
    if (!below) throw mismatch("every distribution of size " + std::to_string(expected - 1) + " is solvable",
                               std::vector<Count>(g.order(), 0));
    auto at = detail::first_unsolvable(g, demand, group, expected, opts.jobs, res.checked);
    if (at) throw mismatch("an unsolvable distribution of size " + std::to_string(expected) + " exists", *at);
    res.value = expected;
    res.witness = Distribution(*below);
    return res;
  }
  const auto dist = distances(g);
  const std::uint64_t lower = t == 1 ? std::max<std::uint64_t>(g.order(), detail::pow2(dist.eccentricity(v)))
                                     : g.order();
  // size lower-1 always holds an unsolvable distribution: a pile of 2^ecc - 1
  // on a farthest vertex, or one pebble on every vertex except v
  std::uint64_t p = lower - 1;
  auto witness = detail::first_unsolvable(g, demand, group, p, opts.jobs, res.checked);
  if (!witness) throw PebbleError("internal: lower bound witness missing");
  for (++p;; ++p) {
    auto w = detail::first_unsolvable(g, demand, group, p, opts.jobs, res.checked);
    if (!w) break;
    witness = std::move(w);
  }
  res.value = p;
  res.witness = Distribution(*witness);
  return res;
}

/// f_t(g): maximum of f_t(g, v) over one representative per vertex orbit.
inline PebblingNumber pebbling_number(const Graph& g, unsigned t = 1, NumberMode mode = NumberMode::discover(),
                                      const NumberOptions& opts = {}) {
  std::vector<VertexId> reps;
  if (opts.use_symmetry)
    reps = PermutationGroup::of(g, opts.group_cap).orbit_representatives();
  else
    for (VertexId v = 0; v < g.order(); ++v) reps.push_back(v);

  PebblingNumber res;
  if (mode.verifying()) {
    // every root must be at most `expected`, and some root must reach it
    const std::uint64_t expected = mode.expected();
    bool attained = false;
    for (VertexId v : reps) {
      const auto demand = DemandVector::single(g.order(), v, static_cast<Count>(t));
      const auto group = detail::target_group(g, std::span<const VertexId>(&v, 1), opts);
      RootedNumber r;
      r.target = v;
      r.t = t;
      if (opts.strategy == Strategy::closure) {
        auto out = detail::grow_unsolvable(g, demand, group, opts.jobs, expected);
        r.checked = out.checked;
        if (out.stopped)
          throw NumberMismatch("f_" + std::to_string(t) + "(" + g.family() + ") exceeds " + std::to_string(expected) +
                                   " at " + g.label(v),
                               Distribution(out.witness), v);
        r.value = out.max_unsolvable_size + 1;
        r.witness = Distribution(out.witness);
      } else {
        auto at = detail::first_unsolvable(g, demand, group, expected, opts.jobs, r.checked);
        if (at)
          throw NumberMismatch("f_" + std::to_string(t) + "(" + g.family() + ") exceeds " + std::to_string(expected) +
                                   " at " + g.label(v),
                               Distribution(*at), v);
        r = rooted_number(g, v, t, NumberMode::discover(), opts);
      }
      res.checked += r.checked;
      if (r.value == expected && !attained) {
        attained = true;
        res.argmax = v;
        res.witness = r.witness;
      }
      res.per_root.push_back(std::move(r));
    }
    if (!attained)
      throw NumberMismatch("f_" + std::to_string(t) + "(" + g.family() + ") is below " + std::to_string(expected),
                           Distribution(g.order()), reps.front());
    res.value = expected;
    return res;
  }
  for (VertexId v : reps) {
    auto r = rooted_number(g, v, t, NumberMode::discover(), opts);
    res.checked += r.checked;
    if (res.per_root.empty() || r.value > res.value) {
      res.value = r.value;
      res.argmax = v;
      res.witness = r.witness;
    }
    res.per_root.push_back(std::move(r));
  }
  return res;
}

}  // namespace pebble
