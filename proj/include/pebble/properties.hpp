#pragma once

// Two-pebbling, odd two-pebbling, and the 4 f_4(G) < 14 f(G) - 2(m - 5) test.
//
// Two pebbles must reach every vertex from any distribution with p > 2f - k
// (resp. p > 2f - r). Being 2-solvable is preserved by adding pebbles, and a
// violating distribution can be shrunk one pebble at a time:
//   removing from a vertex holding >= 2 lowers p+k by 1, from a singleton by 2;
//   removing changes p+r by 0 or -2, and two removals at one vertex give -2.
// So a violation exists iff one exists with p+k in {2f+1, 2f+2}
// (resp. p+r = 2f+2, since p+r is always even). Only that frontier is searched.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pebble/distribution.hpp"
#include "pebble/graph.hpp"
#include "pebble/number.hpp"
#include "pebble/symmetry.hpp"

namespace pebble {

enum class Property { two_pebbling, odd_two_pebbling, f4_inequality };

inline std::string to_string(Property p) {
  switch (p) {
    case Property::two_pebbling: return "two-pebbling";
    case Property::odd_two_pebbling: return "odd-two-pebbling";
    case Property::f4_inequality: return "f4-inequality";
  }
  return "?";
}

struct PropertyReport {
  Property property = Property::two_pebbling;
  bool holds = true;
  std::optional<Distribution> counterexample;  // fails the 2-pebble demand at counterexample_target
  std::optional<VertexId> counterexample_target;
  std::uint64_t f_value = 0;
  std::optional<std::uint64_t> f4_value;  // f4-inequality only
  std::uint64_t search_size = 0;
};

struct PropertyOptions {
  NumberOptions number;
  std::optional<std::uint64_t> known_f;  // verified f(G); computed when absent
};

namespace detail {

/// Vectors of length n with sum p and exactly k nonzero entries, ascending lex.
template <typename Fn>
bool with_support_size(std::vector<Count>& c, std::size_t i, std::uint64_t p, std::uint64_t k, Fn& fn) {
  const std::size_t left = c.size() - i;
  if (k > left || p < k || (k == 0 && p > 0)) return true;
  if (left == 0) return fn(std::span<const Count>(c));
  // zero first, then 1..p in ascending order
  if (k < left && !with_support_size(c, i + 1, p, k, fn)) return false;
  for (std::uint64_t x = 1; x <= p && k > 0; ++x) {
    c[i] = static_cast<Count>(x);
    bool go = with_support_size(c, i + 1, p - x, k - 1, fn);
    c[i] = 0;
    if (!go) return false;
  }
  return true;
}

/// Vectors of length n with sum p and exactly r odd entries, ascending lex.
template <typename Fn>
bool with_odd_count(std::vector<Count>& c, std::size_t i, std::uint64_t p, std::uint64_t r, Fn& fn) {
  const std::size_t left = c.size() - i;
  if (r > left || p < r || (p - r) % 2 != 0) return true;
  if (left == 0) return p == 0 ? fn(std::span<const Count>(c)) : true;
  for (std::uint64_t x = 0; x <= p; ++x) {
    const std::uint64_t odd = x & 1u;
    if (odd > r) continue;
    c[i] = static_cast<Count>(x);
    bool go = with_odd_count(c, i + 1, p - x, r - odd, fn);
    c[i] = 0;
    if (!go) return false;
  }
  return true;
}

inline std::vector<VertexId> target_reps(const Graph& g, const NumberOptions& opts) {
  if (opts.use_symmetry) return PermutationGroup::of(g, opts.group_cap).orbit_representatives();
  std::vector<VertexId> all;
  for (VertexId v = 0; v < g.order(); ++v) all.push_back(v);
  return all;
}

inline std::uint64_t resolve_f(const Graph& g, const PropertyOptions& opts) {
  return opts.known_f ? *opts.known_f : pebbling_number(g, 1, NumberMode::discover(), opts.number).value;
}

/// Runs `frontier(group, visit)` for every target orbit representative and
/// checks the two-pebble demand on each visited distribution.
template <typename Frontier>
PropertyReport run_two_pebble_search(const Graph& g, Property prop, std::uint64_t f, const NumberOptions& opts,
                                     Frontier&& frontier) {
  PropertyReport rep;
  rep.property = prop;
  rep.f_value = f;
  for (VertexId v : target_reps(g, opts)) {
    const auto group = target_group(g, std::span<const VertexId>(&v, 1), opts);
    BatchChecker checker(demand_checkers(g, DemandVector::single(g.order(), v, 2), opts.jobs), g.order());
    frontier(group, [&](std::span<const Count> c) { return !group.is_canonical(c) || checker.push(c); });
    checker.finish();
    rep.search_size += checker.checked;
    if (checker.failure) {
      rep.holds = false;
      rep.counterexample = Distribution(*checker.failure);
      rep.counterexample_target = v;
      return rep;
    }
  }
  return rep;
}

}  // namespace detail

inline PropertyReport check_two_pebbling(const Graph& g, const PropertyOptions& opts = {}) {
  const std::uint64_t f = detail::resolve_f(g, opts);
  const std::size_t n = g.order();
  return detail::run_two_pebble_search(g, Property::two_pebbling, f, opts.number, [&](const auto&, auto&& visit) {
    std::vector<Count> c(n, 0);
    for (std::uint64_t k = 1; k <= n; ++k)
      for (std::uint64_t sum : {2 * f + 1, 2 * f + 2}) {
        if (sum < 2 * k) continue;  // p >= k
        if (!detail::with_support_size(c, 0, sum - k, k, visit)) return;
      }
  });
}

inline PropertyReport check_odd_two_pebbling(const Graph& g, const PropertyOptions& opts = {}) {
  const std::uint64_t f = detail::resolve_f(g, opts);
  const std::size_t n = g.order();
  return detail::run_two_pebble_search(g, Property::odd_two_pebbling, f, opts.number, [&](const auto&, auto&& visit) {
    std::vector<Count> c(n, 0);
    for (std::uint64_t r = 0; r <= n && r <= f + 1; ++r)
      if (!detail::with_odd_count(c, 0, 2 * f + 2 - r, r, visit)) return;
  });
}

/// Unreduced check: every distribution with p <= 2f+2 and p > 2f - k (or r).
inline PropertyReport check_property_direct(const Graph& g, Property prop, const PropertyOptions& opts = {}) {
  if (prop == Property::f4_inequality) throw PebbleError("direct check applies to the two-pebbling properties");
  const std::uint64_t f = detail::resolve_f(g, opts);
  return detail::run_two_pebble_search(g, prop, f, opts.number, [&](const auto&, auto&& visit) {
    for (std::uint64_t p = 0; p <= 2 * f + 2; ++p) {
      bool go = for_each_distribution(g.order(), p, [&](std::span<const Count> c) {
        auto s = stats(Distribution(c));
        const std::uint64_t slack = prop == Property::two_pebbling ? s.k : s.r;
        if (p + slack <= 2 * f) return true;
        return visit(c);
      });
      if (!go) return;
    }
  });
}

inline PropertyReport check_f4_inequality(const Graph& g, const PropertyOptions& opts = {}) {
  const std::uint64_t m = g.order();
  if (m < 5) throw PebbleError("inequality needs a graph with at least 5 vertices");
  PropertyReport rep;
  rep.property = Property::f4_inequality;
  rep.f_value = detail::resolve_f(g, opts);
  const auto f4 = pebbling_number(g, 4, NumberMode::discover(), opts.number);
  rep.f4_value = f4.value;
  rep.search_size = f4.checked;
  const auto lhs = static_cast<std::int64_t>(4 * f4.value);
  const auto rhs = static_cast<std::int64_t>(14 * rep.f_value) - 2 * (static_cast<std::int64_t>(m) - 5);
  rep.holds = lhs < rhs;
  return rep;
}

inline PropertyReport check_property(const Graph& g, Property prop, const PropertyOptions& opts = {}) {
  switch (prop) {
    case Property::two_pebbling: return check_two_pebbling(g, opts);
    case Property::odd_two_pebbling: return check_odd_two_pebbling(g, opts);
    case Property::f4_inequality: return check_f4_inequality(g, opts);
  }
  throw PebbleError("unknown property");
}

}  // namespace pebble
