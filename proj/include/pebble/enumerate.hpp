#pragma once

// Stars-and-bars enumeration of pebble distributions in ascending
// lexicographic order, optionally reduced to one lex-minimal representative
// per orbit of a permutation group.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pebble/distribution.hpp"
#include "pebble/graph.hpp"
#include "pebble/symmetry.hpp"

namespace pebble {

/// C(n, k), saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(acc);
}

/// Number of distributions of p pebbles on n vertices.
inline std::uint64_t distribution_count(std::uint64_t n, std::uint64_t p) {
  return n == 0 ? (p == 0) : binomial(p + n - 1, n - 1);
}

namespace detail {

template <typename Fn>
bool compositions(std::vector<Count>& c, std::span<const VertexId> slots, std::size_t idx, std::uint64_t rem, Fn& fn) {
  const VertexId v = slots[idx];
  if (idx + 1 == slots.size()) {
    c[v] = static_cast<Count>(rem);
    bool go = fn(std::span<const Count>(c));
    c[v] = 0;
    return go;
  }
  for (std::uint64_t x = 0; x <= rem; ++x) {
    c[v] = static_cast<Count>(x);
    if (!compositions(c, slots, idx + 1, rem - x, fn)) {
      c[v] = 0;
      return false;
    }
  }
  c[v] = 0;
  return true;
}

}  // namespace detail

/// Calls fn(counts) for every distribution of p pebbles supported on `support`
/// (all n vertices when empty) in ascending lexicographic order. fn returns
/// false to stop; the function then returns false.
template <typename Fn>
bool for_each_distribution(std::size_t n, std::uint64_t p, Fn&& fn, std::span<const VertexId> support = {}) {
  if (p > std::numeric_limits<Count>::max()) throw PebbleError("pebble count exceeds 65535");
  std::vector<VertexId> slots;
  if (support.empty())
    for (VertexId v = 0; v < n; ++v) slots.push_back(v);
  else
    slots.assign(support.begin(), support.end());
  std::sort(slots.begin(), slots.end());
  std::vector<Count> c(n, 0);
  return detail::compositions(c, slots, 0, p, fn);
}

/// As for_each_distribution, keeping only lex-minimal orbit representatives.
template <typename Fn>
bool for_each_canonical(const PermutationGroup& group, std::uint64_t p, Fn&& fn) {
  return for_each_distribution(group.degree(), p, [&](std::span<const Count> c) {
    if (!group.is_canonical(c)) return true;
    return fn(c);
  });
}

/// Materialised orbit representatives of size-p distributions on g, under the
/// symmetry group of g (or the stabiliser of `target` when given).
inline std::vector<Distribution> enumerate_canonical(const Graph& g, std::uint64_t p,
                                                     std::optional<VertexId> target = std::nullopt) {
  auto group = PermutationGroup::of(g);
  if (target) group = group.stabilizer(*target);
  std::vector<Distribution> out;
  for_each_canonical(group, p, [&](std::span<const Count> c) {
    out.emplace_back(c);
    return true;
  });
  return out;
}

}  // namespace pebble
