#pragma once

#include <compare>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "pebble/graph.hpp"

namespace pebble {

using Count = std::uint16_t;

class MoveError : public PebbleError {
 public:
  using PebbleError::PebbleError;
};

/// Pebble counts per vertex with a cached total.
class Distribution {
 public:
  Distribution() = default;
  explicit Distribution(std::size_t n) : counts_(n, 0) {}
  explicit Distribution(std::vector<Count> counts) : counts_(std::move(counts)) {
    total_ = std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
  }
  Distribution(std::span<const Count> counts) : Distribution(std::vector<Count>(counts.begin(), counts.end())) {}

  std::size_t size() const { return counts_.size(); }
  std::uint64_t total() const { return total_; }
  Count operator[](VertexId v) const { return counts_.at(v); }
  std::span<const Count> counts() const { return counts_; }

  void set(VertexId v, std::uint64_t c) {
    if (c > std::numeric_limits<Count>::max()) throw PebbleError("per-vertex pebble count exceeds 65535");
    total_ = total_ - counts_.at(v) + c;
    counts_[v] = static_cast<Count>(c);
  }
  void add(VertexId v, std::uint64_t c = 1) { set(v, counts_.at(v) + c); }

  /// Pointwise >=.
  bool covers(std::span<const Count> other) const {
    for (std::size_t v = 0; v < counts_.size(); ++v)
      if (counts_[v] < other[v]) return false;
    return true;
  }

  friend bool operator==(const Distribution& a, const Distribution& b) { return a.counts_ == b.counts_; }
  friend auto operator<=>(const Distribution& a, const Distribution& b) { return a.counts_ <=> b.counts_; }

 private:
  std::vector<Count> counts_;
  std::uint64_t total_ = 0;
};

/// Required pebbles per vertex; at least one entry is positive.
class DemandVector {
 public:
  explicit DemandVector(std::vector<Count> required) : required_(std::move(required)) {
    total_ = std::accumulate(required_.begin(), required_.end(), std::uint64_t{0});
    if (total_ == 0) throw PebbleError("demand vector must have a positive entry");
  }

  static DemandVector single(std::size_t n, VertexId target, Count t = 1) {
    std::vector<Count> req(n, 0);
    req.at(target) = t;
    return DemandVector(std::move(req));
  }

  std::size_t size() const { return required_.size(); }
  std::uint64_t total_demand() const { return total_; }
  Count operator[](VertexId v) const { return required_.at(v); }
  std::span<const Count> required() const { return required_; }

  std::vector<VertexId> support() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < required_.size(); ++v)
      if (required_[v] > 0) out.push_back(v);
    return out;
  }

  bool met_by(std::span<const Count> counts) const {
    for (std::size_t v = 0; v < required_.size(); ++v)
      if (counts[v] < required_[v]) return false;
    return true;
  }

  friend bool operator==(const DemandVector&, const DemandVector&) = default;

 private:
  std::vector<Count> required_;
  std::uint64_t total_ = 0;
};

struct DistributionStats {
  std::uint64_t p = 0;  // pebbles
  std::uint64_t k = 0;  // occupied vertices
  std::uint64_t r = 0;  // vertices holding an odd count
  friend bool operator==(const DistributionStats&, const DistributionStats&) = default;
};

inline DistributionStats stats(const Distribution& d) {
  DistributionStats s;
  for (Count c : d.counts()) {
    s.p += c;
    s.k += c > 0;
    s.r += c & 1u;
  }
  return s;
}

struct Move {
  VertexId from = 0;
  VertexId to = 0;
  friend bool operator==(const Move&, const Move&) = default;
};

inline Distribution apply_move(const Graph& g, const Distribution& d, VertexId from, VertexId to) {
  if (d.size() != g.order()) throw MoveError("distribution size does not match graph");
  if (!g.adjacent(from, to)) throw MoveError("move " + g.label(from) + "->" + g.label(to) + ": not adjacent");
  if (d[from] < 2) throw MoveError("move " + g.label(from) + "->" + g.label(to) + ": fewer than two pebbles");
  Distribution out = d;
  out.set(from, d[from] - 2u);
  out.add(to, 1);
  return out;
}

/// Exact dyadic rational numerator / 2^exponent.
struct Weight {
  unsigned __int128 numerator = 0;
  unsigned exponent = 0;

  bool at_least(std::uint64_t t) const { return numerator >= (static_cast<unsigned __int128>(t) << exponent); }
  double to_double() const { return std::ldexp(static_cast<double>(numerator), -static_cast<int>(exponent)); }
  /// Reduced "num/den" text.
  std::string str() const {
    auto num = numerator;
    unsigned e = exponent;
    while (e > 0 && (num & 1u) == 0) {
      num >>= 1;
      --e;
    }
    auto decimal = [](unsigned __int128 x) {
      std::string digits;
      do {
        digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(x % 10)));
        x /= 10;
      } while (x > 0);
      return digits;
    };
    return e == 0 ? decimal(num) : decimal(num) + "/" + decimal(static_cast<unsigned __int128>(1) << e);
  }
};

/// Sum over u of d(u) * 2^-dist(u, s). A demand of t at s is reachable only if this is >= t.
inline Weight weight_bound(const Graph& g, const Distribution& d, VertexId s, const DistanceTable& dist) {
  Weight w;
  w.exponent = dist.eccentricity(s);
  if (w.exponent > 64) throw PebbleError("eccentricity too large for exact weight");
  for (VertexId u = 0; u < g.order(); ++u)
    w.numerator += static_cast<unsigned __int128>(d[u]) << (w.exponent - dist(u, s));
  return w;
}

inline Weight weight_bound(const Graph& g, const Distribution& d, VertexId s) {
  return weight_bound(g, d, s, DistanceTable(g));
}

inline std::string render_distribution(const Graph& g, std::span<const Count> counts) {
  std::string s;
  for (VertexId v = 0; v < counts.size(); ++v)
    if (counts[v] > 0) {
      if (!s.empty()) s += ',';
      s += g.label(v) + "=" + std::to_string(counts[v]);
    }
  return s;
}

/// Parses "label=count,label=count"; labels may contain commas inside parentheses.
inline std::vector<Count> parse_counts(const Graph& g, std::string_view text) {
  std::vector<Count> counts(g.order(), 0);
  std::size_t start = 0;
  int depth = 0;
  auto flush = [&](std::size_t end) {
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) return;
    auto eq = item.rfind('=');
    if (eq == std::string_view::npos) throw PebbleError("expected label=count, got '" + std::string(item) + "'");
    VertexId v = g.vertex(item.substr(0, eq));
    std::string num(item.substr(eq + 1));
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(num, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != num.size() || value > std::numeric_limits<Count>::max())
      throw PebbleError("bad count '" + num + "' for " + g.label(v));
    counts[v] = static_cast<Count>(counts[v] + value);
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  flush(text.size());
  return counts;
}

}  // namespace pebble
