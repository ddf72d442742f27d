#pragma once

// Exhaustive verification of product-graph pebbling claims on small instances:
// f(G x H) <= f(G) f(H), and the simultaneous-placement lemmas on paths,
// path fibres, and the caterpillar T_k, each taken over a factor G.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pebble/distribution.hpp"
#include "pebble/enumerate.hpp"
#include "pebble/graph.hpp"
#include "pebble/number.hpp"
#include "pebble/properties.hpp"

namespace pebble {

enum class Verdict { verified, refuted, inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::refuted: return "refuted";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct VerificationReport {
  std::string claim;
  std::vector<std::pair<std::string, std::string>> parameters;
  Verdict verdict = Verdict::verified;
  std::optional<Distribution> counterexample;
  std::string host_family;  // graph the counterexample lives on
  std::uint64_t distributions_checked = 0;
  std::chrono::milliseconds elapsed{0};
  bool verified() const { return verdict == Verdict::verified; }

  std::string parameter(const std::string& key) const {
    for (const auto& [k, v] : parameters)
      if (k == key) return v;
    return {};
  }
};

class HypothesisError : public PebbleError {
 public:
  using PebbleError::PebbleError;
};

struct HarnessOptions {
  NumberOptions number;
};

// ---------------------------------------------------------------------------
// Graham's inequality

struct GrahamMode {
  static GrahamMode exact() { return {}; }
  static GrahamMode bound_only(std::uint64_t budget) { return {true, budget}; }
  bool bound = false;
  std::uint64_t budget = 0;  // distributions; exceeding it makes the report inconclusive
};

/// exact: computes f(G), f(H), f(G x H) and compares. bound_only: checks that
/// every distribution of f(G) f(H) pebbles on G x H reaches every target.
inline VerificationReport verify_graham(const Graph& g, const Graph& h, GrahamMode mode = GrahamMode::exact(),
                                        const HarnessOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.claim = "graham f(GxH) <= f(G)f(H)";
  const auto product = cartesian_product(g, h);
  rep.host_family = product.family();
  const auto fg = pebbling_number(g, 1, NumberMode::discover(), opts.number);
  const auto fh = pebbling_number(h, 1, NumberMode::discover(), opts.number);
  const std::uint64_t bound = fg.value * fh.value;
  rep.parameters = {{"G", g.family()}, {"H", h.family()}, {"f(G)", std::to_string(fg.value)},
                    {"f(H)", std::to_string(fh.value)}, {"mode", mode.bound ? "bound" : "exact"}};
  if (!mode.bound) {
    const auto fp = pebbling_number(product, 1, NumberMode::discover(), opts.number);
    rep.parameters.emplace_back("f(GxH)", std::to_string(fp.value));
    rep.distributions_checked = fp.checked;
    if (fp.value > bound) {
      rep.verdict = Verdict::refuted;
      rep.counterexample = fp.witness;  // unsolvable, size >= f(G) f(H)
      rep.parameters.emplace_back("target", product.label(fp.argmax));
    }
  } else {
    std::vector<VertexId> reps = detail::target_reps(product, opts.number);
    for (VertexId v : reps) {
      const auto group = detail::target_group(product, std::span<const VertexId>(&v, 1), opts.number);
      detail::BatchChecker checker(
          detail::demand_checkers(product, DemandVector::single(product.order(), v, 1), opts.number.jobs),
          product.order());
      bool over_budget = false;
      std::uint64_t pushed = rep.distributions_checked;
      for_each_canonical(group, bound, [&](std::span<const Count> c) {
        if (pushed++ >= mode.budget) {
          over_budget = true;
          return false;
        }
        return checker.push(c);
      });
      checker.finish();
      rep.distributions_checked += checker.checked;
      if (checker.failure) {
        rep.verdict = Verdict::refuted;
        rep.counterexample = Distribution(*checker.failure);
        rep.parameters.emplace_back("target", product.label(v));
        break;
      }
      if (over_budget) {
        rep.verdict = Verdict::inconclusive;
        break;
      }
    }
  }
  rep.parameters.emplace_back("holds", rep.verdict == Verdict::verified   ? "true"
                                       : rep.verdict == Verdict::refuted ? "false"
                                                                         : "unknown");
  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return rep;
}

// ---------------------------------------------------------------------------
// Simultaneous-placement covers

enum class CoverLemma { even_path, odd_path, full_path, end_fibre };

inline std::string to_string(CoverLemma id) {
  switch (id) {
    case CoverLemma::even_path: return "even-path";
    case CoverLemma::odd_path: return "odd-path";
    case CoverLemma::full_path: return "full-path";
    case CoverLemma::end_fibre: return "end-fibre";
  }
  return "?";
}

/// Host graph, pebble count, path positions to cover (1-based) and the
/// optional fibre the pebbles are confined to, for one cover instance.
struct CoverInstance {
  std::size_t path_length = 0;
  std::uint64_t pebbles = 0;
  std::vector<std::size_t> targets;
  std::optional<std::size_t> fibre;
};

inline CoverInstance cover_instance(CoverLemma id, std::uint64_t k, std::uint64_t f) {
  CoverInstance ci;
  auto pow2 = [](std::uint64_t e) {
    if (e >= 62) throw PebbleError("cover parameter too large");
    return std::uint64_t{1} << e;
  };
  switch (id) {
    case CoverLemma::even_path:  // P_2k, (2 + 8 + ... + 2^(2k-1)) f, targets x1, x3, ..., x(2k-1)
      if (k < 1) throw PebbleError("even-path cover needs k >= 1");
      ci.path_length = 2 * k;
      for (std::uint64_t j = 1; j <= k; ++j) ci.pebbles += pow2(2 * j - 1);
      for (std::uint64_t i = 1; i <= 2 * k - 1; i += 2) ci.targets.push_back(i);
      break;
    case CoverLemma::odd_path:  // P_(2k+1), (4 + 16 + ... + 2^(2k)) f, targets x1, x3, ..., x(2k-1)
      if (k < 1) throw PebbleError("odd-path cover needs k >= 1");
      ci.path_length = 2 * k + 1;
      for (std::uint64_t j = 1; j <= k; ++j) ci.pebbles += pow2(2 * j);
      for (std::uint64_t i = 1; i <= 2 * k - 1; i += 2) ci.targets.push_back(i);
      break;
    case CoverLemma::full_path:  // P_k, (2^k - 1) f, every x_i
      if (k < 1) throw PebbleError("full-path cover needs k >= 1");
      ci.path_length = k;
      ci.pebbles = pow2(k) - 1;
      for (std::uint64_t i = 1; i <= k; ++i) ci.targets.push_back(i);
      break;
    case CoverLemma::end_fibre:  // pebbles only on x_k x G, (2^k - 2) f, targets x1..x(k-1)
      if (k < 2) throw PebbleError("end-fibre cover needs k >= 2");
      ci.path_length = k;
      ci.pebbles = pow2(k) - 2;
      for (std::uint64_t i = 1; i < k; ++i) ci.targets.push_back(i);
      ci.fibre = k;
      break;
  }
  ci.pebbles *= f;
  return ci;
}

namespace detail {

inline std::uint64_t require_odd_two_pebbling(const Graph& g, const HarnessOptions& opts) {
  auto rep = check_odd_two_pebbling(g, PropertyOptions{opts.number, std::nullopt});
  if (!rep.holds) throw HypothesisError(g.family() + " does not have the odd two-pebbling property");
  return rep.f_value;
}

/// Checks `ok(counts)` for every distribution of `pebbles` on `support`.
template <typename Check>
void exhaust(VerificationReport& rep, const Graph& host, std::uint64_t pebbles, std::span<const VertexId> support,
             std::vector<Check> workers) {
  BatchChecker checker(std::move(workers), host.order());
  for_each_distribution(host.order(), pebbles, [&](std::span<const Count> c) { return checker.push(c); }, support);
  checker.finish();
  rep.distributions_checked = checker.checked;
  rep.host_family = host.family();
  if (checker.failure) {
    rep.verdict = Verdict::refuted;
    rep.counterexample = Distribution(*checker.failure);
  }
}

/// Demand vector with `amount` pebbles at (x_i, g) for each listed position.
inline DemandVector fibre_demand(const Graph& host, std::size_t fibre_size, std::span<const std::size_t> positions,
                                 VertexId g_vertex, Count amount = 1) {
  std::vector<Count> req(host.order(), 0);
  for (std::size_t i : positions) req[(i - 1) * fibre_size + g_vertex] = amount;
  return DemandVector(std::move(req));
}

}  // namespace detail

/// Every distribution of the required pebble count on its host graph must
/// cover the targets in the fibre of each vertex g of G.
inline VerificationReport verify_cover_lemma(CoverLemma id, std::uint64_t k, const Graph& g,
                                             const HarnessOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t f = detail::require_odd_two_pebbling(g, opts);
  const auto inst = cover_instance(id, k, f);
  const Graph host = cartesian_product(make_path(inst.path_length), g);
  const std::size_t m = g.order();

  std::vector<VertexId> support;
  if (inst.fibre)
    for (VertexId b = 0; b < m; ++b) support.push_back(static_cast<VertexId>((*inst.fibre - 1) * m + b));

  VerificationReport rep;
  rep.claim = to_string(id) + " cover";
  rep.parameters = {{"k", std::to_string(k)}, {"G", g.family()}, {"f(G)", std::to_string(f)},
                    {"pebbles", std::to_string(inst.pebbles)}};

  struct Check {
    std::vector<Solver> per_g;
    bool operator()(std::span<const Count> c) {
      for (auto& s : per_g)
        if (!s.decide(c)) return false;
      return true;
    }
  };
  const DistanceTable dist(host);
  std::vector<Check> workers;
  for (unsigned w = 0; w < std::max(1u, opts.number.jobs == 0 ? default_jobs() : opts.number.jobs); ++w) {
    Check chk;
    for (VertexId b = 0; b < m; ++b) chk.per_g.emplace_back(host, detail::fibre_demand(host, m, inst.targets, b), dist);
    workers.push_back(std::move(chk));
  }
  detail::exhaust(rep, host, inst.pebbles, support, std::move(workers));
  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return rep;
}

/// Pebble count fixed by the T_k cover: (2^k + k - 3) f(G).
inline std::uint64_t caterpillar_pebbles(std::uint64_t k, std::uint64_t f) {
  if (k < 2) throw PebbleError("T_k cover needs k >= 2");
  if (k >= 62) throw PebbleError("cover parameter too large");
  return ((std::uint64_t{1} << k) + k - 3) * f;
}

/// Every distribution of (2^k + k - 3) f(G) pebbles on T_k x G either covers
/// (x_1, g) .. (x_(k-1), g) at once or puts two pebbles on (x_1, g).
/// A caller-supplied pebble count must equal it.
inline VerificationReport verify_caterpillar_cover(std::uint64_t k, const Graph& g,
                                          std::optional<std::uint64_t> pebbles = std::nullopt,
                                          const HarnessOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  if (k < 2) throw PebbleError("T_k cover needs k >= 2");
  const std::uint64_t f = detail::require_odd_two_pebbling(g, opts);
  const std::uint64_t count = caterpillar_pebbles(k, f);
  if (pebbles && *pebbles != count)
    throw HypothesisError("T_k cover fixes the pebble count at " + std::to_string(count) + ", got " +
                          std::to_string(*pebbles));
  const Graph host = cartesian_product(make_tk(k), g);
  const std::size_t m = g.order();

  VerificationReport rep;
  rep.claim = "caterpillar cover";
  rep.parameters = {{"k", std::to_string(k)}, {"G", g.family()}, {"f(G)", std::to_string(f)},
                    {"pebbles", std::to_string(count)}};

  std::vector<std::size_t> cover;
  for (std::size_t i = 1; i < k; ++i) cover.push_back(i);
  const std::vector<std::size_t> first{1};

  struct Check {
    std::vector<std::pair<Solver, Solver>> per_g;  // (cover all, two on x1)
    bool operator()(std::span<const Count> c) {
      for (auto& [all, two] : per_g)
        if (!all.decide(c) && !two.decide(c)) return false;
      return true;
    }
  };
  const DistanceTable dist(host);
  std::vector<Check> workers;
  for (unsigned w = 0; w < std::max(1u, opts.number.jobs == 0 ? default_jobs() : opts.number.jobs); ++w) {
    Check chk;
    for (VertexId b = 0; b < m; ++b)
      chk.per_g.emplace_back(Solver(host, detail::fibre_demand(host, m, cover, b), dist),
                             Solver(host, detail::fibre_demand(host, m, first, b, 2), dist));
    workers.push_back(std::move(chk));
  }
  detail::exhaust(rep, host, count, {}, std::move(workers));
  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return rep;
}

}  // namespace pebble
