#pragma once

// Command dispatch for the pebble tool. run_command() writes the report to
// `out`, diagnostics to `err`, and returns the process exit code.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pebble/cache.hpp"
#include "pebble/pebble.hpp"

namespace pebble::cli {

enum ExitCode : int { ok = 0, counterexample = 1, usage = 2, inconclusive = 3 };

struct Globals {
  unsigned jobs = 0;
  bool json = false;
  bool no_symmetry = false;
  std::string cache;
};

namespace detail {

using Json = nlohmann::ordered_json;

inline Json witness_json(const Graph& g, std::span<const Count> counts) {
  Json w = Json::object();
  for (VertexId v = 0; v < counts.size(); ++v)
    if (counts[v] > 0) w[g.label(v)] = counts[v];
  return w;
}

inline std::string read_inline_or_file(const std::string& arg) {
  std::ifstream in(arg);
  if (!in) return arg;
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  for (char& c : s)
    if (c == '\n' || c == '\r') c = ',';
  return s;
}

class Emitter {
 public:
  Emitter(std::ostream& out, const Globals& glob, std::string command)
      : out_(out), glob_(glob), command_(std::move(command)), start_(std::chrono::steady_clock::now()) {}

  /// One record per call. `lines` is the human-readable form.
  void emit(const std::string& graph, const Json& result, const std::optional<Json>& witness, std::uint64_t checked,
            const std::vector<std::string>& lines) {
    if (!glob_.json) {
      for (const auto& l : lines) out_ << l << "\n";
      return;
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    Json rec;
    rec["command"] = command_;
    rec["graph"] = graph;
    rec["result"] = result;
    if (witness) rec["witness"] = *witness;
    rec["checked"] = checked;
    rec["elapsed_ms"] = ms;
    rec["engine_version"] = engine_version;
    out_ << rec.dump() << "\n";
  }

 private:
  std::ostream& out_;
  const Globals& glob_;
  std::string command_;
  std::chrono::steady_clock::time_point start_;
};

inline NumberOptions number_options(const Globals& glob) {
  NumberOptions o;
  o.jobs = glob.jobs;
  o.use_symmetry = !glob.no_symmetry;
  return o;
}

inline std::optional<ResultCache> open_cache(const Globals& glob) {
  if (auto path = ResultCache::resolve_path(glob.cache)) return ResultCache(*path);
  return std::nullopt;
}

}  // namespace detail

inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::Json;
  CLI::App app{"Exact pebbling numbers and pebbling-property checks on small graphs", "pebble"};
  app.require_subcommand(1);
  Globals glob;
  app.add_option("--jobs", glob.jobs, "worker threads (default: all cores)");
  app.add_flag("--json", glob.json, "emit one JSON record per line");
  app.add_option("--cache", glob.cache, "JSON-lines result cache (default: $PEBBLE_CACHE)");
  app.add_flag("--no-symmetry", glob.no_symmetry, "disable automorphism reduction");

  // number
  std::string graph_src, target_label, mode = "discover", strategy = "closure";
  unsigned t = 1;
  std::optional<std::uint64_t> expect;
  auto* number = app.add_subcommand("number", "compute f_t(G) or f_t(G, target)");
  number->add_option("--graph", graph_src, "graph expression")->required();
  number->add_option("--target", target_label, "target vertex label");
  number->add_option("--t", t, "pebbles to deliver")->check(CLI::PositiveNumber);
  number->add_option("--mode", mode)->check(CLI::IsMember({"discover", "verify"}));
  number->add_option("--expect", expect, "expected value in verify mode");
  number->add_option("--strategy", strategy)->check(CLI::IsMember({"closure", "enumerate"}));

  // solvable
  std::string dist_arg, demand_arg;
  auto* solvable_cmd = app.add_subcommand("solvable", "decide a demand from a distribution, with a move sequence");
  solvable_cmd->add_option("--graph", graph_src, "graph expression")->required();
  solvable_cmd->add_option("--dist", dist_arg, "file or inline label=count,...")->required();
  solvable_cmd->add_option("--demand", demand_arg, "inline label=count,...")->required();

  // check
  std::string property;
  auto* check = app.add_subcommand("check", "check a pebbling property");
  check->add_option("--graph", graph_src, "graph expression")->required();
  check->add_option("--property", property)
      ->required()
      ->check(CLI::IsMember({"two-pebbling", "odd-two-pebbling", "herscovici", "f4-inequality"}));

  // graham
  std::string g_src, h_src, graham_mode = "exact";
  std::uint64_t budget = 10'000'000;
  auto* graham = app.add_subcommand("graham", "test f(G x H) <= f(G) f(H)");
  graham->set_help_flag("--help", "print this help message and exit");
  graham->add_option("--g", g_src)->required();
  graham->add_option("--h", h_src)->required();
  graham->add_option("--mode", graham_mode)->check(CLI::IsMember({"exact", "bound"}));
  graham->add_option("--budget", budget, "distribution budget for bound mode");

  // lemma
  std::string lemma_id, aux_src = "complete:1";
  std::uint64_t k = 0;
  std::optional<std::uint64_t> pebbles;
  auto* lemma = app.add_subcommand("lemma", "exhaustively verify a simultaneous-placement cover on a product");
  lemma->add_option("--id", lemma_id)
      ->required()
      ->check(CLI::IsMember({"2.5", "2.6", "3.5", "3.6", "3.7", "even-path", "odd-path", "full-path", "end-fibre",
                             "caterpillar"}));
  lemma->add_option("--k", k)->required();
  lemma->add_option("--aux", aux_src, "factor graph G (default complete:1)");
  lemma->add_option("--pebbles", pebbles, "pebble count for the caterpillar cover (must match)");

  // formula
  std::string kind;
  std::uint64_t n = 0;
  std::string root_label;
  auto* formula = app.add_subcommand("formula", "closed-form pebbling numbers");
  formula->add_option("--kind", kind)->required()->check(CLI::IsMember({"tree", "cycle", "middle"}));
  formula->add_option("--graph", graph_src, "tree expression (kind=tree)");
  formula->add_option("--root", root_label, "root label (kind=tree, default: every vertex)");
  formula->add_option("--t", t)->check(CLI::PositiveNumber);
  formula->add_option("--n", n, "cycle length, or half length for kind=middle");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }

  try {
    const NumberOptions nopts = detail::number_options(glob);

    if (*number) {
      detail::Emitter em(out, glob, "number");
      const Graph g = parse_graph(graph_src);
      if (mode == "verify" && !expect) throw CLI::ValidationError("--expect", "verify mode needs --expect");
      if (mode == "discover" && expect) throw CLI::ValidationError("--expect", "--expect needs --mode verify");
      std::optional<VertexId> target;
      if (!target_label.empty()) target = g.vertex(target_label);
      NumberOptions o = nopts;
      o.strategy = strategy == "closure" ? Strategy::closure : Strategy::enumerate;
      const std::string query = mode == "verify" ? "verify=" + std::to_string(*expect) : "number";
      const std::string key = cache_key(query + "/" + strategy, g.family(), target ? target_label : "*", t);

      auto cache = detail::open_cache(glob);
      std::optional<CacheRecord> rec;
      if (cache) rec = cache->lookup(key);
      if (!rec) {
        try {
          const NumberMode nm = expect ? NumberMode::verify(*expect) : NumberMode::discover();
          CacheRecord fresh;
          fresh.key = key;
          if (target) {
            auto r = rooted_number(g, *target, t, nm, o);
            fresh.value = r.value;
            fresh.witness = std::vector<Count>(r.witness.counts().begin(), r.witness.counts().end());
            fresh.checked = r.checked;
          } else {
            auto r = pebbling_number(g, t, nm, o);
            fresh.value = r.value;
            fresh.witness = std::vector<Count>(r.witness.counts().begin(), r.witness.counts().end());
            fresh.checked = r.checked;
          }
          rec = fresh;
          if (cache) cache->store(fresh);
        } catch (const NumberMismatch& mm) {
          em.emit(g.family(), "mismatch", detail::witness_json(g, mm.counterexample.counts()), 0,
                  {"mismatch: " + std::string(mm.what()),
                   "counterexample: " + render_distribution(g, mm.counterexample.counts()) + " -> " +
                       g.label(mm.target)});
          return counterexample;
        }
      }
      std::optional<Json> wit;
      std::vector<std::string> lines{std::to_string(rec->value)};
      if (rec->witness && rec->witness->size() == g.order()) {
        wit = detail::witness_json(g, *rec->witness);
        if (rec->value > 1) lines.push_back("witness: " + render_distribution(g, *rec->witness));
      }
      em.emit(g.family(), rec->value, wit, rec->checked, lines);
      return ok;
    }

    if (*solvable_cmd) {
      detail::Emitter em(out, glob, "solvable");
      const Graph g = parse_graph(graph_src);
      const Distribution d(parse_counts(g, detail::read_inline_or_file(dist_arg)));
      const DemandVector demand(parse_counts(g, demand_arg));
      const Certificate cert = solvable(g, d, demand);
      std::vector<std::string> lines{cert.solvable() ? "solvable" : "unsolvable"};
      Json moves = Json::array();
      for (const Move& m : cert.moves) {
        lines.push_back("  " + g.label(m.from) + " -> " + g.label(m.to));
        moves.push_back(Json::array({g.label(m.from), g.label(m.to)}));
      }
      Json result{{"outcome", cert.solvable() ? "solvable" : "unsolvable"}, {"moves", moves}};
      em.emit(g.family(), result, std::nullopt, cert.explored, lines);
      return ok;
    }

    if (*check) {
      detail::Emitter em(out, glob, "check");
      const Graph g = parse_graph(graph_src);
      PropertyOptions popts;
      popts.number = nopts;
      if (auto cache = detail::open_cache(glob))
        if (auto rec = cache->lookup(cache_key("number/closure", g.family(), "*", 1))) popts.known_f = rec->value;
      const Property prop = property == "two-pebbling"       ? Property::two_pebbling
                            : property == "odd-two-pebbling" ? Property::odd_two_pebbling
                                                             : Property::f4_inequality;
      const PropertyReport rep = check_property(g, prop, popts);
      std::vector<std::string> lines{std::string(rep.holds ? "holds" : "fails") + " (" + to_string(prop) +
                                     ", f = " + std::to_string(rep.f_value) +
                                     (rep.f4_value ? ", f4 = " + std::to_string(*rep.f4_value) : "") + ")"};
      std::optional<Json> wit;
      if (rep.counterexample) {
        wit = detail::witness_json(g, rep.counterexample->counts());
        lines.push_back("counterexample: " + render_distribution(g, rep.counterexample->counts()) + " -> " +
                        g.label(*rep.counterexample_target));
      }
      Json result{{"property", to_string(prop)}, {"holds", rep.holds}, {"f", rep.f_value}};
      if (rep.f4_value) result["f4"] = *rep.f4_value;
      if (rep.counterexample_target) result["target"] = g.label(*rep.counterexample_target);
      em.emit(g.family(), result, wit, rep.search_size, lines);
      return rep.holds ? ok : counterexample;
    }

    auto report_verdict = [&](detail::Emitter& em, const Graph* host, const std::string& graph,
                              const VerificationReport& rep) {
      std::vector<std::string> lines{to_string(rep.verdict) + " (" + rep.claim + ")"};
      Json params = Json::object();
      for (const auto& [key, value] : rep.parameters) {
        params[key] = value;
        lines.push_back("  " + key + " = " + value);
      }
      std::optional<Json> wit;
      if (rep.counterexample) {
        const Graph& h = host ? *host : parse_graph(rep.host_family);
        wit = detail::witness_json(h, rep.counterexample->counts());
        lines.push_back("counterexample: " + render_distribution(h, rep.counterexample->counts()));
      }
      Json result{{"claim", rep.claim}, {"verdict", to_string(rep.verdict)}, {"parameters", params}};
      em.emit(graph, result, wit, rep.distributions_checked, lines);
      switch (rep.verdict) {
        case Verdict::verified: return static_cast<int>(ok);
        case Verdict::refuted: return static_cast<int>(counterexample);
        case Verdict::inconclusive: return static_cast<int>(inconclusive);
      }
      return static_cast<int>(inconclusive);
    };

    if (*graham) {
      detail::Emitter em(out, glob, "graham");
      const Graph g = parse_graph(g_src), h = parse_graph(h_src);
      const Graph host = cartesian_product(g, h);
      HarnessOptions hopts{nopts};
      const auto gm = graham_mode == "exact" ? GrahamMode::exact() : GrahamMode::bound_only(budget);
      return report_verdict(em, &host, host.family(), verify_graham(g, h, gm, hopts));
    }

    if (*lemma) {
      detail::Emitter em(out, glob, "lemma");
      const Graph g = parse_graph(aux_src);
      HarnessOptions hopts{nopts};
      if (lemma_id == "3.7" || lemma_id == "caterpillar") {
        const Graph host = cartesian_product(make_tk(k), g);
        return report_verdict(em, &host, host.family(), verify_caterpillar_cover(k, g, pebbles, hopts));
      }
      if (pebbles) throw CLI::ValidationError("--pebbles", "only the caterpillar cover takes --pebbles");
      const CoverLemma id = (lemma_id == "2.5" || lemma_id == "even-path")   ? CoverLemma::even_path
                            : (lemma_id == "2.6" || lemma_id == "odd-path")  ? CoverLemma::odd_path
                            : (lemma_id == "3.5" || lemma_id == "full-path") ? CoverLemma::full_path
                                                                             : CoverLemma::end_fibre;
      const VerificationReport rep = verify_cover_lemma(id, k, g, hopts);
      return report_verdict(em, nullptr, rep.host_family, rep);
    }

    if (*formula) {
      detail::Emitter em(out, glob, "formula");
      if (kind == "tree") {
        if (graph_src.empty()) throw CLI::ValidationError("--graph", "kind=tree needs --graph");
        const Graph tree = parse_graph(graph_src);
        std::uint64_t best = 0;
        if (!root_label.empty()) {
          best = tree_formula(tree, tree.vertex(root_label), t);
        } else {
          for (VertexId v = 0; v < tree.order(); ++v) best = std::max(best, tree_formula(tree, v, t));
        }
        em.emit(tree.family(), best, std::nullopt, 0, {std::to_string(best)});
        return ok;
      }
      if (t != 1) throw CLI::ValidationError("--t", "only kind=tree takes --t");
      const std::uint64_t value = kind == "cycle" ? cycle_formula(n) : middle_cycle_formula(n);
      const std::string fam = kind == "cycle" ? "cycle:" + std::to_string(n) : "middle(cycle:" + std::to_string(2 * n) + ")";
      em.emit(fam, value, std::nullopt, 0, {std::to_string(value)});
      return ok;
    }
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const ParseError& e) {
    err << "error: graph expression " << e.what() << "\n";
    return usage;
  } catch (const PebbleError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}

}  // namespace pebble::cli
