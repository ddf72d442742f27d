#pragma once

// Graph expressions for the command line.
//
//   expr := NAME ":" INT
//         | "tree" ":" "[" INT {"," INT} "]"
//         | NAME "(" expr {"," expr} ")"
//         | "file" ":" PATH
//
// NAME is one of path, cycle, complete, tree, middle, prod, mstar, mprime, tk.
// Whitespace between tokens is ignored. render() prints the canonical form,
// which is also the family string of the evaluated graph.

#include <cctype>
#include <fstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pebble/graph.hpp"

namespace pebble {

class ParseError : public PebbleError {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : PebbleError("at position " + std::to_string(pos) + ": " + msg), position(pos) {}
  std::size_t position;
};

struct GraphExpr {
  std::string name;
  std::variant<std::monostate, long, std::vector<long>, std::string> param;
  std::vector<GraphExpr> args;

  friend bool operator==(const GraphExpr&, const GraphExpr&) = default;
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view src) : src_(src) {}

  GraphExpr parse() {
    GraphExpr e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input '" + std::string(src_.substr(pos_)) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string name() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a constructor name");
    return std::string(src_.substr(start, pos_ - start));
  }

  long integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < src_.size() && src_[pos_] == '-') ++pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    std::string_view digits = src_.substr(start, pos_ - start);
    if (digits.empty() || digits == "-") {
      pos_ = start;
      fail("expected an integer");
    }
    if (digits.size() > 9) {
      pos_ = start;
      fail("integer too large");
    }
    return std::stol(std::string(digits));
  }

  void range(const std::string& what, long value, long lo, std::size_t at) const {
    if (value < lo) throw ParseError(what + " must be >= " + std::to_string(lo), at);
  }

  GraphExpr expr() {
    skip_ws();
    const std::size_t at = pos_;
    GraphExpr e;
    e.name = name();
    static const std::vector<std::string> sized = {"path", "cycle", "complete", "mstar", "mprime", "tk"};
    if (e.name == "middle" || e.name == "prod") {
      expect('(');
      e.args.push_back(expr());
      while (accept(',')) e.args.push_back(expr());
      expect(')');
      if (e.name == "middle" && e.args.size() != 1) throw ParseError("middle takes exactly one argument", at);
      if (e.name == "prod" && e.args.size() < 2) throw ParseError("prod takes at least two arguments", at);
      return e;
    }
    if (e.name == "file") {
      expect(':');
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < src_.size() && src_[pos_] != ',' && src_[pos_] != ')' &&
             !std::isspace(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
      if (start == pos_) fail("expected a file path");
      e.param = std::string(src_.substr(start, pos_ - start));
      return e;
    }
    if (e.name == "tree") {
      expect(':');
      expect('[');
      std::vector<long> parents{integer()};
      while (accept(',')) parents.push_back(integer());
      expect(']');
      e.param = std::move(parents);
      return e;
    }
    if (std::find(sized.begin(), sized.end(), e.name) == sized.end())
      throw ParseError("unknown constructor '" + e.name + "'", at);
    expect(':');
    skip_ws();
    const std::size_t num_at = pos_;
    const long value = integer();
    if (e.name == "cycle") range("cycle length", value, 3, num_at);
    if (e.name == "path") range("path length", value, 1, num_at);
    if (e.name == "complete") range("complete graph order", value, 1, num_at);
    if (e.name == "mstar" || e.name == "mprime") range(e.name + " half-cycle length", value, 2, num_at);
    if (e.name == "tk") range("tk path length", value, 2, num_at);
    e.param = value;
    return e;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline GraphExpr parse_graph_expr(std::string_view src) { return detail::ExprParser(src).parse(); }

inline std::string render(const GraphExpr& e) {
  if (e.name == "middle" || e.name == "prod") {
    std::string s = e.name + "(";
    for (std::size_t i = 0; i < e.args.size(); ++i) s += (i ? "," : "") + render(e.args[i]);
    return s + ")";
  }
  if (auto* v = std::get_if<long>(&e.param)) return e.name + ":" + std::to_string(*v);
  if (auto* v = std::get_if<std::vector<long>>(&e.param)) return e.name + ":" + render_parents(*v);
  if (auto* v = std::get_if<std::string>(&e.param)) return e.name + ":" + *v;
  return e.name;
}

inline Graph evaluate(const GraphExpr& e) {
  auto size = [&] { return static_cast<std::size_t>(std::get<long>(e.param)); };
  if (e.name == "path") return make_path(size());
  if (e.name == "cycle") return make_cycle(size());
  if (e.name == "complete") return make_complete(size());
  if (e.name == "mstar") return make_mstar(size());
  if (e.name == "mprime") return make_mprime(size());
  if (e.name == "tk") return make_tk(size());
  if (e.name == "tree") return make_tree(std::get<std::vector<long>>(e.param));
  if (e.name == "middle") return middle_graph(evaluate(e.args.at(0)));
  if (e.name == "prod") {
    Graph g = evaluate(e.args.at(0));
    for (std::size_t i = 1; i < e.args.size(); ++i) g = cartesian_product(g, evaluate(e.args[i]));
    return g.with_family(render(e));
  }
  if (e.name == "file") {
    const auto& path = std::get<std::string>(e.param);
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open edge list '" + path + "'");
    return read_edge_list(in, render(e));
  }
  throw GraphError("unknown constructor '" + e.name + "'");
}

inline Graph parse_graph(std::string_view src) { return evaluate(parse_graph_expr(src)); }

}  // namespace pebble
