#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pebble/formulas.hpp"
#include "pebble/properties.hpp"

using namespace pebble;

namespace {

Graph from_edge_list(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<Edge> e(edges.begin(), edges.end());
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < n; ++v) labels.push_back("g" + std::to_string(v));
  return Graph::from_edges(n, e, labels, "graph");
}

void expect_counterexample_valid(const Graph& g, const PropertyReport& rep) {
  if (rep.holds) {
    EXPECT_FALSE(rep.counterexample.has_value());
    return;
  }
  ASSERT_TRUE(rep.counterexample && rep.counterexample_target);
  auto s = stats(*rep.counterexample);
  const std::uint64_t slack = rep.property == Property::two_pebbling ? s.k : s.r;
  EXPECT_GT(s.p + slack, 2 * rep.f_value);
  EXPECT_FALSE(solvable(g, *rep.counterexample, DemandVector::single(g.order(), *rep.counterexample_target, 2)).solvable());
}

}  // namespace

TEST(TwoPebbling, Examples) {
  EXPECT_TRUE(check_two_pebbling(make_path(3)).holds);
  EXPECT_TRUE(check_two_pebbling(middle_graph(make_cycle(4))).holds);
  EXPECT_TRUE(check_two_pebbling(make_complete(1)).holds);
}

TEST(TwoPebbling, SmallTreesHold) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& rt : oracle::rooted_trees(n)) {
      if (rt.root != 0) continue;
      auto rep = check_two_pebbling(make_tree(rt.parents));
      EXPECT_TRUE(rep.holds) << render_parents(rt.parents);
    }
}

TEST(OddTwoPebbling, Examples) {
  EXPECT_TRUE(check_odd_two_pebbling(make_cycle(5)).holds);
  EXPECT_TRUE(check_odd_two_pebbling(make_complete(1)).holds);
  EXPECT_TRUE(check_odd_two_pebbling(make_path(3)).holds);
  EXPECT_TRUE(check_odd_two_pebbling(middle_graph(make_cycle(4))).holds);
}

TEST(OddTwoPebbling, ImpliedByTwoPebbling) {
  for (const Graph& g : {make_cycle(3), make_cycle(4), make_cycle(6), make_tk(3), make_complete(4)})
    if (check_two_pebbling(g).holds) {
      EXPECT_TRUE(check_odd_two_pebbling(g).holds) << g.family();
    }
}

TEST(TwoPebbling, KnownFSkipsRecomputation) {
  PropertyOptions opts;
  opts.known_f = 5;
  auto rep = check_two_pebbling(make_cycle(5), opts);
  EXPECT_EQ(rep.f_value, 5u);
  EXPECT_TRUE(rep.holds);
}

TEST(TwoPebbling, WrongFProducesValidCounterexample) {
  // an understated f moves the frontier below the true threshold
  PropertyOptions opts;
  opts.known_f = 2;
  Graph c5 = make_cycle(5);
  auto rep = check_two_pebbling(c5, opts);
  EXPECT_FALSE(rep.holds);
  expect_counterexample_valid(c5, rep);
  auto odd = check_odd_two_pebbling(c5, opts);
  EXPECT_FALSE(odd.holds);
  expect_counterexample_valid(c5, odd);
}

TEST(Frontier, MatchesDirectCheckOnAllSmallGraphs) {
  std::size_t compared = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& edges : oracle::connected_graphs(n)) {
      Graph g = from_edge_list(n, edges);
      const std::uint64_t f = pebbling_number(g).value;
      if (f > 6) continue;
      PropertyOptions opts;
      opts.known_f = f;
      for (Property prop : {Property::two_pebbling, Property::odd_two_pebbling}) {
        auto frontier = check_property(g, prop, opts);
        auto direct = check_property_direct(g, prop, opts);
        EXPECT_EQ(frontier.holds, direct.holds) << to_string(prop) << " on " << n << " vertices";
        expect_counterexample_valid(g, frontier);
        expect_counterexample_valid(g, direct);
        EXPECT_LE(frontier.search_size, direct.search_size);
        ++compared;
      }
    }
  EXPECT_GT(compared, 40u);
}

TEST(Frontier, StillMatchesWhenTheHypothesisIsForcedToFail) {
  // with f understated by one, violations exist and both searches must find them
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& edges : oracle::connected_graphs(n)) {
      Graph g = from_edge_list(n, edges);
      PropertyOptions opts;
      opts.known_f = pebbling_number(g).value - 1;
      for (Property prop : {Property::two_pebbling, Property::odd_two_pebbling}) {
        auto frontier = check_property(g, prop, opts);
        auto direct = check_property_direct(g, prop, opts);
        EXPECT_EQ(frontier.holds, direct.holds);
        expect_counterexample_valid(g, frontier);
      }
    }
}

TEST(F4Inequality, OddCyclesHold) {
  for (std::size_t n : {5u, 7u}) {
    auto rep = check_f4_inequality(make_cycle(n));
    EXPECT_TRUE(rep.holds) << n;
    EXPECT_EQ(rep.f_value, cycle_formula(n));
    ASSERT_TRUE(rep.f4_value);
    EXPECT_LT(4 * *rep.f4_value, 14 * rep.f_value - 2 * (n - 5));
  }
}

TEST(F4Inequality, PathAndEvenCycleFail) {
  Graph p5 = make_path(5);
  auto rep = check_f4_inequality(p5);
  EXPECT_FALSE(rep.holds);
  EXPECT_EQ(rep.f_value, 16u);
  EXPECT_EQ(*rep.f4_value, 64u);
  EXPECT_EQ(*rep.f4_value, tree_formula(p5, 0, 4));
  auto c6 = check_f4_inequality(make_cycle(6));
  EXPECT_FALSE(c6.holds);
  EXPECT_EQ(c6.f_value, 8u);
  EXPECT_GE(4 * *c6.f4_value, 14 * 8 - 2);
}

TEST(F4Inequality, NeedsFiveVertices) { EXPECT_THROW(check_f4_inequality(make_cycle(4)), PebbleError); }
