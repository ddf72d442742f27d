#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pebble/enumerate.hpp"
#include "pebble/solver.hpp"

using namespace pebble;

namespace {

Distribution on(const Graph& g, const std::string& text) { return Distribution(parse_counts(g, text)); }

DemandVector demand_on(const Graph& g, const std::string& text) { return DemandVector(parse_counts(g, text)); }

Graph random_connected(std::size_t n, std::mt19937_64& rng) {
  auto parents = oracle::random_tree(n, rng);
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.push_back({static_cast<VertexId>(parents[v]), static_cast<VertexId>(v)});
  std::bernoulli_distribution extra(0.3);
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      if (std::find(edges.begin(), edges.end(), Edge{a, b}) == edges.end() && extra(rng)) edges.push_back({a, b});
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < n; ++v) labels.push_back("r" + std::to_string(v));
  return Graph::from_edges(n, edges, labels, "random");
}

/// Random distribution of exactly p pebbles.
Distribution random_distribution(std::size_t n, std::uint64_t p, std::mt19937_64& rng) {
  std::vector<Count> c(n, 0);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::uint64_t i = 0; i < p; ++i) ++c[pick(rng)];
  return Distribution(c);
}

void expect_replays(const Graph& g, const Distribution& d, const DemandVector& demand, const Certificate& cert) {
  ASSERT_TRUE(cert.solvable());
  Distribution end = replay(g, d, cert.moves);  // throws on an illegal move
  EXPECT_EQ(end.total() + cert.moves.size(), d.total());
  EXPECT_TRUE(demand.met_by(end.counts()));
}

}  // namespace

TEST(Moves, PathPile) {
  Graph p3 = make_path(3);
  Distribution d = apply_move(p3, on(p3, "x3=4"), p3.vertex("x3"), p3.vertex("x2"));
  EXPECT_EQ(d, on(p3, "x2=1,x3=2"));
  EXPECT_EQ(d.total(), 3u);
}

TEST(Moves, Errors) {
  Graph p3 = make_path(3);
  EXPECT_THROW(apply_move(p3, on(p3, "x3=1"), p3.vertex("x3"), p3.vertex("x2")), MoveError);
  EXPECT_THROW(apply_move(p3, on(p3, "x3=4"), p3.vertex("x3"), p3.vertex("x1")), MoveError);
}

TEST(Moves, CycleDropsOnePebble) {
  Graph c4 = make_cycle(4);
  Distribution d = apply_move(c4, on(c4, "v0=2"), 0, 1);
  EXPECT_EQ(d, on(c4, "v1=1"));
  EXPECT_EQ(d.total(), 1u);
}

TEST(Stats, Examples) {
  auto s = stats(Distribution(std::vector<Count>{3, 2}));
  EXPECT_EQ(s.p, 5u);
  EXPECT_EQ(s.k, 2u);
  EXPECT_EQ(s.r, 1u);
  s = stats(Distribution(std::vector<Count>{0, 0, 0}));
  EXPECT_EQ(s.p + s.k + s.r, 0u);
  s = stats(Distribution(std::vector<Count>{1, 1, 1}));
  EXPECT_EQ(s.p, 3u);
  EXPECT_EQ(s.k, 3u);
  EXPECT_EQ(s.r, 3u);
}

TEST(Stats, InvariantsOnRandomDistributions) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto d = random_distribution(6, static_cast<std::uint64_t>(i % 13), rng);
    auto s = stats(d);
    EXPECT_LE(s.r, s.k);
    EXPECT_LE(s.k, std::min<std::uint64_t>(s.p, 6));
    EXPECT_EQ(s.r % 2, s.p % 2);
  }
}

TEST(Weight, Examples) {
  Graph p3 = make_path(3);
  Weight w = weight_bound(p3, on(p3, "x3=3"), p3.vertex("x1"));
  EXPECT_EQ(w.str(), "3/4");
  EXPECT_DOUBLE_EQ(w.to_double(), 0.75);
  EXPECT_FALSE(w.at_least(1));
  Graph c6 = make_cycle(6);
  Weight w6 = weight_bound(c6, on(c6, "v3=8"), 0);
  EXPECT_EQ(w6.str(), "1");
  EXPECT_TRUE(w6.at_least(1));
  EXPECT_TRUE(weight_bound(c6, on(c6, "v0=2,v2=5"), 0).at_least(2));
}

TEST(Weight, DeepGraphDoesNotOverflow) {
  Weight w{static_cast<unsigned __int128>(3) << 63, 64};
  EXPECT_DOUBLE_EQ(w.to_double(), 1.5);
  EXPECT_EQ(w.str(), "3/2");
  Weight tiny{1, 64};
  EXPECT_EQ(tiny.str(), "1/18446744073709551616");
}

TEST(Demand, RejectsZero) {
  EXPECT_THROW(DemandVector(std::vector<Count>{0, 0}), PebbleError);
}

TEST(Solver, PathPileCertificate) {
  Graph p3 = make_path(3);
  Distribution d = on(p3, "x3=4");
  DemandVector dem = demand_on(p3, "x1=1");
  Certificate cert = solvable(p3, d, dem);
  expect_replays(p3, d, dem, cert);
  ASSERT_EQ(cert.moves.size(), 3u);
  EXPECT_EQ(cert.moves[0].from, p3.vertex("x3"));
  EXPECT_EQ(cert.moves[0].to, p3.vertex("x2"));
  EXPECT_EQ(cert.moves[1].from, p3.vertex("x3"));
  EXPECT_EQ(cert.moves[2].from, p3.vertex("x2"));
  EXPECT_EQ(cert.moves[2].to, p3.vertex("x1"));
}

TEST(Solver, WeightTooSmall) {
  Graph p3 = make_path(3);
  EXPECT_FALSE(solvable(p3, on(p3, "x3=3"), demand_on(p3, "x1=1")).solvable());
}

TEST(Solver, OddCycleWitnessAtTen) {
  // f(C7) = 11, so some 10-pebble distribution must fail; the oracle confirms the one found
  Graph c7 = make_cycle(7);
  DemandVector dem = DemandVector::single(7, 0, 1);
  std::optional<Distribution> witness;
  for_each_distribution(7, 10, [&](std::span<const Count> c) {
    if (!solvable(c7, Distribution(c), dem).solvable()) {
      witness = Distribution(c);
      return false;
    }
    return true;
  });
  ASSERT_TRUE(witness.has_value());
  std::vector<int> s(witness->counts().begin(), witness->counts().end()), want(7, 0);
  want[0] = 1;
  EXPECT_FALSE(oracle::bfs_solvable(c7, s, want));
}

TEST(Solver, SimultaneousDemand) {
  Graph p4 = make_path(4);
  DemandVector cover = demand_on(p4, "x1=1,x3=1");
  Distribution d = on(p4, "x4=10");
  expect_replays(p4, d, cover, solvable(p4, d, cover));
  EXPECT_FALSE(solvable(p4, on(p4, "x4=9"), cover).solvable());
}

TEST(Solver, AgreesWithBreadthFirstOracle) {
  std::mt19937_64 rng(20240611);
  int solved = 0;
  for (int i = 0; i < 1000; ++i) {
    std::size_t n = 2 + static_cast<std::size_t>(rng() % 5);
    Graph g = random_connected(n, rng);
    std::uint64_t p = rng() % 11;
    Distribution d = random_distribution(n, p, rng);
    std::vector<Count> req(n, 0);
    std::size_t targets = 1 + rng() % 2;
    for (std::size_t j = 0; j < targets; ++j) req[rng() % n] += static_cast<Count>(1 + rng() % 2);
    DemandVector dem(req);
    Certificate cert = solvable(g, d, dem);
    std::vector<int> s(d.counts().begin(), d.counts().end()), want(req.begin(), req.end());
    ASSERT_EQ(cert.solvable(), oracle::bfs_solvable(g, s, want)) << "instance " << i;
    if (cert.solvable()) {
      expect_replays(g, d, dem, cert);
      ++solved;
    }
  }
  EXPECT_GT(solved, 100);
  EXPECT_LT(solved, 900);
}

TEST(Solver, MonotoneUnderAddedPebbles) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 3 + static_cast<std::size_t>(rng() % 4);
    Graph g = random_connected(n, rng);
    Distribution d = random_distribution(n, rng() % 9, rng);
    DemandVector dem = DemandVector::single(n, static_cast<VertexId>(rng() % n), static_cast<Count>(1 + rng() % 2));
    if (!solvable(g, d, dem).solvable()) continue;
    std::vector<Count> more(d.counts().begin(), d.counts().end());
    more[rng() % n] += static_cast<Count>(1 + rng() % 3);
    EXPECT_TRUE(solvable(g, Distribution(more), dem).solvable());
  }
}

TEST(Solver, WeightIsNecessary) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 3 + static_cast<std::size_t>(rng() % 4);
    Graph g = random_connected(n, rng);
    Distribution d = random_distribution(n, rng() % 12, rng);
    VertexId s = static_cast<VertexId>(rng() % n);
    Count t = static_cast<Count>(1 + rng() % 3);
    if (solvable(g, d, DemandVector::single(n, s, t)).solvable()) {
      EXPECT_TRUE(weight_bound(g, d, s).at_least(t));
    }
  }
}

TEST(Solver, DecideMatchesCertify) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 3 + static_cast<std::size_t>(rng() % 4);
    Graph g = random_connected(n, rng);
    Distribution d = random_distribution(n, rng() % 12, rng);
    DemandVector dem = DemandVector::single(n, static_cast<VertexId>(rng() % n), static_cast<Count>(1 + rng() % 2));
    Solver solver(g, dem);
    EXPECT_EQ(solver.decide(d.counts()), solver.certify(d).solvable());
  }
}

TEST(Enumerate, StarsAndBarsCounts) {
  std::vector<std::vector<Count>> seen;
  for_each_distribution(2, 2, [&](std::span<const Count> c) {
    seen.emplace_back(c.begin(), c.end());
    return true;
  });
  EXPECT_EQ(seen, (std::vector<std::vector<Count>>{{0, 2}, {1, 1}, {2, 0}}));
  std::uint64_t count = 0;
  for_each_distribution(8, 10, [&](std::span<const Count>) {
    ++count;
    return true;
  });
  EXPECT_EQ(count, 19448u);
  EXPECT_EQ(distribution_count(8, 10), 19448u);
  EXPECT_EQ(enumerate_canonical(make_path(2).without_symmetry(), 2).size(), 3u);
}

TEST(Enumerate, OrbitsUnderTargetStabilizer) {
  Graph c4 = make_cycle(4);
  auto reps = enumerate_canonical(c4, 1, VertexId{0});
  EXPECT_EQ(reps.size(), 3u);
  // orbit count by brute force over all 8 dihedral images
  auto group = PermutationGroup::of(c4).stabilizer(0);
  for (std::uint64_t p = 0; p <= 6; ++p) {
    std::set<std::vector<Count>> orbits;
    for_each_distribution(4, p, [&](std::span<const Count> c) {
      std::vector<Count> best(c.begin(), c.end());
      for (const auto& perm : group.elements()) {
        std::vector<Count> img(4);
        for (VertexId v = 0; v < 4; ++v) img[perm[v]] = c[v];
        best = std::min(best, img);
      }
      orbits.insert(best);
      return true;
    });
    EXPECT_EQ(enumerate_canonical(c4, p, VertexId{0}).size(), orbits.size()) << p;
  }
}

TEST(Enumerate, DeterministicOrder) {
  Graph c5 = make_cycle(5);
  auto a = enumerate_canonical(c5, 6), b = enumerate_canonical(c5, 6);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
}
