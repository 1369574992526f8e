#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "fixtures.hpp"
#include "mimick/errors.hpp"
#include "mimick/mincut.hpp"
#include "mimick/random_graphs.hpp"
#include "mimick/terminal_cuts.hpp"
#include "mimick/tree.hpp"
#include "oracles.hpp"

using namespace mimick;
using namespace mimick::testing;

namespace {

std::vector<Rational> tree_vector(const CapGraph& t) {
  std::vector<Rational> out;
  for (auto u : canonical_subsets(t.terminal_count())) out.push_back(tree_min_terminal_cut(t, u));
  return out;
}

std::vector<Rational> brute_vector(const CapGraph& g) {
  std::vector<Rational> out;
  for (auto u : canonical_subsets(g.terminal_count())) out.push_back(brute_force_min_terminal_cut_value(g, u));
  return out;
}

CapGraph star4(std::int64_t ca, std::int64_t cb, std::int64_t cc, std::int64_t cd) {
  return CapGraph::create({"a", "b", "c", "d", "s"}, {"a", "b", "c", "d"},
                          {{"a", "s", Rational(ca)},
                           {"b", "s", Rational(cb)},
                           {"c", "s", Rational(cc)},
                           {"d", "s", Rational(cd)}});
}

std::size_t subtree_height(const TernaryTree& t, VertexId v) {
  std::size_t h = 0;
  for (VertexId c : t.children[v]) h = std::max(h, 1 + subtree_height(t, c));
  return h;
}

}  // namespace

TEST_CASE("tree predicates") {
  CHECK(is_tree(path4()));
  CHECK(is_tree(star3()));
  CHECK_FALSE(is_tree(triangle()));
  CHECK_FALSE(is_tree(isolated3()));
  CHECK(is_forest(isolated3()));
  CHECK(is_cactus(triangle()));
  CHECK(is_cactus(star3()));
  // Two triangles sharing the edge a-b: that edge lies on two cycles.
  auto diamond = CapGraph::create({"a", "b", "c", "d"}, {"a", "b"},
                                  {{"a", "b", Rational(1)},
                                   {"a", "c", Rational(1)},
                                   {"b", "c", Rational(1)},
                                   {"a", "d", Rational(1)},
                                   {"b", "d", Rational(1)}});
  CHECK_FALSE(is_cactus(diamond));
  // Two triangles sharing one vertex form a cactus.
  auto bowtie = CapGraph::create({"a", "b", "c", "d", "e"}, {"a", "e"},
                                 {{"a", "b", Rational(1)},
                                  {"b", "c", Rational(1)},
                                  {"a", "c", Rational(1)},
                                  {"c", "d", Rational(1)},
                                  {"d", "e", Rational(1)},
                                  {"c", "e", Rational(1)}});
  CHECK(is_cactus(bowtie));
}

TEST_CASE("reduce_tree on PATH4 splices both inner vertices") {
  auto r = reduce_tree(path4());
  CHECK(r.vertex_names() == names({"a", "b"}));
  REQUIRE(r.edge_count() == 1);
  CHECK(r.edges()[0].cap == Rational(1));
  CHECK(tree_min_terminal_cut(path4(), TerminalSubset(1)) == Rational(1));
  CHECK(tree_min_terminal_cut(r, TerminalSubset(1)) == Rational(1));
}

TEST_CASE("reduce_tree leaves a three-terminal star alone") {
  CHECK(reduce_tree(star3()) == star3());
}

TEST_CASE("reduce_tree deletes a pendant chain") {
  auto t = CapGraph::create({"a", "b", "c", "s", "p", "q", "r"}, {"a", "b", "c"},
                            {{"a", "s", Rational(1)},
                             {"b", "s", Rational(2)},
                             {"c", "s", Rational(3)},
                             {"s", "p", Rational(7)},
                             {"p", "q", Rational(8)},
                             {"q", "r", Rational(9)}});
  auto r = reduce_tree(t);
  CHECK(r.vertex_names() == names({"a", "b", "c", "s"}));
  CHECK(r.edge_count() == 3);
  CHECK(tree_vector(r) == tree_vector(t));
}

TEST_CASE("reduce_tree rejects non-trees") {
  CHECK_THROWS_AS(reduce_tree(triangle()), InputError);
  CHECK_THROWS_AS(reduce_tree(isolated3()), InputError);
}

TEST_CASE("ternarize splits a four-leaf star") {
  auto t = star4(1, 2, 3, 4);
  auto tt = ternarize(t);
  CHECK(tt.graph.vertex_count() == 6);
  CHECK(tt.graph.edge_count() == 5);
  CHECK(is_tree(tt.graph));
  std::size_t internal = 0;
  for (VertexId v = 0; v < tt.graph.vertex_count(); ++v) {
    if (tt.graph.is_terminal(v)) {
      CHECK(tt.graph.incident(v).size() == 1);
    } else {
      CHECK(tt.graph.incident(v).size() == 3);
      ++internal;
    }
  }
  CHECK(internal == 2);
  CHECK(tree_vector(tt.graph) == tree_vector(t));
  CHECK(brute_vector(tt.graph) == exhaustive_mtcv(t));
}

TEST_CASE("ternarize on small inputs") {
  auto s = ternarize(star3());
  CHECK(s.graph == star3());
  CHECK(s.root == star3().index_of("s"));
  CHECK(s.internal_in_order() == std::vector<VertexId>{star3().index_of("s")});

  auto e = ternarize(edge2());
  CHECK(e.graph == edge2());
  CHECK(e.internal_in_order().empty());

  auto p = ternarize(path4());
  CHECK(p.graph.vertex_count() == 2);
}

TEST_CASE("ternarize detaches an internal terminal") {
  // b sits in the middle of a path.
  auto t = CapGraph::create({"a", "b", "c"}, {"a", "b", "c"}, {{"a", "b", Rational(2)}, {"b", "c", Rational(3)}});
  auto tt = ternarize(t);
  CHECK(tt.graph.vertex_count() == 4);
  CHECK(tt.graph.incident(tt.graph.index_of("b")).size() == 1);
  CHECK(tree_vector(tt.graph) == tree_vector(t));
  CHECK(tree_vector(t) == exhaustive_mtcv(t));
}

TEST_CASE("Y-Delta on a star") {
  auto c = y_delta_reduce(ternarize(star3()));
  CHECK(c.is_cactus);
  CHECK(c.clamps == 0);
  CHECK(c.transforms == 1);
  CHECK(c.graph.vertex_names() == names({"a", "b", "c"}));
  CHECK(cut_value(c.graph, names({"a"})) == Rational(1));  // ab + ac = 0 + 1
  CHECK(cut_value(c.graph, names({"b"})) == Rational(2));  // ab + bc = 0 + 2
  CHECK(cut_value(c.graph, names({"c"})) == Rational(3));  // ac + bc = 1 + 2
  for (const auto& e : c.graph.edges()) {
    auto pair = c.graph.name(e.u) + c.graph.name(e.v);
    if (pair == "ab") CHECK(e.cap == Rational(0));
    if (pair == "bc") CHECK(e.cap == Rational(2));
    if (pair == "ac") CHECK(e.cap == Rational(1));
  }
  CHECK(c.graph.edge_count() == 3);
  CHECK(brute_vector(c.graph) == exhaustive_mtcv(star3()));
}

TEST_CASE("Y-Delta clamps a heavy leg") {
  auto star125 = star(1, 2, 5);
  auto c = y_delta_reduce(ternarize(star125));
  CHECK(c.clamps == 1);
  CHECK(c.graph == y_delta_reduce(ternarize(star3())).graph);
  CHECK(brute_vector(c.graph) == exhaustive_mtcv(star125));
  CHECK(exhaustive_mtcv(star125)[2] == Rational(3));

  auto raw = y_delta_reduce(ternarize(star125), YDeltaOptions{false});
  CHECK(raw.clamps == 0);
  CHECK(raw.graph.has_negative_capacity());
  auto v = brute_vector(raw.graph);
  CHECK(v[0] == Rational(1));
  CHECK(v[2] == Rational(5));  // {c} now reads c_c instead of min(5, 1 + 2)

  auto meta = cactus_metadata(c);
  CHECK(meta["clamps"] == 1);
  CHECK(meta["is_cactus"] == true);
  CHECK(meta["size_bound"] == "3");
}

TEST_CASE("Y-Delta leaves a single edge alone and rejects non-ternary input") {
  auto c = y_delta_reduce(ternarize(path4()));
  CHECK(c.graph.vertex_count() == 2);
  CHECK(c.transforms == 0);
  TernaryTree bad{star4(1, 1, 1, 1), 0, {}};
  bad.children.resize(5);
  CHECK_THROWS_AS(y_delta_reduce(bad), InputError);
}

TEST_CASE("in-order greedy selection can miss the size bound") {
  auto t = CapGraph::create({"v0", "v1", "v3", "v6", "v7", "v8", "v10", "v11"},
                            {"v10", "v3", "v6", "v8", "v11", "v7", "v1"},
                            {{"v0", "v1", Rational(15)},
                             {"v0", "v3", Rational(10)},
                             {"v0", "v6", Rational(1)},
                             {"v6", "v7", Rational(3)},
                             {"v7", "v10", Rational(3)},
                             {"v8", "v11", Rational(4)},
                             {"v0", "v8", Rational(4)}});
  auto tt = ternarize(t);
  CHECK(tt.internal_in_order().size() == 5);
  auto want = tree_vector(t);

  auto greedy = y_delta_reduce(tt, {true, YDeltaSelection::kInOrderGreedy});
  CHECK(greedy.transforms == 2);
  CHECK(greedy.graph.vertex_count() == 10);
  CHECK(brute_vector(greedy.graph) == want);

  auto best = y_delta_reduce(tt);
  CHECK(best.transforms == 3);
  CHECK(best.graph.vertex_count() == 9);
  CHECK(cactus_size_bound(7) == 9);
  CHECK(best.is_cactus);
  CHECK(brute_vector(best.graph) == want);
}

TEST_CASE("cactus_size_bound") {
  CHECK(cactus_size_bound(2) == 2);
  CHECK(cactus_size_bound(3) == 3);   // 39/8 - 12/8 = 27/8
  CHECK(cactus_size_bound(4) == 5);   // 40/8
  CHECK(cactus_size_bound(8) == 11);  // 92/8
}

TEST_CASE("tree_min_terminal_cut") {
  CHECK(tree_min_terminal_cut(path4(), TerminalSubset(1)) == Rational(1));
  CHECK(tree_min_terminal_cut(star3(), TerminalSubset(0b011)) == Rational(3));
  auto bridged = CapGraph::create({"a", "b", "x", "c"}, {"a", "b", "c"},
                                  {{"a", "x", Rational(4)}, {"b", "x", Rational(4)}, {"x", "c", Rational(0)}});
  CHECK(tree_min_terminal_cut(bridged, TerminalSubset(0b011)) == Rational(0));
  CHECK(tree_min_terminal_cut(isolated3(), TerminalSubset(1)) == Rational(0));
  CHECK_THROWS_AS(tree_min_terminal_cut(triangle(), TerminalSubset(1)), InputError);
}

TEST_CASE("tree DP agrees with exhaustive enumeration") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t n = 3 + trial % 12;
    std::size_t k = 2 + trial % std::min<std::size_t>(4, n - 1);
    auto t = random_tree(rng, n, k, trial % 3 == 0 ? 0 : 1, 9);
    REQUIRE(tree_vector(t) == exhaustive_mtcv(t));
  }
}

TEST_CASE("pipeline invariants on random trees") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t k = 2 + trial % 11;
    std::size_t n = k + trial % 40;
    auto t = random_tree(rng, n, k, 1, 20);
    auto want = tree_vector(t);

    auto r = reduce_tree(t);
    REQUIRE(is_tree(r));
    REQUIRE(r.vertex_count() <= 2 * k - 1);
    REQUIRE(tree_vector(r) == want);

    auto tt = ternarize(t);
    REQUIRE(tree_vector(tt.graph) == want);
    for (VertexId v = 0; v < tt.graph.vertex_count(); ++v) {
      REQUIRE(tt.graph.incident(v).size() == (tt.graph.is_terminal(v) ? 1U : 3U));
      if (!tt.graph.is_terminal(v) || v == tt.root) {
        const auto& ch = tt.children[v];
        for (std::size_t i = 1; i < ch.size(); ++i)
          REQUIRE(subtree_height(tt, ch[i - 1]) >= subtree_height(tt, ch[i]));
      }
    }

    auto c = y_delta_reduce(tt);
    REQUIRE(c.is_cactus);
    REQUIRE(is_cactus(c.graph));
    REQUIRE_FALSE(c.graph.has_negative_capacity());
    REQUIRE(c.graph.vertex_count() <= cactus_size_bound(k));
    if (c.graph.vertex_count() <= 24) REQUIRE(brute_vector(c.graph) == want);
  }
}

TEST_CASE("clamping keeps every star bipartition contribution") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<std::int64_t> cap(0, 50);
  auto contribution = [](const Rational& x, const Rational& y, const Rational& z) {
    // Leaf x alone on one side; the center joins whichever side is cheaper.
    return std::min(x, y + z);
  };
  for (int trial = 0; trial < 500; ++trial) {
    Rational c[3] = {Rational(cap(rng)), Rational(cap(rng)), Rational(cap(rng))};
    Rational clamped[3];
    for (int i = 0; i < 3; ++i) clamped[i] = std::min(c[i], c[(i + 1) % 3] + c[(i + 2) % 3]);
    for (int i = 0; i < 3; ++i) {
      REQUIRE(contribution(c[i], c[(i + 1) % 3], c[(i + 2) % 3]) ==
              contribution(clamped[i], clamped[(i + 1) % 3], clamped[(i + 2) % 3]));
      REQUIRE(clamped[(i + 1) % 3] + clamped[(i + 2) % 3] >= clamped[i]);
    }
  }
}
