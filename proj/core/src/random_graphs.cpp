#include "mimick/random_graphs.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mimick/errors.hpp"

namespace mimick {

namespace {

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = "v" + std::to_string(i);
  return names;
}

std::vector<VertexId> pick_terminals(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  if (k < 2 || k > n) throw InputError("need 2 <= terminals <= vertices");
  std::vector<VertexId> ids(n);
  std::iota(ids.begin(), ids.end(), VertexId{0});
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(k);
  return ids;
}

}  // namespace

CapGraph random_connected_graph(std::mt19937_64& rng, const RandomGraphSpec& spec) {
  const std::size_t n = spec.vertices;
  auto terminals = pick_terminals(rng, n, spec.terminals);
  std::uniform_int_distribution<std::int64_t> cap(spec.min_cap, spec.max_cap);
  std::bernoulli_distribution extra(spec.extra_edge_probability);

  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    VertexId a = order[i];
    VertexId b = order[pick(rng)];
    used[a][b] = used[b][a] = true;
    edges.push_back(Edge{a, b, Rational(cap(rng))});
  }
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (!used[a][b] && extra(rng)) edges.push_back(Edge{a, b, Rational(cap(rng))});
    }
  }
  return CapGraph::from_indices(numbered(n), std::move(terminals), edges);
}

CapGraph random_tree(std::mt19937_64& rng, std::size_t vertices, std::size_t terminals, std::int64_t min_cap,
                     std::int64_t max_cap) {
  auto terms = pick_terminals(rng, vertices, terminals);
  std::uniform_int_distribution<std::int64_t> cap(min_cap, max_cap);
  std::bernoulli_distribution chain(0.3);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < vertices; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    VertexId parent = chain(rng) ? i - 1 : pick(rng);
    edges.push_back(Edge{parent, i, Rational(cap(rng))});
  }
  return CapGraph::from_indices(numbered(vertices), std::move(terms), edges);
}

}  // namespace mimick
