#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "mimick/graph.hpp"

namespace mimick {

struct RandomGraphSpec {
  std::size_t vertices = 8;
  std::size_t terminals = 3;
  /// Probability of each non-tree vertex pair becoming an edge.
  double extra_edge_probability = 0.3;
  std::int64_t min_cap = 1;
  std::int64_t max_cap = 10;
};

/// Random spanning tree plus random extra edges; integer capacities drawn
/// uniformly from [min_cap, max_cap]. Vertices are "v0".."v{n-1}" and the
/// terminals are a random selection of them in random order.
CapGraph random_connected_graph(std::mt19937_64& rng, const RandomGraphSpec& spec);

/// Random tree on `vertices` vertices with `terminals` terminals.
CapGraph random_tree(std::mt19937_64& rng, std::size_t vertices, std::size_t terminals, std::int64_t min_cap,
                     std::int64_t max_cap);

}  // namespace mimick
