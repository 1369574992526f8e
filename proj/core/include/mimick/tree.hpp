#pragma once

#include <cstddef>
#include <vector>

#include "mimick/graph.hpp"
#include "mimick/graph_io.hpp"
#include "mimick/terminal_subset.hpp"

namespace mimick {

/// Connected and |E| = |V| - 1.
bool is_tree(const CapGraph& g);
/// Acyclic.
bool is_forest(const CapGraph& g);
/// Connected, and every edge lies on at most one simple cycle.
bool is_cactus(const CapGraph& g);

/// Deletes non-terminal leaves and splices out degree-2 non-terminals
/// (u - x - w becomes u - w with capacity min(c(u,x), c(x,w))) until neither
/// remains. The result has at most 2k - 1 vertices and the same minimum
/// terminal cuts. Throws InputError if t is not a tree.
CapGraph reduce_tree(const CapGraph& t);

/// Rooted tree whose internal vertices are non-terminals of degree 3 and
/// whose leaves are exactly the terminals.
struct TernaryTree {
  CapGraph graph;
  /// The internal vertex next to the last terminal; for a two-terminal tree,
  /// the last terminal itself.
  VertexId root = 0;
  /// Children per vertex, taller subtree first. The last terminal is the
  /// parent of `root` and is nobody's child.
  std::vector<std::vector<VertexId>> children;

  /// Internal vertices in in-order (left subtree, vertex, right subtree).
  std::vector<VertexId> internal_in_order() const;
};

/// Reduces t, then makes it ternary with terminals as leaves.
///
/// A terminal of degree >= 2 hands its edges to a new Steiner vertex and
/// hangs off it; a Steiner vertex of degree d >= 4 becomes a chain of d - 2
/// degree-3 vertices. The new edges carry the sum of the capacities around
/// the vertex they replace, which is enough that no minimum cut separates
/// their endpoints. New vertices are named "t<index>".
TernaryTree ternarize(const CapGraph& t);

enum class YDeltaSelection {
  /// Transform a maximum independent set of the internal vertices, visited
  /// in in-order. Always meets cactus_size_bound.
  kMaxIndependent,
  /// Transform every internal vertex that still has degree 3 when the
  /// in-order walk reaches it. Can exceed cactus_size_bound (k = 7 already).
  kInOrderGreedy,
};

struct YDeltaOptions {
  /// Lower each leg to the sum of the other two before the transformation.
  bool clamp = true;
  YDeltaSelection selection = YDeltaSelection::kMaxIndependent;
};

struct CactusNetwork {
  CapGraph graph;
  bool is_cactus = false;
  std::size_t clamps = 0;
  std::size_t transforms = 0;
};

/// Visits the selected internal vertices in in-order and replaces each one,
/// with legs c_u, c_v, c_w, by a triangle carrying (c_u + c_v - c_w) / 2 on
/// u-v and symmetrically on the other sides.
/// Throws InputError if t is not ternary.
CactusNetwork y_delta_reduce(const TernaryTree& t, YDeltaOptions options = {});

/// max(2, floor(13k/8 - 3/2)).
std::size_t cactus_size_bound(std::size_t k);

Json cactus_metadata(const CactusNetwork& c);

/// Exact minimum terminal cut on a forest by dynamic programming over each
/// rooted component. Throws InputError if t has a cycle.
Rational tree_min_terminal_cut(const CapGraph& t, TerminalSubset u);

}  // namespace mimick
