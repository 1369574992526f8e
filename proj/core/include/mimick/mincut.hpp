#pragma once

#include <vector>

#include "mimick/graph.hpp"
#include "mimick/rational.hpp"
#include "mimick/terminal_subset.hpp"

namespace mimick {

/// Minimum cut separating a terminal subset U from the other terminals.
struct MinCutResult {
  Rational value;
  /// The inclusion-minimal minimum cut side containing U.
  VertexSet source_side;

  friend bool operator==(const MinCutResult&, const MinCutResult&) = default;
};

/// Exact minimum cut between U and K - U.
///
/// Runs shortest-augmenting-path max-flow over rationals from a super-source
/// tied to U to a super-sink tied to K - U. The returned side is the set of
/// vertices reachable from the super-source in the final residual network,
/// which is the unique inclusion-minimal minimum side.
///
/// Requires nonnegative capacities. Throws InputError if U is empty, equals
/// K or names a non-terminal position.
MinCutResult min_terminal_cut(const CapGraph& g, TerminalSubset u);

/// True iff exactly one vertex set A with A ∩ K = U attains the minimum.
///
/// Compares the minimal side grown from U with the complement of the
/// minimal side grown from K - U.
bool is_unique_min_terminal_cut(const CapGraph& g, TerminalSubset u);

struct BruteForceCut {
  Rational value;
  /// Every minimizing side, in enumeration order of the Steiner vertices.
  std::vector<VertexSet> minimizers;
};

inline constexpr std::size_t kBruteForceVertexLimit = 24;

/// Enumerates all placements of the non-terminals. Accepts negative
/// capacities. Throws GuardError above kBruteForceVertexLimit vertices.
BruteForceCut brute_force_min_terminal_cut(const CapGraph& g, TerminalSubset u);

/// Minimum only, without collecting minimizers.
Rational brute_force_min_terminal_cut_value(const CapGraph& g, TerminalSubset u);

}  // namespace mimick
