#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mimick/graph.hpp"
#include "mimick/mincut.hpp"
#include "mimick/terminal_subset.hpp"

namespace mimick {

/// The canonical subsets U_1..U_p, p = 2^(k-1) - 1: U_i holds terminal j
/// exactly when bit j of i is set. The last terminal is never included, so
/// each bipartition {U, K - U} appears once.
std::vector<TerminalSubset> canonical_subsets(std::size_t k);

inline std::size_t cut_index_count(std::size_t k) { return (std::size_t{1} << (k - 1)) - 1; }

/// Position in canonical order (0-based) of the bipartition {U, K - U}.
std::size_t canonical_position(TerminalSubset u, std::size_t k);

/// The minimal minimum cut for every canonical subset of one graph.
struct TerminalCutFamily {
  std::size_t terminal_count = 0;
  std::vector<TerminalSubset> subsets;
  std::vector<MinCutResult> cuts;
  /// Terminal indicator for each terminal position, used by the laminarity
  /// check to confirm source_side ∩ K = U.
  std::vector<VertexId> terminals;

  std::size_t size() const { return cuts.size(); }
};

/// Largest terminal count for which the p-cut family is computed.
inline constexpr std::size_t kMaxFamilyTerminals = 20;

TerminalCutFamily cut_family(const CapGraph& g);

/// Minimum terminal cut vector in canonical order.
std::vector<Rational> mtcv(const CapGraph& g);
std::vector<Rational> mtcv(const TerminalCutFamily& fam);

struct LaminarViolation {
  enum class Kind {
    /// source_side ∩ K differs from U_i.
    kTerminalMismatch,
    /// U_i ⊆ U_j but S(U_i) ⊄ S(U_j).
    kNotNested,
    /// U_i ∩ U_j = ∅ but S(U_i) ∩ S(U_j) ≠ ∅.
    kNotDisjoint,
  };
  Kind kind;
  std::size_t i;
  std::size_t j;
};

struct LaminarReport {
  std::vector<LaminarViolation> violations;
  bool clean() const { return violations.empty(); }
};

/// Checks the nesting and disjointness laws over all index pairs.
LaminarReport check_laminar(const TerminalCutFamily& fam);

std::string to_string(LaminarViolation::Kind kind);

}  // namespace mimick
