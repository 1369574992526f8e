#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mimick/graph.hpp"
#include "mimick/graph_io.hpp"
#include "mimick/terminal_subset.hpp"

namespace mimick {

/// Two-hub graph that makes coordinate `index` of the cut vector equal to
/// 1 - epsilon while the other coordinates do not depend on epsilon.
///
/// Terminals of U join hub "v0" with capacity 1/|U|, the other terminals
/// join hub "u0" with capacity 1/|K - U|, and the hubs are joined with
/// capacity 1 - epsilon. `index` is a canonical 0-based position.
/// Throws InputError unless 0 < epsilon < min(1/|U|, 1/|K - U|).
CapGraph gadget_graph(const std::vector<std::string>& terminals, std::size_t index, const Rational& epsilon);

/// Exclusive upper limit for epsilon in gadget_graph.
Rational gadget_epsilon_limit(std::size_t k, std::size_t index);

/// Disjoint union of g1 and g2 glued at the shared terminals, capacities
/// scaled by lambda and 1 - lambda. Steiner vertices are renamed "g1.x" and
/// "g2.x". Throws InputError on differing terminal lists or lambda outside
/// [0, 1].
CapGraph convex_combine(const CapGraph& g1, const CapGraph& g2, const Rational& lambda);

/// Rows follow the canonical subsets, columns follow g.edges().
struct CutMatrix {
  std::size_t columns = 0;
  std::vector<std::vector<bool>> rows;
};

/// Entry (i, j) is set iff edge j crosses the minimal cut of subset i.
CutMatrix cut_matrix(const CapGraph& g);

Json cut_matrix_to_json(const CutMatrix& m);

/// Exact rank by fraction-free (Bareiss) elimination.
std::size_t exact_rank(const std::vector<std::vector<Rational>>& rows);

/// Rank of the difference set of gadget cut vectors: for every index two
/// gadgets with different epsilon, plus the zero vector of the empty graph.
/// Requires 2 <= k <= 5.
std::size_t mtcv_rank_evidence(std::size_t k);

inline constexpr std::size_t kMaxAntichainGround = 5;

/// Antichains of nonempty subsets of an n-set, the empty antichain included.
std::uint64_t count_antichains(std::size_t n);
/// Those antichains whose members all share an element (empty included).
std::uint64_t count_common_element_antichains(std::size_t n);

struct BoundRow {
  std::size_t k = 0;
  std::uint64_t z = 0;
  std::uint64_t m_prime = 0;
  std::uint64_t two_power = 0;
  std::size_t observed_n_max = 0;
};

/// Row for k terminals (2 <= k <= 6). observed_n_max is the largest cluster
/// count the builder produced over `samples` seeded random graphs.
BoundRow bound_row(std::size_t k, std::size_t samples, std::uint64_t seed);

Json bound_row_to_json(const BoundRow& row);

/// Default terminal names: "a", "b", ... and "t26", "t27", ... past 'z'.
std::vector<std::string> default_terminal_names(std::size_t k);

}  // namespace mimick
