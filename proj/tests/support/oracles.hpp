#pragma once

// Test-only oracles. They share no code path with the library beyond the
// graph container and Rational arithmetic.

#include <cstdint>
#include <optional>
#include <vector>

#include "mimick/graph.hpp"
#include "mimick/terminal_subset.hpp"

namespace mimick::testing {

struct OracleCut {
  Rational value;
  std::vector<VertexSet> minimizers;  // ascending by bitmask over all vertices
};

/// Scans every subset A of V (as a bitmask over all vertices, not only the
/// Steiner ones), keeps those with A ∩ K = U and sums crossing capacities
/// edge by edge.
inline OracleCut exhaustive_min_cut(const CapGraph& g, TerminalSubset u) {
  const std::size_t n = g.vertex_count();
  std::uint64_t want = 0;
  std::uint64_t term_mask = 0;
  for (std::size_t j = 0; j < g.terminal_count(); ++j) {
    term_mask |= std::uint64_t{1} << g.terminals()[j];
    if (u.contains(j)) want |= std::uint64_t{1} << g.terminals()[j];
  }
  std::optional<Rational> best;
  std::vector<std::uint64_t> masks;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    if ((a & term_mask) != want) continue;
    Rational value;
    for (const auto& e : g.edges()) {
      bool in_u = (a >> e.u) & 1U;
      bool in_v = (a >> e.v) & 1U;
      if (in_u != in_v) value += e.cap;
    }
    if (!best || value < *best) {
      best = value;
      masks.clear();
    }
    if (value == *best) masks.push_back(a);
  }
  OracleCut out{*best, {}};
  for (auto a : masks) {
    VertexSet s(n);
    for (std::size_t v = 0; v < n; ++v) s[v] = (a >> v) & 1U;
    out.minimizers.push_back(s);
  }
  return out;
}

inline std::vector<Rational> exhaustive_mtcv(const CapGraph& g) {
  std::vector<Rational> out;
  const std::uint64_t p = (std::uint64_t{1} << (g.terminal_count() - 1)) - 1;
  for (std::uint64_t i = 1; i <= p; ++i) out.push_back(exhaustive_min_cut(g, TerminalSubset(i)).value);
  return out;
}

/// Classical Dedekind count D(n): monotone Boolean functions on n inputs,
/// by testing all 2^(2^n) truth tables (n <= 4).
inline std::uint64_t monotone_function_count(std::size_t n) {
  const std::size_t points = std::size_t{1} << n;
  std::uint64_t count = 0;
  for (std::uint64_t table = 0; table < (std::uint64_t{1} << points); ++table) {
    bool monotone = true;
    for (std::size_t x = 0; x < points && monotone; ++x) {
      if (!((table >> x) & 1U)) continue;
      for (std::size_t bit = 0; bit < n; ++bit) {
        if (!((table >> (x | (std::size_t{1} << bit))) & 1U)) {
          monotone = false;
          break;
        }
      }
    }
    if (monotone) ++count;
  }
  return count;
}

/// Z(n) by inclusion-exclusion over the set J of shared elements: the
/// antichains whose members all contain J correspond to antichains of
/// subsets of the remaining n - |J| elements, of which D(n - |J|) - 1 are
/// nonempty. Needs D(0..n-1).
inline std::uint64_t common_element_count_by_inclusion_exclusion(std::size_t n,
                                                                 const std::vector<std::uint64_t>& dedekind) {
  std::int64_t nonempty = 0;
  std::int64_t binom = 1;
  for (std::size_t j = 1; j <= n; ++j) {
    binom = binom * static_cast<std::int64_t>(n - j + 1) / static_cast<std::int64_t>(j);
    std::int64_t term = binom * (static_cast<std::int64_t>(dedekind[n - j]) - 1);
    nonempty += (j % 2 == 1) ? term : -term;
  }
  return static_cast<std::uint64_t>(nonempty + 1);
}

}  // namespace mimick::testing
