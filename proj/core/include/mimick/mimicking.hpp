#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mimick/graph.hpp"
#include "mimick/graph_io.hpp"
#include "mimick/terminal_cuts.hpp"

namespace mimick {

/// Bit i is set iff the vertex lies in S(U_{i+1}).
struct CutSignature {
  std::vector<bool> bits;

  /// The canonical subsets whose minimal side contains the vertex.
  std::vector<TerminalSubset> members() const;

  friend bool operator==(const CutSignature&, const CutSignature&) = default;
};

std::vector<CutSignature> signatures(const CapGraph& g, const TerminalCutFamily& fam);

/// Whether the signature's subset collection is closed under taking
/// canonical supersets.
bool is_upward_closed(const CutSignature& sig);
/// Whether no two subsets in the signature's collection are disjoint.
bool is_pairwise_intersecting(const CutSignature& sig);
/// Whether all minimal subsets of the collection share one terminal. The
/// empty collection counts as sharing.
bool shares_common_element(const CutSignature& sig);

struct MimickingNetwork {
  CapGraph h;
  /// Cluster c of `map` is vertex c of `h`.
  VertexPartition map;
  std::size_t cluster_count = 0;
  std::vector<CutSignature> signature_table;
};

/// Clusters vertices by cut signature and contracts each cluster.
///
/// Cluster c is named after its terminal if it has one, else "h<c>".
/// Clusters are ordered by their smallest original vertex index.
MimickingNetwork build_mimicking_network(const CapGraph& g);
MimickingNetwork build_mimicking_network(const CapGraph& g, const TerminalCutFamily& fam);

/// True iff every edge of mn.h joins clusters with different signatures,
/// so each surviving edge crosses some computed minimum terminal cut.
bool edges_cross_family_cuts(const MimickingNetwork& mn);

struct VerificationReport {
  struct Entry {
    TerminalSubset subset;
    Rational g_value;
    Rational h_value;
  };
  std::vector<Entry> entries;
  /// max h_value / g_value, with 0/0 read as 1; nullopt when unbounded.
  std::optional<Rational> quality;
  bool pass = false;

  /// Canonical positions where the values differ.
  std::vector<std::size_t> failures() const;
};

/// Compares every canonical minimum terminal cut of g and h exactly.
///
/// Sparsifier values come from the max-flow engine; when h has at most
/// kBruteForceVertexLimit vertices the brute-force oracle is run as well and
/// must agree (it alone is used if h has negative capacities).
/// Throws InputError when the terminal lists differ.
VerificationReport verify_sparsifier(const CapGraph& g, const CapGraph& h);
VerificationReport verify_mimicking(const CapGraph& g, const MimickingNetwork& mn);

Json report_to_json(const CapGraph& g, const VerificationReport& report);

inline constexpr std::size_t kPartitionSearchVertexLimit = 8;

/// Smallest cluster count over all vertex partitions whose contraction is an
/// exact mimicking network. Throws GuardError above
/// kPartitionSearchVertexLimit vertices.
std::size_t min_contraction_size_bruteforce(const CapGraph& g);

/// True iff every canonical bipartition has a unique minimum cut.
bool has_unique_min_terminal_cuts(const CapGraph& g);

}  // namespace mimick
