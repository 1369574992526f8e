#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mimick/rational.hpp"

namespace mimick {

using VertexId = std::size_t;

/// Membership vector indexed by VertexId.
using VertexSet = std::vector<bool>;

/// Undirected edge between two vertex indices, stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Rational cap;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Edge given by vertex names, as read from input.
struct EdgeSpec {
  std::string u;
  std::string v;
  Rational cap;
};

enum class CapacityPolicy {
  kNonNegative,
  /// Only for graphs produced by star-triangle reduction with clamping off.
  kAllowNegative,
};

/// Capacitated undirected graph with an ordered terminal list.
///
/// Immutable once built. The last terminal plays the role of the fixed
/// terminal that canonical cut indices never contain. Parallel edges are
/// merged by summing capacities; the merged edge keeps the position of the
/// first occurrence.
class CapGraph {
 public:
  static CapGraph create(std::vector<std::string> vertices, const std::vector<std::string>& terminals,
                         const std::vector<EdgeSpec>& edges,
                         CapacityPolicy policy = CapacityPolicy::kNonNegative);

  static CapGraph from_indices(std::vector<std::string> vertices, std::vector<VertexId> terminals,
                               const std::vector<Edge>& edges,
                               CapacityPolicy policy = CapacityPolicy::kNonNegative);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t terminal_count() const { return terminals_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name(VertexId v) const { return names_.at(v); }
  std::optional<VertexId> find(std::string_view name) const;
  /// Throws InputError for an unknown name.
  VertexId index_of(std::string_view name) const;

  const std::vector<VertexId>& terminals() const { return terminals_; }
  std::vector<std::string> terminal_names() const;
  bool is_terminal(VertexId v) const { return terminal_pos_.at(v).has_value(); }
  std::optional<std::size_t> terminal_position(VertexId v) const { return terminal_pos_.at(v); }

  const std::vector<Edge>& edges() const { return edges_; }
  /// Edge indices incident to v.
  const std::vector<std::size_t>& incident(VertexId v) const { return incidence_.at(v); }
  VertexId other_end(std::size_t edge, VertexId v) const;

  CapacityPolicy policy() const { return policy_; }
  bool has_negative_capacity() const;
  /// Sum of absolute capacities.
  Rational total_capacity() const;

  friend bool operator==(const CapGraph& a, const CapGraph& b) {
    return a.names_ == b.names_ && a.terminals_ == b.terminals_ && a.edges_ == b.edges_;
  }

 private:
  CapGraph() = default;

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<VertexId> terminals_;
  std::vector<std::optional<std::size_t>> terminal_pos_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
  CapacityPolicy policy_ = CapacityPolicy::kNonNegative;
};

/// Surjective map from the vertices of a graph onto named clusters.
class VertexPartition {
 public:
  /// cluster_of[v] indexes into cluster_ids; every cluster must be hit.
  static VertexPartition create(std::vector<std::string> cluster_ids, std::vector<std::size_t> cluster_of);

  /// Builds from explicit member lists over g's vertex names; each vertex must
  /// appear in exactly one cluster.
  static VertexPartition from_members(const CapGraph& g,
                                      const std::vector<std::pair<std::string, std::vector<std::string>>>& clusters);

  static VertexPartition identity(const CapGraph& g);

  std::size_t cluster_count() const { return ids_.size(); }
  std::size_t vertex_count() const { return cluster_of_.size(); }
  const std::vector<std::string>& cluster_ids() const { return ids_; }
  std::size_t cluster_of(VertexId v) const { return cluster_of_.at(v); }
  const std::vector<std::size_t>& assignment() const { return cluster_of_; }
  std::vector<VertexId> members(std::size_t cluster) const;

  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;

 private:
  std::vector<std::string> ids_;
  std::vector<std::size_t> cluster_of_;
};

VertexSet make_vertex_set(const CapGraph& g, std::span<const std::string> names);
VertexSet complement(const VertexSet& s);
bool is_subset(const VertexSet& a, const VertexSet& b);
bool intersects(const VertexSet& a, const VertexSet& b);
std::vector<std::string> member_names(const CapGraph& g, const VertexSet& s);

/// Total capacity of edges with exactly one endpoint in `side`.
Rational cut_value(const CapGraph& g, const VertexSet& side);
Rational cut_value(const CapGraph& g, std::span<const std::string> side);

/// Contracts each cluster to one vertex, summing crossing capacities.
///
/// Clusters are ordered by their smallest member index. A cluster holding a
/// terminal takes the terminal's name, otherwise it keeps its cluster id.
/// Edges inside a cluster vanish; zero-capacity crossing edges are kept.
/// Throws InputError if a cluster holds two terminals.
CapGraph contract(const CapGraph& g, const VertexPartition& part);

}  // namespace mimick
