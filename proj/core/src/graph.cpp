#include "mimick/graph.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>
#include <utility>

#include "mimick/errors.hpp"

namespace mimick {

CapGraph CapGraph::create(std::vector<std::string> vertices, const std::vector<std::string>& terminals,
                          const std::vector<EdgeSpec>& edges, CapacityPolicy policy) {
  std::unordered_map<std::string, VertexId> index;
  for (VertexId i = 0; i < vertices.size(); ++i) {
    if (!index.emplace(vertices[i], i).second) {
      throw InputError("duplicate vertex '" + vertices[i] + "'");
    }
  }
  auto lookup = [&](const std::string& name, const char* where) {
    auto it = index.find(name);
    if (it == index.end()) throw InputError(std::string("unknown vertex '") + name + "' in " + where);
    return it->second;
  };

  std::vector<VertexId> term_ids;
  term_ids.reserve(terminals.size());
  for (const auto& t : terminals) term_ids.push_back(lookup(t, "terminal list"));

  std::vector<Edge> resolved;
  resolved.reserve(edges.size());
  for (const auto& e : edges) {
    resolved.push_back(Edge{lookup(e.u, "edge"), lookup(e.v, "edge"), e.cap});
  }
  return from_indices(std::move(vertices), std::move(term_ids), resolved, policy);
}

CapGraph CapGraph::from_indices(std::vector<std::string> vertices, std::vector<VertexId> terminals,
                                const std::vector<Edge>& edges, CapacityPolicy policy) {
  CapGraph g;
  g.policy_ = policy;
  g.names_ = std::move(vertices);
  const std::size_t n = g.names_.size();
  for (VertexId i = 0; i < n; ++i) {
    if (!g.index_.emplace(g.names_[i], i).second) {
      throw InputError("duplicate vertex '" + g.names_[i] + "'");
    }
  }

  if (terminals.size() < 2) throw InputError("at least two terminals required");
  g.terminal_pos_.assign(n, std::nullopt);
  for (std::size_t pos = 0; pos < terminals.size(); ++pos) {
    VertexId t = terminals[pos];
    if (t >= n) throw InputError("terminal index out of range");
    if (g.terminal_pos_[t]) throw InputError("duplicate terminal '" + g.names_[t] + "'");
    g.terminal_pos_[t] = pos;
  }
  g.terminals_ = std::move(terminals);

  std::map<std::pair<VertexId, VertexId>, std::size_t> slot;
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) throw InputError("edge endpoint out of range");
    if (e.u == e.v) throw InputError("self-loop at '" + g.names_[e.u] + "'");
    if (e.cap.is_negative() && policy == CapacityPolicy::kNonNegative) {
      throw InputError("negative capacity " + e.cap.to_string() + " on edge '" + g.names_[e.u] + "'-'" +
                       g.names_[e.v] + "'");
    }
    auto key = std::minmax(e.u, e.v);
    auto [it, fresh] = slot.emplace(key, g.edges_.size());
    if (fresh) {
      g.edges_.push_back(Edge{key.first, key.second, e.cap});
    } else {
      g.edges_[it->second].cap += e.cap;
    }
  }

  g.incidence_.assign(n, {});
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    g.incidence_[g.edges_[i].u].push_back(i);
    g.incidence_[g.edges_[i].v].push_back(i);
  }
  return g;
}

std::optional<VertexId> CapGraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId CapGraph::index_of(std::string_view name) const {
  auto id = find(name);
  if (!id) throw InputError("unknown vertex '" + std::string(name) + "'");
  return *id;
}

std::vector<std::string> CapGraph::terminal_names() const {
  std::vector<std::string> out;
  out.reserve(terminals_.size());
  for (VertexId t : terminals_) out.push_back(names_[t]);
  return out;
}

VertexId CapGraph::other_end(std::size_t edge, VertexId v) const {
  const Edge& e = edges_.at(edge);
  return e.u == v ? e.v : e.u;
}

bool CapGraph::has_negative_capacity() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.cap.is_negative(); });
}

Rational CapGraph::total_capacity() const {
  Rational sum;
  for (const auto& e : edges_) sum += abs(e.cap);
  return sum;
}

VertexPartition VertexPartition::create(std::vector<std::string> cluster_ids, std::vector<std::size_t> cluster_of) {
  std::vector<bool> hit(cluster_ids.size(), false);
  for (std::size_t c : cluster_of) {
    if (c >= cluster_ids.size()) throw InputError("cluster index out of range");
    hit[c] = true;
  }
  for (std::size_t c = 0; c < hit.size(); ++c) {
    if (!hit[c]) throw InputError("empty cluster '" + cluster_ids[c] + "'");
  }
  std::unordered_set<std::string> seen;
  for (const auto& id : cluster_ids) {
    if (!seen.insert(id).second) throw InputError("duplicate cluster id '" + id + "'");
  }
  VertexPartition p;
  p.ids_ = std::move(cluster_ids);
  p.cluster_of_ = std::move(cluster_of);
  return p;
}

VertexPartition VertexPartition::from_members(
    const CapGraph& g, const std::vector<std::pair<std::string, std::vector<std::string>>>& clusters) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cluster_of(g.vertex_count(), kUnset);
  std::vector<std::string> ids;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    ids.push_back(clusters[c].first);
    for (const auto& member : clusters[c].second) {
      VertexId v = g.index_of(member);
      if (cluster_of[v] != kUnset) throw InputError("vertex '" + member + "' assigned to two clusters");
      cluster_of[v] = c;
    }
  }
  for (VertexId v = 0; v < cluster_of.size(); ++v) {
    if (cluster_of[v] == kUnset) throw InputError("vertex '" + g.name(v) + "' not covered by partition");
  }
  return create(std::move(ids), std::move(cluster_of));
}

VertexPartition VertexPartition::identity(const CapGraph& g) {
  std::vector<std::size_t> cluster_of(g.vertex_count());
  for (VertexId v = 0; v < cluster_of.size(); ++v) cluster_of[v] = v;
  return create(g.vertex_names(), std::move(cluster_of));
}

std::vector<VertexId> VertexPartition::members(std::size_t cluster) const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < cluster_of_.size(); ++v) {
    if (cluster_of_[v] == cluster) out.push_back(v);
  }
  return out;
}

VertexSet make_vertex_set(const CapGraph& g, std::span<const std::string> names) {
  VertexSet s(g.vertex_count(), false);
  for (const auto& n : names) s[g.index_of(n)] = true;
  return s;
}

VertexSet complement(const VertexSet& s) {
  VertexSet out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = !s[i];
  return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

bool intersects(const VertexSet& a, const VertexSet& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && b[i]) return true;
  }
  return false;
}

std::vector<std::string> member_names(const CapGraph& g, const VertexSet& s) {
  std::vector<std::string> out;
  for (VertexId v = 0; v < s.size(); ++v) {
    if (s[v]) out.push_back(g.name(v));
  }
  return out;
}

Rational cut_value(const CapGraph& g, const VertexSet& side) {
  if (side.size() != g.vertex_count()) throw InputError("vertex set size does not match graph");
  Rational sum;
  for (const auto& e : g.edges()) {
    if (side[e.u] != side[e.v]) sum += e.cap;
  }
  return sum;
}

Rational cut_value(const CapGraph& g, std::span<const std::string> side) {
  return cut_value(g, make_vertex_set(g, side));
}

CapGraph contract(const CapGraph& g, const VertexPartition& part) {
  if (part.vertex_count() != g.vertex_count()) throw InputError("partition does not cover the graph");

  // Order clusters by smallest member; the first scan over vertices does it.
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> rank(part.cluster_count(), kUnset);
  std::vector<std::size_t> order;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::size_t c = part.cluster_of(v);
    if (rank[c] == kUnset) {
      rank[c] = order.size();
      order.push_back(c);
    }
  }

  std::vector<std::string> names(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) names[r] = part.cluster_ids()[order[r]];
  std::vector<std::optional<VertexId>> holder(order.size());
  for (VertexId t : g.terminals()) {
    std::size_t r = rank[part.cluster_of(t)];
    if (holder[r]) {
      throw InputError("terminal merge forbidden: '" + g.name(*holder[r]) + "' and '" + g.name(t) +
                       "' share a cluster");
    }
    holder[r] = t;
    names[r] = g.name(t);
  }

  std::vector<VertexId> terminals;
  for (VertexId t : g.terminals()) terminals.push_back(rank[part.cluster_of(t)]);

  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    std::size_t a = rank[part.cluster_of(e.u)];
    std::size_t b = rank[part.cluster_of(e.v)];
    if (a != b) edges.push_back(Edge{a, b, e.cap});
  }
  return CapGraph::from_indices(std::move(names), std::move(terminals), edges, g.policy());
}

}  // namespace mimick
