#include "mimick/tree.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <unordered_set>

#include "mimick/errors.hpp"

namespace mimick {

namespace {

std::size_t component_count(const CapGraph& g) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::size_t components = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    ++components;
    std::vector<VertexId> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (std::size_t e : g.incident(x)) {
        VertexId y = g.other_end(e, x);
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  return components;
}

// Mutable edge list used while reshaping a tree.
struct Workbench {
  std::vector<std::string> names;
  std::vector<VertexId> terminals;
  std::vector<Edge> edges;
  std::vector<bool> edge_alive;

  std::vector<std::vector<std::size_t>> incidence() const {
    std::vector<std::vector<std::size_t>> inc(names.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!edge_alive[i]) continue;
      inc[edges[i].u].push_back(i);
      inc[edges[i].v].push_back(i);
    }
    return inc;
  }

  VertexId add_vertex(const std::string& name) {
    names.push_back(name);
    return names.size() - 1;
  }

  std::size_t add_edge(VertexId u, VertexId v, Rational cap) {
    edges.push_back(Edge{u, v, cap});
    edge_alive.push_back(true);
    return edges.size() - 1;
  }

  void move_endpoint(std::size_t e, VertexId from, VertexId to) {
    if (edges[e].u == from) {
      edges[e].u = to;
    } else {
      edges[e].v = to;
    }
  }

  CapGraph build(const std::vector<bool>& keep) const {
    std::vector<VertexId> remap(names.size(), 0);
    std::vector<std::string> kept;
    for (VertexId v = 0; v < names.size(); ++v) {
      if (keep[v]) {
        remap[v] = kept.size();
        kept.push_back(names[v]);
      }
    }
    std::vector<VertexId> terms;
    for (VertexId t : terminals) terms.push_back(remap[t]);
    std::vector<Edge> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edge_alive[i]) out.push_back(Edge{remap[edges[i].u], remap[edges[i].v], edges[i].cap});
    }
    return CapGraph::from_indices(std::move(kept), std::move(terms), out);
  }
};

Workbench workbench_of(const CapGraph& g) {
  Workbench wb;
  wb.names = g.vertex_names();
  wb.terminals = g.terminals();
  wb.edges = g.edges();
  wb.edge_alive.assign(wb.edges.size(), true);
  return wb;
}

std::string fresh_name(std::size_t& counter, const std::unordered_set<std::string>& taken) {
  while (true) {
    std::string name = "t" + std::to_string(counter++);
    if (taken.count(name) == 0) return name;
  }
}

void require_tree(const CapGraph& t) {
  if (!is_tree(t)) throw InputError("input is not a tree");
}

}  // namespace

bool is_tree(const CapGraph& g) {
  return g.vertex_count() >= 1 && g.edge_count() + 1 == g.vertex_count() && component_count(g) == 1;
}

bool is_forest(const CapGraph& g) { return g.edge_count() + component_count(g) == g.vertex_count(); }

bool is_cactus(const CapGraph& g) {
  if (component_count(g) != 1) return false;
  // Tarjan's biconnected components; a cactus has every block equal to a
  // single edge or a simple cycle (as many edges as vertices).
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> disc(n, 0);
  std::vector<std::size_t> low(n, 0);
  std::size_t timer = 0;
  std::vector<std::size_t> edge_stack;
  bool ok = true;

  std::function<void(VertexId, std::optional<std::size_t>)> dfs = [&](VertexId v, std::optional<std::size_t> via) {
    disc[v] = low[v] = ++timer;
    for (std::size_t e : g.incident(v)) {
      if (via && e == *via) continue;
      VertexId w = g.other_end(e, v);
      if (disc[w] == 0) {
        edge_stack.push_back(e);
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::unordered_set<VertexId> block_vertices;
          std::size_t block_edges = 0;
          while (true) {
            std::size_t top = edge_stack.back();
            edge_stack.pop_back();
            ++block_edges;
            block_vertices.insert(g.edges()[top].u);
            block_vertices.insert(g.edges()[top].v);
            if (top == e) break;
          }
          if (block_edges > 1 && block_edges != block_vertices.size()) ok = false;
        }
      } else if (disc[w] < disc[v]) {
        edge_stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  dfs(0, std::nullopt);
  return ok;
}

CapGraph reduce_tree(const CapGraph& t) {
  require_tree(t);
  Workbench wb = workbench_of(t);
  const std::size_t n = wb.names.size();
  std::vector<bool> alive(n, true);
  auto inc = wb.incidence();

  auto drop_edge = [&](std::size_t e) {
    wb.edge_alive[e] = false;
    for (VertexId end : {wb.edges[e].u, wb.edges[e].v}) {
      auto& list = inc[end];
      list.erase(std::find(list.begin(), list.end(), e));
    }
  };

  std::vector<VertexId> work;
  for (VertexId v = n; v-- > 0;) work.push_back(v);
  while (!work.empty()) {
    VertexId x = work.back();
    work.pop_back();
    if (!alive[x] || t.is_terminal(x) || inc[x].size() > 2) continue;
    if (inc[x].size() <= 1) {
      // Leaf (or isolated) Steiner vertex: no cut ever needs it.
      for (std::size_t e : std::vector<std::size_t>(inc[x])) {
        VertexId y = wb.edges[e].u == x ? wb.edges[e].v : wb.edges[e].u;
        drop_edge(e);
        work.push_back(y);
      }
      alive[x] = false;
      continue;
    }
    std::size_t e1 = inc[x][0];
    std::size_t e2 = inc[x][1];
    VertexId u = wb.edges[e1].u == x ? wb.edges[e1].v : wb.edges[e1].u;
    VertexId w = wb.edges[e2].u == x ? wb.edges[e2].v : wb.edges[e2].u;
    Rational cap = std::min(wb.edges[e1].cap, wb.edges[e2].cap);
    drop_edge(e1);
    drop_edge(e2);
    alive[x] = false;
    std::size_t e = wb.add_edge(u, w, cap);
    inc[u].push_back(e);
    inc[w].push_back(e);
  }
  return wb.build(alive);
}

std::vector<VertexId> TernaryTree::internal_in_order() const {
  std::vector<VertexId> out;
  std::function<void(VertexId)> walk = [&](VertexId v) {
    const auto& kids = children[v];
    if (kids.empty()) return;
    walk(kids[0]);
    if (!graph.is_terminal(v)) out.push_back(v);
    for (std::size_t i = 1; i < kids.size(); ++i) walk(kids[i]);
  };
  walk(root);
  return out;
}

TernaryTree ternarize(const CapGraph& t) {
  CapGraph reduced = reduce_tree(t);
  const VertexId last = reduced.terminals().back();

  if (reduced.vertex_count() == 2) {
    TernaryTree out{reduced, last, std::vector<std::vector<VertexId>>(2)};
    out.children[last].push_back(reduced.other_end(reduced.incident(last).front(), last));
    return out;
  }

  Workbench wb = workbench_of(reduced);
  std::unordered_set<std::string> taken(wb.names.begin(), wb.names.end());
  std::size_t counter = 0;
  auto new_vertex = [&]() {
    std::string name = fresh_name(counter, taken);
    taken.insert(name);
    return wb.add_vertex(name);
  };
  auto incident_sum = [&](const std::vector<std::size_t>& edges) {
    Rational s;
    for (std::size_t e : edges) s += wb.edges[e].cap;
    return s;
  };

  // Terminals become leaves hanging off a Steiner stand-in.
  {
    auto inc = wb.incidence();
    for (VertexId term : reduced.terminals()) {
      if (inc[term].size() < 2) continue;
      VertexId stand_in = new_vertex();
      for (std::size_t e : inc[term]) wb.move_endpoint(e, term, stand_in);
      wb.add_edge(term, stand_in, incident_sum(inc[term]));
    }
  }

  // Split Steiner vertices of degree >= 4 into chains of degree-3 vertices.
  {
    auto inc = wb.incidence();
    const std::size_t before = wb.names.size();
    for (VertexId v = 0; v < before; ++v) {
      if (reduced.vertex_count() > v && reduced.is_terminal(v)) continue;
      const auto& edges = inc[v];
      if (edges.size() < 4) continue;
      const Rational heavy = incident_sum(edges);
      VertexId cur = v;
      for (std::size_t i = 2; i + 2 <= edges.size(); ++i) {
        VertexId next = new_vertex();
        wb.add_edge(cur, next, heavy);
        wb.move_endpoint(edges[i], v, next);
        cur = next;
      }
      wb.move_endpoint(edges.back(), v, cur);
    }
  }

  TernaryTree out{wb.build(std::vector<bool>(wb.names.size(), true)), 0, {}};
  const CapGraph& g = out.graph;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::size_t deg = g.incident(v).size();
    if (g.is_terminal(v) ? deg != 1 : deg != 3) throw std::logic_error("ternarize produced a non-ternary tree");
  }

  out.root = g.other_end(g.incident(last).front(), last);
  out.children.assign(g.vertex_count(), {});
  std::vector<std::size_t> height(g.vertex_count(), 0);
  std::function<void(VertexId, VertexId)> orient = [&](VertexId v, VertexId parent) {
    for (std::size_t e : g.incident(v)) {
      VertexId w = g.other_end(e, v);
      if (w == parent) continue;
      orient(w, v);
      out.children[v].push_back(w);
      height[v] = std::max(height[v], height[w] + 1);
    }
    std::stable_sort(out.children[v].begin(), out.children[v].end(),
                     [&](VertexId a, VertexId b) { return height[a] > height[b]; });
  };
  orient(out.root, last);
  return out;
}

namespace {

// Exact maximum independent set over the internal vertices, by the usual
// take/skip recurrence on the rooted tree. Ties go to taking the vertex.
std::vector<bool> max_independent_internal(const TernaryTree& t) {
  const std::size_t n = t.graph.vertex_count();
  std::vector<bool> chosen(n, false);
  if (t.graph.is_terminal(t.root)) return chosen;
  std::vector<std::size_t> take(n, 0), skip(n, 0);
  std::vector<VertexId> order;  // preorder
  std::vector<VertexId> stack{t.root};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (VertexId c : t.children[v]) {
      if (!t.graph.is_terminal(c)) stack.push_back(c);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    VertexId v = *it;
    take[v] = 1;
    for (VertexId c : t.children[v]) {
      if (t.graph.is_terminal(c)) continue;
      take[v] += skip[c];
      skip[v] += std::max(take[c], skip[c]);
    }
  }
  std::vector<bool> parent_taken(n, false);
  for (VertexId v : order) {
    chosen[v] = !parent_taken[v] && take[v] >= skip[v];
    for (VertexId c : t.children[v]) parent_taken[c] = chosen[v];
  }
  return chosen;
}

}  // namespace

CactusNetwork y_delta_reduce(const TernaryTree& t, YDeltaOptions options) {
  const CapGraph& g = t.graph;
  if (!is_tree(g)) throw InputError("input is not a tree");
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::size_t deg = g.incident(v).size();
    bool ok = g.is_terminal(v) ? deg == 1 : deg == 3;
    if (!ok && g.vertex_count() > 2) throw InputError("input is not ternarized");
  }

  const std::size_t n = g.vertex_count();
  std::vector<std::map<VertexId, Rational>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e.u][e.v] += e.cap;
    adj[e.v][e.u] += e.cap;
  }
  std::vector<bool> alive(n, true);
  CactusNetwork out{g, false, 0, 0};
  const std::vector<bool> chosen = options.selection == YDeltaSelection::kMaxIndependent
                                       ? max_independent_internal(t)
                                       : std::vector<bool>(n, true);

  for (VertexId x : t.internal_in_order()) {
    if (!chosen[x] || adj[x].size() != 3) continue;
    auto it = adj[x].begin();
    VertexId u = it->first;
    Rational cu = it->second;
    ++it;
    VertexId v = it->first;
    Rational cv = it->second;
    ++it;
    VertexId w = it->first;
    Rational cw = it->second;

    if (options.clamp) {
      auto clamp = [&](Rational& leg, const Rational& a, const Rational& b) {
        if (leg > a + b) {
          leg = a + b;
          ++out.clamps;
        }
      };
      clamp(cu, cv, cw);
      clamp(cv, cu, cw);
      clamp(cw, cu, cv);
    }
    const Rational half(1, 2);
    auto link = [&](VertexId a, VertexId b, const Rational& cap) {
      adj[a][b] += cap;
      adj[b][a] += cap;
    };
    for (VertexId y : {u, v, w}) adj[y].erase(x);
    adj[x].clear();
    alive[x] = false;
    link(u, v, (cu + cv - cw) * half);
    link(v, w, (cv + cw - cu) * half);
    link(u, w, (cu + cw - cv) * half);
    ++out.transforms;
  }

  std::vector<VertexId> remap(n, 0);
  std::vector<std::string> names;
  for (VertexId v = 0; v < n; ++v) {
    if (alive[v]) {
      remap[v] = names.size();
      names.push_back(g.name(v));
    }
  }
  std::vector<VertexId> terminals;
  for (VertexId term : g.terminals()) terminals.push_back(remap[term]);
  std::vector<Edge> edges;
  for (VertexId a = 0; a < n; ++a) {
    for (const auto& [b, cap] : adj[a]) {
      if (a < b) edges.push_back(Edge{remap[a], remap[b], cap});
    }
  }
  out.graph = CapGraph::from_indices(std::move(names), std::move(terminals), edges,
                                     options.clamp ? CapacityPolicy::kNonNegative : CapacityPolicy::kAllowNegative);
  out.is_cactus = is_cactus(out.graph);
  return out;
}

std::size_t cactus_size_bound(std::size_t k) {
  // floor((13k - 12) / 8)
  const auto k64 = static_cast<std::int64_t>(k);
  const std::int64_t bound = floor(Rational(13 * k64 - 12, 8));
  return static_cast<std::size_t>(std::max<std::int64_t>(2, bound));
}

Json cactus_metadata(const CactusNetwork& c) {
  return Json{{"clamps", c.clamps},
              {"is_cactus", c.is_cactus},
              {"size_bound", std::to_string(cactus_size_bound(c.graph.terminal_count()))},
              {"vertices", c.graph.vertex_count()},
              {"transforms", c.transforms}};
}

Rational tree_min_terminal_cut(const CapGraph& t, TerminalSubset u) {
  if (!is_forest(t)) throw InputError("input is not a tree");
  const std::size_t k = t.terminal_count();
  if (u.empty() || u.size() >= k || !u.is_subset_of(TerminalSubset((std::uint64_t{1} << k) - 1))) {
    throw InputError("not a proper nonempty terminal subset");
  }

  // best[v][s]: cheapest subtree cost with v on side s (1 = U's side).
  using Cost = std::optional<Rational>;
  const std::size_t n = t.vertex_count();
  std::vector<std::array<Cost, 2>> best(n);
  std::vector<bool> seen(n, false);
  Rational total;

  for (VertexId root = 0; root < n; ++root) {
    if (seen[root]) continue;
    // Iterative DFS; `order` lists vertices parent-before-child.
    std::vector<VertexId> order;
    std::vector<std::pair<VertexId, std::size_t>> parent_edge(n, {n, 0});
    std::vector<VertexId> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      order.push_back(x);
      for (std::size_t e : t.incident(x)) {
        VertexId y = t.other_end(e, x);
        if (!seen[y]) {
          seen[y] = true;
          parent_edge[y] = {x, e};
          stack.push_back(y);
        }
      }
    }
    for (VertexId x : order) {
      for (int s = 0; s < 2; ++s) best[x][s] = Rational(0);
      if (auto pos = t.terminal_position(x)) best[x][u.contains(*pos) ? 0 : 1].reset();
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      VertexId x = *it;
      auto [parent, e] = parent_edge[x];
      if (parent == n) continue;
      const Rational& cap = t.edges()[e].cap;
      for (int s = 0; s < 2; ++s) {
        if (!best[parent][s]) continue;
        Cost child;
        if (best[x][s]) child = *best[x][s];
        if (best[x][1 - s] && (!child || *best[x][1 - s] + cap < *child)) child = *best[x][1 - s] + cap;
        best[parent][s] = *best[parent][s] + *child;
      }
    }
    Cost component;
    for (int s = 0; s < 2; ++s) {
      if (best[root][s] && (!component || *best[root][s] < *component)) component = best[root][s];
    }
    total += *component;
  }
  return total;
}

}  // namespace mimick
