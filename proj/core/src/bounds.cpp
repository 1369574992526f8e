#include "mimick/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

#include "mimick/errors.hpp"
#include "mimick/mimicking.hpp"
#include "mimick/random_graphs.hpp"
#include "mimick/terminal_cuts.hpp"

namespace mimick {

std::vector<std::string> default_terminal_names(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "t" + std::to_string(i));
  }
  return names;
}

Rational gadget_epsilon_limit(std::size_t k, std::size_t index) {
  if (k < 2 || index >= cut_index_count(k)) throw InputError("cut index out of range");
  TerminalSubset u(index + 1);
  auto inside = static_cast<std::int64_t>(u.size());
  auto outside = static_cast<std::int64_t>(k) - inside;
  return std::min(Rational(1, inside), Rational(1, outside));
}

CapGraph gadget_graph(const std::vector<std::string>& terminals, std::size_t index, const Rational& epsilon) {
  const std::size_t k = terminals.size();
  Rational limit = gadget_epsilon_limit(k, index);
  if (epsilon <= Rational(0) || epsilon >= limit) {
    throw InputError("epsilon " + epsilon.to_string() + " outside (0, " + limit.to_string() + ")");
  }
  TerminalSubset u(index + 1);
  std::unordered_set<std::string> taken(terminals.begin(), terminals.end());
  auto hub = [&](std::string name) {
    while (taken.count(name) != 0) name.insert(name.begin(), '_');
    taken.insert(name);
    return name;
  };
  const std::string inner = hub("v0");
  const std::string outer = hub("u0");

  std::vector<std::string> vertices = terminals;
  vertices.push_back(outer);
  vertices.push_back(inner);
  const Rational in_cap(1, static_cast<std::int64_t>(u.size()));
  const Rational out_cap(1, static_cast<std::int64_t>(k - u.size()));
  std::vector<EdgeSpec> edges;
  for (std::size_t j = 0; j < k; ++j) {
    if (u.contains(j)) {
      edges.push_back({terminals[j], inner, in_cap});
    } else {
      edges.push_back({terminals[j], outer, out_cap});
    }
  }
  edges.push_back({outer, inner, Rational(1) - epsilon});
  return CapGraph::create(std::move(vertices), terminals, edges);
}

CapGraph convex_combine(const CapGraph& g1, const CapGraph& g2, const Rational& lambda) {
  if (g1.terminal_names() != g2.terminal_names()) throw InputError("terminal lists differ");
  if (lambda < Rational(0) || lambda > Rational(1)) throw InputError("lambda must lie in [0, 1]");

  std::vector<std::string> names = g1.terminal_names();
  std::vector<EdgeSpec> edges;
  auto absorb = [&](const CapGraph& g, const std::string& prefix, const Rational& weight) {
    auto rename = [&](VertexId v) { return g.is_terminal(v) ? g.name(v) : prefix + g.name(v); };
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!g.is_terminal(v)) names.push_back(rename(v));
    }
    for (const auto& e : g.edges()) edges.push_back({rename(e.u), rename(e.v), e.cap * weight});
  };
  absorb(g1, "g1.", lambda);
  absorb(g2, "g2.", Rational(1) - lambda);
  return CapGraph::create(std::move(names), g1.terminal_names(), edges);
}

CutMatrix cut_matrix(const CapGraph& g) {
  auto fam = cut_family(g);
  CutMatrix m;
  m.columns = g.edge_count();
  for (const auto& cut : fam.cuts) {
    std::vector<bool> row(m.columns, false);
    for (std::size_t j = 0; j < m.columns; ++j) {
      const Edge& e = g.edges()[j];
      row[j] = cut.source_side[e.u] != cut.source_side[e.v];
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

Json cut_matrix_to_json(const CutMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.rows) {
    Json row = Json::array();
    for (bool b : r) row.push_back(b ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return Json{{"columns", m.columns}, {"rows", std::move(rows)}};
}

std::size_t exact_rank(const std::vector<std::vector<Rational>>& input) {
  if (input.empty()) return 0;
  const std::size_t cols = input.front().size();
  // Clear denominators so Bareiss steps stay integral.
  std::vector<std::vector<Rational>> a;
  for (const auto& row : input) {
    if (row.size() != cols) throw InputError("ragged matrix");
    std::int64_t scale = 1;
    for (const auto& x : row) scale = std::lcm(scale, x.denominator());
    std::vector<Rational> scaled;
    for (const auto& x : row) scaled.push_back(x * Rational(scale));
    a.push_back(std::move(scaled));
  }

  std::size_t rank = 0;
  Rational prev(1);
  for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][col].is_zero()) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      }
      a[i][col] = Rational(0);
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t mtcv_rank_evidence(std::size_t k) {
  if (k < 2 || k > 5) throw InputError("rank evidence is computed for 2 <= k <= 5");
  const auto names = default_terminal_names(k);
  const std::size_t p = cut_index_count(k);

  std::vector<std::vector<Rational>> points;
  points.emplace_back(p, Rational(0));  // edgeless graph
  std::vector<std::vector<Rational>> differences;
  for (std::size_t i = 0; i < p; ++i) {
    Rational limit = gadget_epsilon_limit(k, i);
    auto coarse = mtcv(gadget_graph(names, i, limit / Rational(2)));
    auto fine = mtcv(gadget_graph(names, i, limit / Rational(4)));
    std::vector<Rational> diff(p);
    for (std::size_t j = 0; j < p; ++j) diff[j] = coarse[j] - fine[j];
    differences.push_back(std::move(diff));
    points.push_back(std::move(coarse));
    points.push_back(std::move(fine));
  }
  for (std::size_t a = 1; a < points.size(); ++a) {
    std::vector<Rational> diff(p);
    for (std::size_t j = 0; j < p; ++j) diff[j] = points[a][j] - points[0][j];
    differences.push_back(std::move(diff));
  }
  return exact_rank(differences);
}

namespace {

void require_ground(std::size_t n) {
  if (n < 1 || n > kMaxAntichainGround) {
    throw GuardError("antichain counting supports 1 <= n <= " + std::to_string(kMaxAntichainGround));
  }
}

// Extends an antichain with subsets larger than `last` (as bitmasks) that
// are incomparable with every chosen member and keep a common element when
// `common_required` is set.
std::uint64_t extend(const std::vector<std::uint32_t>& chosen_in, std::uint32_t last, std::uint32_t full,
                     std::uint32_t common, bool common_required) {
  std::uint64_t total = 0;
  std::vector<std::uint32_t> chosen = chosen_in;
  for (std::uint32_t s = last + 1; s <= full; ++s) {
    if (common_required && (common & s) == 0) continue;
    bool comparable = std::any_of(chosen.begin(), chosen.end(), [&](std::uint32_t c) {
      return (c & s) == c || (c & s) == s;
    });
    if (comparable) continue;
    chosen.push_back(s);
    total += 1 + extend(chosen, s, full, common & s, common_required);
    chosen.pop_back();
  }
  return total;
}

std::uint64_t count(std::size_t n, bool common_required) {
  require_ground(n);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  return 1 + extend({}, 0, full, full, common_required);
}

}  // namespace

std::uint64_t count_antichains(std::size_t n) { return count(n, false); }

std::uint64_t count_common_element_antichains(std::size_t n) { return count(n, true); }

BoundRow bound_row(std::size_t k, std::size_t samples, std::uint64_t seed) {
  if (k < 2 || k > 6) throw GuardError("bound rows cover 2 <= k <= 6");
  BoundRow row;
  row.k = k;
  row.z = count_common_element_antichains(k - 1);
  row.m_prime = count_antichains(k - 1);
  row.two_power = (std::uint64_t{1} << (std::uint64_t{1} << (k - 1))) - 1;

  std::mt19937_64 rng(seed + k);
  std::uniform_int_distribution<std::size_t> extra(0, 6);
  for (std::size_t s = 0; s < samples; ++s) {
    RandomGraphSpec spec;
    spec.terminals = k;
    spec.vertices = k + extra(rng);
    spec.extra_edge_probability = 0.4;
    auto mn = build_mimicking_network(random_connected_graph(rng, spec));
    row.observed_n_max = std::max(row.observed_n_max, mn.cluster_count);
  }
  return row;
}

Json bound_row_to_json(const BoundRow& row) {
  return Json{{"k", row.k},
              {"Z", row.z},
              {"M_prime", row.m_prime},
              {"two_power", row.two_power},
              {"observed_N_max", row.observed_n_max}};
}

}  // namespace mimick
