#include "mimick/mimicking.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "mimick/errors.hpp"
#include "mimick/mincut.hpp"

namespace mimick {

namespace {

// Prefixes '_' until the name avoids `taken`.
std::string fresh_name(std::string name, const std::unordered_set<std::string>& taken) {
  while (taken.count(name) != 0) name.insert(name.begin(), '_');
  return name;
}

std::unordered_set<std::string> name_set(const std::vector<std::string>& names) {
  return {names.begin(), names.end()};
}

}  // namespace

std::vector<TerminalSubset> CutSignature::members() const {
  std::vector<TerminalSubset> out;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out.emplace_back(i + 1);
  }
  return out;
}

std::vector<CutSignature> signatures(const CapGraph& g, const TerminalCutFamily& fam) {
  std::vector<CutSignature> out(g.vertex_count(), CutSignature{std::vector<bool>(fam.size(), false)});
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const auto& side = fam.cuts[i].source_side;
    if (side.size() != g.vertex_count()) throw InputError("cut family does not belong to this graph");
    for (VertexId v = 0; v < side.size(); ++v) out[v].bits[i] = side[v];
  }
  return out;
}

bool is_upward_closed(const CutSignature& sig) {
  const std::size_t p = sig.bits.size();
  for (std::size_t i = 0; i < p; ++i) {
    if (!sig.bits[i]) continue;
    TerminalSubset lower(i + 1);
    for (std::size_t j = 0; j < p; ++j) {
      if (!sig.bits[j] && lower.is_subset_of(TerminalSubset(j + 1))) return false;
    }
  }
  return true;
}

bool is_pairwise_intersecting(const CutSignature& sig) {
  auto members = sig.members();
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (!members[a].intersects(members[b])) return false;
    }
  }
  return true;
}

bool shares_common_element(const CutSignature& sig) {
  auto members = sig.members();
  if (members.empty()) return true;
  std::uint64_t common = ~std::uint64_t{0};
  for (auto m : members) {
    bool minimal = std::none_of(members.begin(), members.end(),
                                [&](TerminalSubset o) { return o != m && o.is_subset_of(m); });
    if (minimal) common &= m.bits();
  }
  return common != 0;
}

MimickingNetwork build_mimicking_network(const CapGraph& g) { return build_mimicking_network(g, cut_family(g)); }

MimickingNetwork build_mimicking_network(const CapGraph& g, const TerminalCutFamily& fam) {
  auto sigs = signatures(g, fam);

  // Vertices are scanned in index order, so clusters come out ordered by
  // their smallest member.
  std::map<std::vector<bool>, std::size_t> cluster_by_bits;
  std::vector<std::size_t> cluster_of(g.vertex_count());
  std::vector<CutSignature> table;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto [it, fresh] = cluster_by_bits.emplace(sigs[v].bits, table.size());
    if (fresh) table.push_back(sigs[v]);
    cluster_of[v] = it->second;
  }

  auto terminal_names = name_set(g.terminal_names());
  std::vector<std::string> ids(table.size());
  for (std::size_t c = 0; c < ids.size(); ++c) ids[c] = fresh_name("h" + std::to_string(c), terminal_names);
  for (VertexId t : g.terminals()) ids[cluster_of[t]] = g.name(t);

  MimickingNetwork mn{contract(g, VertexPartition::create(ids, cluster_of)),
                      VertexPartition::create(ids, cluster_of), table.size(), std::move(table)};
  return mn;
}

bool edges_cross_family_cuts(const MimickingNetwork& mn) {
  return std::all_of(mn.h.edges().begin(), mn.h.edges().end(), [&](const Edge& e) {
    return mn.signature_table[e.u] != mn.signature_table[e.v];
  });
}

std::vector<std::size_t> VerificationReport::failures() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].g_value != entries[i].h_value) out.push_back(i);
  }
  return out;
}

namespace {

Rational terminal_cut_value(const CapGraph& g, TerminalSubset u) {
  const bool small = g.vertex_count() <= kBruteForceVertexLimit;
  if (g.has_negative_capacity()) {
    if (!small) throw GuardError("negative-capacity graph too large for the brute-force oracle");
    return brute_force_min_terminal_cut_value(g, u);
  }
  Rational value = min_terminal_cut(g, u).value;
  if (small && brute_force_min_terminal_cut_value(g, u) != value) {
    throw std::logic_error("max-flow engine disagrees with brute-force oracle");
  }
  return value;
}

}  // namespace

VerificationReport verify_sparsifier(const CapGraph& g, const CapGraph& h) {
  if (g.terminal_names() != h.terminal_names()) throw InputError("terminal lists differ");

  VerificationReport report;
  report.pass = true;
  report.quality = Rational(1);
  const std::size_t k = g.terminal_count();
  for (auto u : canonical_subsets(k)) {
    Rational gv = g.has_negative_capacity() ? brute_force_min_terminal_cut_value(g, u) : min_terminal_cut(g, u).value;
    Rational hv = terminal_cut_value(h, u);
    report.pass = report.pass && gv == hv;
    if (report.quality) {
      if (gv.is_zero()) {
        if (!hv.is_zero()) report.quality.reset();
      } else {
        report.quality = std::max(*report.quality, hv / gv);
      }
    }
    report.entries.push_back({u, gv, hv});
  }
  return report;
}

VerificationReport verify_mimicking(const CapGraph& g, const MimickingNetwork& mn) {
  return verify_sparsifier(g, mn.h);
}

Json report_to_json(const CapGraph& g, const VerificationReport& report) {
  Json per_index = Json::array();
  for (const auto& e : report.entries) {
    per_index.push_back(Json{{"subset", e.subset.names(g)},
                             {"g_value", e.g_value.to_string()},
                             {"h_value", e.h_value.to_string()}});
  }
  return Json{{"per_index", std::move(per_index)},
              {"quality", report.quality ? report.quality->to_string() : std::string("inf")},
              {"pass", report.pass}};
}

bool has_unique_min_terminal_cuts(const CapGraph& g) {
  for (auto u : canonical_subsets(g.terminal_count())) {
    if (!is_unique_min_terminal_cut(g, u)) return false;
  }
  return true;
}

std::size_t min_contraction_size_bruteforce(const CapGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kPartitionSearchVertexLimit) {
    throw GuardError("partition search limited to " + std::to_string(kPartitionSearchVertexLimit) +
                     " vertices, graph has " + std::to_string(n));
  }
  const auto target = mtcv(g);
  const auto subsets = canonical_subsets(g.terminal_count());
  auto taken = name_set(g.vertex_names());
  std::vector<std::string> ids;
  for (std::size_t c = 0; c < n; ++c) ids.push_back(fresh_name("~" + std::to_string(c), taken));

  auto exact = [&](const std::vector<std::size_t>& block, std::size_t blocks) {
    std::vector<std::string> names(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(blocks));
    CapGraph h = contract(g, VertexPartition::create(std::move(names), block));
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      if (min_terminal_cut(h, subsets[i]).value != target[i]) return false;
    }
    return true;
  };

  // Restricted-growth strings: vertex v joins an existing block or opens
  // block `blocks`. A block never receives a second terminal.
  std::size_t best = n;
  std::vector<std::size_t> block(n, 0);
  std::vector<bool> has_terminal(n, false);
  auto search = [&](auto&& self, VertexId v, std::size_t blocks) -> void {
    if (blocks >= best) return;
    if (v == n) {
      if (exact(block, blocks)) best = blocks;
      return;
    }
    const bool terminal = g.is_terminal(v);
    for (std::size_t b = 0; b <= blocks && b < n; ++b) {
      if (terminal && has_terminal[b]) continue;
      block[v] = b;
      const bool was = has_terminal[b];
      if (terminal) has_terminal[b] = true;
      self(self, v + 1, std::max(blocks, b + 1));
      has_terminal[b] = was;
    }
  };
  // The identity partition always works, so `best` starts at n.
  search(search, 0, 0);
  return best;
}

}  // namespace mimick
