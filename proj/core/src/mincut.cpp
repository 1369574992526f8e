#include "mimick/mincut.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>

#include "mimick/errors.hpp"

namespace mimick {

std::vector<std::string> TerminalSubset::names(const CapGraph& g) const {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < g.terminal_count(); ++j) {
    if (contains(j)) out.push_back(g.name(g.terminals()[j]));
  }
  return out;
}

VertexSet TerminalSubset::vertices(const CapGraph& g) const {
  VertexSet s(g.vertex_count(), false);
  for (std::size_t j = 0; j < g.terminal_count(); ++j) {
    if (contains(j)) s[g.terminals()[j]] = true;
  }
  return s;
}

TerminalSubset TerminalSubset::from_names(const CapGraph& g, std::span<const std::string> names) {
  std::uint64_t bits = 0;
  for (const auto& n : names) {
    auto pos = g.terminal_position(g.index_of(n));
    if (!pos) throw InputError("'" + n + "' is not a terminal");
    bits |= std::uint64_t{1} << *pos;
  }
  return TerminalSubset(bits);
}

namespace {

void check_subset(const CapGraph& g, TerminalSubset u) {
  const std::size_t k = g.terminal_count();
  if (k > TerminalSubset::kMaxTerminals) throw GuardError("too many terminals");
  if (u.empty()) throw InputError("terminal subset must be nonempty");
  if (!u.is_subset_of(TerminalSubset((std::uint64_t{1} << k) - 1))) {
    throw InputError("terminal subset refers to a non-terminal position");
  }
  if (u.size() == k) throw InputError("terminal subset must be a proper subset of the terminals");
}

// Residual network with paired arcs: arc i and i^1 are mutual reverses.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : out_(nodes) {}

  void add_arc_pair(std::size_t from, std::size_t to, const Rational& cap_forward, const Rational& cap_backward) {
    out_[from].push_back(head_.size());
    head_.push_back(to);
    residual_.push_back(cap_forward);
    out_[to].push_back(head_.size());
    head_.push_back(from);
    residual_.push_back(cap_backward);
  }

  Rational max_flow(std::size_t source, std::size_t sink) {
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    Rational total;
    std::vector<std::size_t> via(out_.size());
    while (true) {
      std::fill(via.begin(), via.end(), kNone);
      std::deque<std::size_t> queue{source};
      via[source] = kNone - 1;
      while (!queue.empty() && via[sink] == kNone) {
        std::size_t x = queue.front();
        queue.pop_front();
        for (std::size_t arc : out_[x]) {
          std::size_t y = head_[arc];
          if (via[y] == kNone && residual_[arc] > Rational(0)) {
            via[y] = arc;
            queue.push_back(y);
          }
        }
      }
      if (via[sink] == kNone) return total;

      Rational bottleneck = residual_[via[sink]];
      for (std::size_t y = sink; y != source; y = head_[via[y] ^ 1]) {
        bottleneck = std::min(bottleneck, residual_[via[y]]);
      }
      for (std::size_t y = sink; y != source; y = head_[via[y] ^ 1]) {
        residual_[via[y]] -= bottleneck;
        residual_[via[y] ^ 1] += bottleneck;
      }
      total += bottleneck;
    }
  }

  std::vector<bool> reachable_from(std::size_t source) const {
    std::vector<bool> seen(out_.size(), false);
    std::vector<std::size_t> stack{source};
    seen[source] = true;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t arc : out_[x]) {
        std::size_t y = head_[arc];
        if (!seen[y] && residual_[arc] > Rational(0)) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    return seen;
  }

 private:
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::size_t> head_;
  std::vector<Rational> residual_;
};

MinCutResult minimal_cut(const CapGraph& g, TerminalSubset u) {
  if (g.has_negative_capacity()) throw InputError("max-flow requires nonnegative capacities");
  const std::size_t n = g.vertex_count();
  const std::size_t source = n;
  const std::size_t sink = n + 1;
  // Any value above the total capacity acts as an uncuttable terminal tie.
  const Rational tie = g.total_capacity() + Rational(1);

  FlowNetwork net(n + 2);
  for (const auto& e : g.edges()) {
    if (!e.cap.is_zero()) net.add_arc_pair(e.u, e.v, e.cap, e.cap);
  }
  for (std::size_t j = 0; j < g.terminal_count(); ++j) {
    VertexId t = g.terminals()[j];
    if (u.contains(j)) {
      net.add_arc_pair(source, t, tie, Rational(0));
    } else {
      net.add_arc_pair(t, sink, tie, Rational(0));
    }
  }

  MinCutResult result;
  result.value = net.max_flow(source, sink);
  auto seen = net.reachable_from(source);
  result.source_side.assign(seen.begin(), seen.begin() + static_cast<std::ptrdiff_t>(n));
  return result;
}

struct Enumeration {
  std::vector<VertexId> steiner;
  VertexSet base;
};

Enumeration prepare_enumeration(const CapGraph& g, TerminalSubset u) {
  check_subset(g, u);
  if (g.vertex_count() > kBruteForceVertexLimit) {
    throw GuardError("brute-force cut enumeration limited to " + std::to_string(kBruteForceVertexLimit) +
                     " vertices, graph has " + std::to_string(g.vertex_count()));
  }
  Enumeration en;
  en.base = u.vertices(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_terminal(v)) en.steiner.push_back(v);
  }
  return en;
}

// Walks all placements of the Steiner vertices in Gray-code order, updating
// the cut value incrementally. visit(side, value, mask) sees every placement.
template <typename Visit>
void enumerate_sides(const CapGraph& g, const Enumeration& en, Visit&& visit) {
  VertexSet side = en.base;
  Rational value = cut_value(g, side);
  const std::uint64_t count = std::uint64_t{1} << en.steiner.size();
  std::uint64_t mask = 0;
  visit(side, value, mask);
  for (std::uint64_t step = 1; step < count; ++step) {
    auto bit = static_cast<std::size_t>(std::countr_zero(step));
    VertexId v = en.steiner[bit];
    for (std::size_t e : g.incident(v)) {
      VertexId w = g.other_end(e, v);
      if (side[v] == side[w]) {
        value += g.edges()[e].cap;
      } else {
        value -= g.edges()[e].cap;
      }
    }
    side[v] = !side[v];
    mask ^= std::uint64_t{1} << bit;
    visit(side, value, mask);
  }
}

}  // namespace

MinCutResult min_terminal_cut(const CapGraph& g, TerminalSubset u) {
  check_subset(g, u);
  return minimal_cut(g, u);
}

bool is_unique_min_terminal_cut(const CapGraph& g, TerminalSubset u) {
  check_subset(g, u);
  auto from_u = minimal_cut(g, u);
  auto from_rest = minimal_cut(g, u.complement(g.terminal_count()));
  return from_u.source_side == complement(from_rest.source_side);
}

BruteForceCut brute_force_min_terminal_cut(const CapGraph& g, TerminalSubset u) {
  auto en = prepare_enumeration(g, u);
  std::optional<Rational> best;
  std::vector<std::uint64_t> masks;
  enumerate_sides(g, en, [&](const VertexSet&, const Rational& value, std::uint64_t mask) {
    if (!best || value < *best) {
      best = value;
      masks.clear();
    }
    if (value == *best) masks.push_back(mask);
  });
  std::sort(masks.begin(), masks.end());

  BruteForceCut out;
  out.value = *best;
  for (std::uint64_t mask : masks) {
    VertexSet side = en.base;
    for (std::size_t b = 0; b < en.steiner.size(); ++b) {
      if ((mask >> b) & 1U) side[en.steiner[b]] = true;
    }
    out.minimizers.push_back(std::move(side));
  }
  return out;
}

Rational brute_force_min_terminal_cut_value(const CapGraph& g, TerminalSubset u) {
  auto en = prepare_enumeration(g, u);
  std::optional<Rational> best;
  enumerate_sides(g, en, [&](const VertexSet&, const Rational& value, std::uint64_t) {
    if (!best || value < *best) best = value;
  });
  return *best;
}

}  // namespace mimick
