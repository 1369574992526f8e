#include "mimick/terminal_cuts.hpp"

#include "mimick/errors.hpp"

namespace mimick {

std::vector<TerminalSubset> canonical_subsets(std::size_t k) {
  if (k < 2) throw InputError("at least two terminals required");
  if (k > kMaxFamilyTerminals) throw GuardError("too many terminals for the full cut family");
  std::vector<TerminalSubset> out;
  const std::size_t p = cut_index_count(k);
  out.reserve(p);
  for (std::uint64_t i = 1; i <= p; ++i) out.emplace_back(i);
  return out;
}

std::size_t canonical_position(TerminalSubset u, std::size_t k) {
  if (u.empty() || u.size() >= k) throw InputError("not a proper nonempty terminal subset");
  if (u.contains(k - 1)) u = u.complement(k);
  return static_cast<std::size_t>(u.bits()) - 1;
}

TerminalCutFamily cut_family(const CapGraph& g) {
  TerminalCutFamily fam;
  fam.terminal_count = g.terminal_count();
  fam.subsets = canonical_subsets(g.terminal_count());
  fam.terminals = g.terminals();
  fam.cuts.reserve(fam.subsets.size());
  for (auto u : fam.subsets) fam.cuts.push_back(min_terminal_cut(g, u));
  return fam;
}

std::vector<Rational> mtcv(const TerminalCutFamily& fam) {
  std::vector<Rational> out;
  out.reserve(fam.size());
  for (const auto& c : fam.cuts) out.push_back(c.value);
  return out;
}

std::vector<Rational> mtcv(const CapGraph& g) { return mtcv(cut_family(g)); }

LaminarReport check_laminar(const TerminalCutFamily& fam) {
  LaminarReport report;
  using Kind = LaminarViolation::Kind;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const auto& side = fam.cuts[i].source_side;
    for (std::size_t j = 0; j < fam.terminals.size(); ++j) {
      if (side.at(fam.terminals[j]) != fam.subsets[i].contains(j)) {
        report.violations.push_back({Kind::kTerminalMismatch, i, i});
        break;
      }
    }
  }
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (std::size_t j = 0; j < fam.size(); ++j) {
      if (i == j) continue;
      const auto& si = fam.cuts[i].source_side;
      const auto& sj = fam.cuts[j].source_side;
      if (fam.subsets[i].is_subset_of(fam.subsets[j]) && !is_subset(si, sj)) {
        report.violations.push_back({Kind::kNotNested, i, j});
      }
      if (i < j && !fam.subsets[i].intersects(fam.subsets[j]) && intersects(si, sj)) {
        report.violations.push_back({Kind::kNotDisjoint, i, j});
      }
    }
  }
  return report;
}

std::string to_string(LaminarViolation::Kind kind) {
  switch (kind) {
    case LaminarViolation::Kind::kTerminalMismatch:
      return "terminal_mismatch";
    case LaminarViolation::Kind::kNotNested:
      return "not_nested";
    case LaminarViolation::Kind::kNotDisjoint:
      return "not_disjoint";
  }
  return "unknown";
}

}  // namespace mimick
