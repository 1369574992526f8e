#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mimick/graph.hpp"

namespace mimick {

/// Subset of a graph's terminals as a bitmask over terminal positions
/// (bit j is the j-th entry of CapGraph::terminals()).
class TerminalSubset {
 public:
  static constexpr std::size_t kMaxTerminals = 63;

  constexpr TerminalSubset() = default;
  constexpr explicit TerminalSubset(std::uint64_t bits) : bits_(bits) {}

  /// Throws InputError if a name is unknown or not a terminal.
  static TerminalSubset from_names(const CapGraph& g, std::span<const std::string> names);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t pos) const { return (bits_ >> pos) & 1U; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool is_subset_of(TerminalSubset o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(TerminalSubset o) const { return (bits_ & o.bits_) != 0; }
  constexpr TerminalSubset complement(std::size_t k) const {
    return TerminalSubset(~bits_ & ((std::uint64_t{1} << k) - 1));
  }

  std::vector<std::string> names(const CapGraph& g) const;
  /// Indicator over all vertices of g.
  VertexSet vertices(const CapGraph& g) const;

  friend constexpr bool operator==(TerminalSubset, TerminalSubset) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace mimick
