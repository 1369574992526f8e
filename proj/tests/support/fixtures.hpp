#pragma once

#include <string>
#include <vector>

#include "mimick/graph.hpp"
#include "mimick/graph_io.hpp"

namespace mimick::testing {

inline CapGraph star(std::int64_t ca, std::int64_t cb, std::int64_t cc) {
  return CapGraph::create({"a", "b", "c", "s"}, {"a", "b", "c"},
                          {{"a", "s", Rational(ca)}, {"b", "s", Rational(cb)}, {"c", "s", Rational(cc)}});
}

/// a-s:1, b-s:2, c-s:3 with K = (a, b, c).
inline CapGraph star3() { return star(1, 2, 3); }

/// a-s:1, b-s:2, c-s:4; every terminal cut is unique.
inline CapGraph star3_prime() { return star(1, 2, 4); }

/// a-b:5, K = (a, b).
inline CapGraph edge2() { return CapGraph::create({"a", "b"}, {"a", "b"}, {{"a", "b", Rational(5)}}); }

/// a-x:3, x-y:1, y-b:2, K = (a, b).
inline CapGraph path4() {
  return CapGraph::create({"a", "x", "y", "b"}, {"a", "b"},
                          {{"a", "x", Rational(3)}, {"x", "y", Rational(1)}, {"y", "b", Rational(2)}});
}

/// Unit triangle on terminals a, b, c.
inline CapGraph triangle() {
  return CapGraph::create({"a", "b", "c"}, {"a", "b", "c"},
                          {{"a", "b", Rational(1)}, {"b", "c", Rational(1)}, {"a", "c", Rational(1)}});
}

/// Three terminals and no edges.
inline CapGraph isolated3() { return CapGraph::create({"a", "b", "c"}, {"a", "b", "c"}, {}); }

inline std::vector<std::string> names(std::initializer_list<const char*> list) {
  return {list.begin(), list.end()};
}

}  // namespace mimick::testing
