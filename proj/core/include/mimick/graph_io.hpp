#pragma once

#include <span>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "mimick/graph.hpp"

namespace mimick {

using Json = nlohmann::ordered_json;

// Graph document:
//   {"vertices": [..], "terminals": [..], "edges": [{"u":..,"v":..,"cap":"p/q"}, ..]}
// An optional "allow_negative": true marks star-triangle outputs whose
// capacities may be negative. Capacities are strings ("5", "-1/2"); JSON
// integers are accepted on input.

CapGraph graph_from_json(const Json& doc);
Json graph_to_json(const CapGraph& g);

/// Throws InputError for malformed JSON or an invalid graph.
CapGraph parse_graph(std::string_view text);
/// Canonical, deterministic rendering; parse_graph inverts it.
std::string serialize_graph(const CapGraph& g);

// Partition document: {"clusters": [{"id": "..", "members": [..]}, ..]}

VertexPartition partition_from_json(const CapGraph& g, const Json& doc);
Json partition_to_json(const CapGraph& g, const VertexPartition& part);

Json rationals_to_json(std::span<const Rational> values);
Rational rational_from_json(const Json& value);

/// Parses text as JSON, converting parse failures to InputError.
Json parse_json(std::string_view text);

}  // namespace mimick
