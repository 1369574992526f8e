#include "mimick/graph_io.hpp"

#include <utility>

#include "mimick/errors.hpp"

namespace mimick {

namespace {

const Json& require(const Json& obj, const char* key) {
  if (!obj.is_object()) throw InputError("expected JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

std::string require_string(const Json& value, const char* what) {
  if (!value.is_string()) throw InputError(std::string(what) + " must be a string");
  return value.get<std::string>();
}

std::vector<std::string> string_array(const Json& value, const char* what) {
  if (!value.is_array()) throw InputError(std::string("'") + what + "' must be an array");
  std::vector<std::string> out;
  out.reserve(value.size());
  for (const auto& item : value) out.push_back(require_string(item, what));
  return out;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Rational rational_from_json(const Json& value) {
  try {
    if (value.is_string()) return Rational::parse(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  throw InputError("capacity must be an integer or a \"p/q\" string, got " + value.dump());
}

CapGraph graph_from_json(const Json& doc) {
  auto vertices = string_array(require(doc, "vertices"), "vertices");
  auto terminals = string_array(require(doc, "terminals"), "terminals");
  const Json& edges_json = require(doc, "edges");
  if (!edges_json.is_array()) throw InputError("'edges' must be an array");

  auto policy = CapacityPolicy::kNonNegative;
  if (auto it = doc.find("allow_negative"); it != doc.end()) {
    if (!it->is_boolean()) throw InputError("'allow_negative' must be a boolean");
    if (it->get<bool>()) policy = CapacityPolicy::kAllowNegative;
  }

  std::vector<EdgeSpec> edges;
  edges.reserve(edges_json.size());
  for (const auto& e : edges_json) {
    edges.push_back(EdgeSpec{require_string(require(e, "u"), "edge endpoint 'u'"),
                             require_string(require(e, "v"), "edge endpoint 'v'"),
                             rational_from_json(require(e, "cap"))});
  }
  return CapGraph::create(std::move(vertices), terminals, edges, policy);
}

Json graph_to_json(const CapGraph& g) {
  Json doc = Json::object();
  doc["vertices"] = g.vertex_names();
  doc["terminals"] = g.terminal_names();
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    edges.push_back(Json{{"u", g.name(e.u)}, {"v", g.name(e.v)}, {"cap", e.cap.to_string()}});
  }
  doc["edges"] = std::move(edges);
  if (g.policy() == CapacityPolicy::kAllowNegative) doc["allow_negative"] = true;
  return doc;
}

CapGraph parse_graph(std::string_view text) { return graph_from_json(parse_json(text)); }

std::string serialize_graph(const CapGraph& g) { return graph_to_json(g).dump(2) + "\n"; }

VertexPartition partition_from_json(const CapGraph& g, const Json& doc) {
  const Json& clusters = require(doc, "clusters");
  if (!clusters.is_array()) throw InputError("'clusters' must be an array");
  std::vector<std::pair<std::string, std::vector<std::string>>> spec;
  for (const auto& c : clusters) {
    spec.emplace_back(require_string(require(c, "id"), "cluster id"),
                      string_array(require(c, "members"), "members"));
  }
  return VertexPartition::from_members(g, spec);
}

Json partition_to_json(const CapGraph& g, const VertexPartition& part) {
  Json clusters = Json::array();
  for (std::size_t c = 0; c < part.cluster_count(); ++c) {
    Json members = Json::array();
    for (VertexId v : part.members(c)) members.push_back(g.name(v));
    clusters.push_back(Json{{"id", part.cluster_ids()[c]}, {"members", std::move(members)}});
  }
  return Json{{"clusters", std::move(clusters)}};
}

Json rationals_to_json(std::span<const Rational> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

}  // namespace mimick
