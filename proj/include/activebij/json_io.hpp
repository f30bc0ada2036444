#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "activebij/digraph.hpp"
#include "activebij/filtration.hpp"
#include "activebij/graph.hpp"

namespace activebij {

struct document_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/** Graph document format:
 *    {"vertices": N, "edges": [[tail, head], ...]}
 *  Vertices are 0-based; the position of an edge in the list is its rank in
 *  the linear order, and tail -> head is the reference direction. */
inline OrderedGraph graph_from_json(const nlohmann::json &doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw document_error("expected an object with \"vertices\" and \"edges\"");
  if (!doc["vertices"].is_number_integer())
    throw document_error("\"vertices\" must be an integer");
  int nv = doc["vertices"].get<int>();
  if (nv < 1)
    throw document_error("\"vertices\" must be positive");
  if (!doc["edges"].is_array())
    throw document_error("\"edges\" must be an array");
  std::vector<std::pair<int, int>> endpoints;
  for (const auto &e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw document_error("each edge must be a [tail, head] pair");
    int u = e[0].get<int>(), v = e[1].get<int>();
    if (u < 0 || u >= nv || v < 0 || v >= nv)
      throw document_error("edge endpoint out of range");
    endpoints.push_back({u, v});
  }
  if (endpoints.size() > 32)
    throw document_error("at most 32 edges are supported");
  OrderedGraph g = OrderedGraph::from_endpoints(nv, endpoints);
  if (!g.is_connected())
    throw document_error("graph must be connected");
  return g;
}

inline OrderedGraph graph_from_json_text(const std::string &text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw document_error(std::string("invalid JSON: ") + e.what());
  }
  return graph_from_json(doc);
}

inline nlohmann::json graph_to_json(const OrderedGraph &g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge &e : g.edges())
    edges.push_back({e.u, e.v});
  return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

inline nlohmann::json edge_set_to_json(EdgeSet s) {
  nlohmann::json a = nlohmann::json::array();
  for (int e : s)
    a.push_back(e);
  return a;
}

inline EdgeSet edge_set_from_json(const nlohmann::json &a, const OrderedGraph &g) {
  if (!a.is_array())
    throw document_error("edge set must be an array of edge ranks");
  EdgeSet s;
  for (const auto &v : a) {
    if (!v.is_number_integer())
      throw document_error("edge rank must be an integer");
    int e = v.get<int>();
    if (e < 1 || !g.live().contains(e))
      throw document_error("edge rank out of range");
    s.insert(e);
  }
  return s;
}

inline nlohmann::json filtration_to_json(const Filtration &f) {
  nlohmann::json cyc = nlohmann::json::array(), acy = nlohmann::json::array();
  for (const EdgeSet &s : f.cyclic)
    cyc.push_back(edge_set_to_json(s));
  for (const EdgeSet &s : f.acyclic)
    acy.push_back(edge_set_to_json(s));
  return {{"cyclic", cyc}, {"acyclic", acy}};
}

inline nlohmann::json partition_to_json(const ActivePartition &p) {
  nlohmann::json parts = nlohmann::json::array();
  for (const Part &pt : p.parts)
    parts.push_back({{"min", pt.min_edge},
                     {"edges", edge_set_to_json(pt.edges)},
                     {"cyclic", pt.cyclic}});
  return parts;
}

}  // namespace activebij
