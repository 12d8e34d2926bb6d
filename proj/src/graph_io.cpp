#include "satlab/graph_io.hpp"

#include <sstream>

#include "satlab/errors.hpp"

namespace satlab {

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  auto edges = nlohmann::json::array();
  for (auto [u, v] : g.edge_list()) edges.push_back({u, v});
  j["edges"] = edges;
  if (g.has_labels()) {
    nlohmann::json labels = nlohmann::json::object();
    for (int v = 0; v < g.order(); ++v)
      if (!g.label(v).empty()) labels[std::to_string(v)] = g.label(v);
    j["labels"] = labels;
  }
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("graph json: expected object with integer 'n'");
  int n = j["n"].get<int>();
  if (n < 0) throw ParseError("graph json: n must be >= 0");
  Graph g(n);
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ParseError("graph json: 'edges' must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        throw ParseError("graph json: each edge must be a pair of integers");
      int u = e[0].get<int>(), v = e[1].get<int>();
      if (u < 0 || v < 0 || u >= n || v >= n || u == v)
        throw ParseError("graph json: edge endpoint out of range");
      g.add_edge(u, v);
    }
  }
  if (j.contains("labels")) {
    if (!j["labels"].is_object())
      throw ParseError("graph json: 'labels' must be an object");
    for (auto it = j["labels"].begin(); it != j["labels"].end(); ++it) {
      int v;
      try {
        v = std::stoi(it.key());
      } catch (const std::exception&) {
        throw ParseError("graph json: label key must be a vertex id");
      }
      if (v < 0 || v >= n) throw ParseError("graph json: label vertex out of range");
      if (!it.value().is_string())
        throw ParseError("graph json: label value must be a string");
      g.set_label(v, it.value().get<std::string>());
    }
  }
  return g;
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph satlab {\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  v" << v;
    if (!g.label(v).empty()) out << " [label=\"" << g.label(v) << "\"]";
    out << ";\n";
  }
  for (auto [u, v] : g.edge_list()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

} // namespace satlab
