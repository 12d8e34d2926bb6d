#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satlab/vertex_set.hpp"

namespace satlab {

struct GraphStats {
  int n = 0;
  long long e = 0;
  std::optional<int> min_degree;  // absent for the empty graph
  std::optional<int> max_degree;
  std::vector<int> degree_sequence;  // sorted descending
};

// Simple undirected graph on vertices 0..n-1, adjacency kept as one
// VertexSet row per vertex. Labels are optional decoration ("S", "R",
// "apex", ...) that constructions attach and blow-ups carry along.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)), labels_(n) {}

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  long long edge_count() const;

  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  const std::string& label(int v) const { return labels_[v]; }
  void set_label(int v, const std::string& s) { labels_[v] = s; }
  bool has_labels() const;

  std::vector<std::pair<int, int>> edge_list() const;  // u < v, sorted

  GraphStats stats() const;

  // Subgraph induced on s; vertices are renumbered by ascending old id.
  Graph induced(const VertexSet& s) const;

  // Copy with vertex v deleted.
  Graph without_vertex(int v) const;

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && adj_ == o.adj_;  // labels not part of identity
  }

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

// Replace each vertex i by multiplicities[i] pairwise non-adjacent copies;
// copies inherit adjacency and label. Zero deletes the vertex. Throws
// InvalidMultiplicity on negative entries or length mismatch.
Graph blow_up(const Graph& g, const std::vector<int>& multiplicities);

// Join s fresh vertices to everything (including each other). The new
// vertices get label "cone".
Graph add_conical(const Graph& g, int s);

// Relabel vertices: perm[old] = new position. Must be a bijection.
Graph permuted(const Graph& g, const std::vector<int>& perm);

} // namespace satlab
