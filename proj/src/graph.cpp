#include "satlab/graph.hpp"

#include <algorithm>

#include "satlab/errors.hpp"

namespace satlab {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw ParameterError("add_edge: loops are not allowed");
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw ParameterError("add_edge: vertex out of range");
  adj_[u].add(v);
  adj_[v].add(u);
}

void Graph::remove_edge(int u, int v) {
  adj_[u].remove(v);
  adj_[v].remove(u);
}

long long Graph::edge_count() const {
  long long deg_sum = 0;
  for (int v = 0; v < n_; ++v) deg_sum += adj_[v].count();
  return deg_sum / 2;
}

bool Graph::has_labels() const {
  for (const auto& s : labels_)
    if (!s.empty()) return true;
  return false;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    adj_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

GraphStats Graph::stats() const {
  GraphStats st;
  st.n = n_;
  st.e = edge_count();
  st.degree_sequence.reserve(n_);
  for (int v = 0; v < n_; ++v) st.degree_sequence.push_back(degree(v));
  std::sort(st.degree_sequence.rbegin(), st.degree_sequence.rend());
  if (n_ > 0) {
    st.max_degree = st.degree_sequence.front();
    st.min_degree = st.degree_sequence.back();
  }
  return st;
}

Graph Graph::induced(const VertexSet& s) const {
  std::vector<int> keep = s.to_vector();
  Graph h(int(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i) {
    h.labels_[i] = labels_[keep[i]];
    for (size_t j = i + 1; j < keep.size(); ++j)
      if (adjacent(keep[i], keep[j])) h.add_edge(int(i), int(j));
  }
  return h;
}

Graph Graph::without_vertex(int v) const {
  VertexSet s = VertexSet::full(n_);
  s.remove(v);
  return induced(s);
}

Graph blow_up(const Graph& g, const std::vector<int>& multiplicities) {
  if (int(multiplicities.size()) != g.order())
    throw InvalidMultiplicity("blow_up: multiplicity vector length mismatch");
  for (int m : multiplicities)
    if (m < 0) throw InvalidMultiplicity("blow_up: negative multiplicity");

  int total = 0;
  std::vector<int> base(g.order());
  for (int v = 0; v < g.order(); ++v) {
    base[v] = total;
    total += multiplicities[v];
  }
  Graph h(total);
  for (int v = 0; v < g.order(); ++v)
    for (int i = 0; i < multiplicities[v]; ++i)
      h.set_label(base[v] + i, g.label(v));
  for (auto [u, v] : g.edge_list())
    for (int i = 0; i < multiplicities[u]; ++i)
      for (int j = 0; j < multiplicities[v]; ++j)
        h.add_edge(base[u] + i, base[v] + j);
  return h;
}

Graph add_conical(const Graph& g, int s) {
  if (s < 0) throw ParameterError("add_conical: s must be >= 0");
  int n = g.order();
  Graph h(n + s);
  for (int v = 0; v < n; ++v) h.set_label(v, g.label(v));
  for (auto [u, v] : g.edge_list()) h.add_edge(u, v);
  for (int i = 0; i < s; ++i) {
    h.set_label(n + i, "cone");
    for (int v = 0; v < n + i; ++v) h.add_edge(v, n + i);
  }
  return h;
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
  if (int(perm.size()) != g.order())
    throw ParameterError("permuted: permutation length mismatch");
  Graph h(g.order());
  for (int v = 0; v < g.order(); ++v) h.set_label(perm[v], g.label(v));
  for (auto [u, v] : g.edge_list()) h.add_edge(perm[u], perm[v]);
  return h;
}

} // namespace satlab
