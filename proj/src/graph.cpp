#include "robustham/graph.hpp"

#include <algorithm>

namespace robustham {

namespace {

void insert_sorted(std::vector<int>& list, int v) {
  list.insert(std::lower_bound(list.begin(), list.end(), v), v);
}

void erase_sorted(std::vector<int>& list, int v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  list.erase(it);
}

std::string pair_text(int u, int v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

// ---------------------------------------------------------------- Graph

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw GraphError("negative vertex count");
  adj_.resize(n);
  matrix_.assign(static_cast<std::size_t>(n) * n, 0);
}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n) {
  for (auto& e : edges) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i] == edges[i - 1]) {
      throw GraphError("duplicate edge " + pair_text(edges[i].u, edges[i].v));
    }
  }
  // With edges sorted, lower neighbours of v arrive ascending in the first
  // pass and higher neighbours ascending in the second.
  for (const auto& e : edges) {
    adj_[e.v].push_back(e.u);
    matrix_[index(e.u, e.v)] = matrix_[index(e.v, e.u)] = 1;
  }
  for (const auto& e : edges) adj_[e.u].push_back(e.v);
  m_ = edges.size();
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw GraphError("vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(n_) + ")");
  }
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return matrix_[index(u, v)] != 0;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (v > u) out.push_back({u, v});
    }
  }
  return out;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
  if (matrix_[index(u, v)]) throw GraphError("duplicate edge " + pair_text(std::min(u, v), std::max(u, v)));
  matrix_[index(u, v)] = matrix_[index(v, u)] = 1;
  insert_sorted(adj_[u], v);
  insert_sorted(adj_[v], u);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  if (!has_edge(u, v)) throw GraphError("no edge " + pair_text(u, v));
  matrix_[index(u, v)] = matrix_[index(v, u)] = 0;
  erase_sorted(adj_[u], v);
  erase_sorted(adj_[v], u);
  --m_;
}

// -------------------------------------------------------------- Digraph

Digraph::Digraph(int n) : n_(n) {
  if (n < 0) throw GraphError("negative vertex count");
  out_.resize(n);
  in_.resize(n);
  matrix_.assign(static_cast<std::size_t>(n) * n, 0);
}

Digraph::Digraph(int n, std::vector<Arc> arcs) : Digraph(n) {
  for (const auto& a : arcs) {
    check_vertex(a.tail);
    check_vertex(a.head);
    if (a.tail == a.head) throw GraphError("loop at vertex " + std::to_string(a.tail));
  }
  std::sort(arcs.begin(), arcs.end());
  for (std::size_t i = 1; i < arcs.size(); ++i) {
    if (arcs[i] == arcs[i - 1]) {
      throw GraphError("duplicate arc " + pair_text(arcs[i].tail, arcs[i].head));
    }
  }
  // Sorted by tail then head: out-lists are sorted, and in-lists receive
  // tails in ascending order.
  for (const auto& a : arcs) {
    out_[a.tail].push_back(a.head);
    in_[a.head].push_back(a.tail);
    matrix_[index(a.tail, a.head)] = 1;
  }
  m_ = arcs.size();
}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw GraphError("vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(n_) + ")");
  }
}

bool Digraph::has_arc(int tail, int head) const {
  if (tail < 0 || head < 0 || tail >= n_ || head >= n_) return false;
  return matrix_[index(tail, head)] != 0;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (int v : out_[u]) out.push_back({u, v});
  }
  return out;
}

void Digraph::add_arc(int tail, int head) {
  check_vertex(tail);
  check_vertex(head);
  if (tail == head) throw GraphError("loop at vertex " + std::to_string(tail));
  if (matrix_[index(tail, head)]) throw GraphError("duplicate arc " + pair_text(tail, head));
  matrix_[index(tail, head)] = 1;
  insert_sorted(out_[tail], head);
  insert_sorted(in_[head], tail);
  ++m_;
}

void Digraph::remove_arc(int tail, int head) {
  if (!has_arc(tail, head)) throw GraphError("no arc " + pair_text(tail, head));
  matrix_[index(tail, head)] = 0;
  erase_sorted(out_[tail], head);
  erase_sorted(in_[head], tail);
  --m_;
}

void Digraph::reverse_arc(int tail, int head) {
  remove_arc(tail, head);
  add_arc(head, tail);
}

// -------------------------------------------------------- OrientedGraph

OrientedGraph::OrientedGraph(Digraph d) : d_(std::move(d)) {
  if (!is_oriented(d_)) throw GraphError("digraph has a 2-cycle; not an oriented graph");
}

bool OrientedGraph::is_tournament() const { return robustham::is_tournament(d_); }

// ------------------------------------------------------------- queries

GraphDegreeStats degree_stats(const Graph& g) {
  GraphDegreeStats s;
  s.degrees.resize(g.order());
  for (int v = 0; v < g.order(); ++v) s.degrees[v] = g.degree(v);
  if (g.order() > 0) {
    auto [lo, hi] = std::minmax_element(s.degrees.begin(), s.degrees.end());
    s.min_degree = *lo;
    s.max_degree = *hi;
  }
  return s;
}

DigraphDegreeStats degree_stats(const Digraph& d) {
  DigraphDegreeStats s;
  const int n = d.order();
  s.out_degrees.resize(n);
  s.in_degrees.resize(n);
  for (int v = 0; v < n; ++v) {
    s.out_degrees[v] = d.out_degree(v);
    s.in_degrees[v] = d.in_degree(v);
  }
  if (n > 0) {
    s.min_out = *std::min_element(s.out_degrees.begin(), s.out_degrees.end());
    s.max_out = *std::max_element(s.out_degrees.begin(), s.out_degrees.end());
    s.min_in = *std::min_element(s.in_degrees.begin(), s.in_degrees.end());
    s.max_in = *std::max_element(s.in_degrees.begin(), s.in_degrees.end());
    s.min_semidegree = std::min(s.min_out, s.min_in);
    s.max_semidegree = std::max(s.max_out, s.max_in);
  }
  return s;
}

int min_degree(const Graph& g) { return degree_stats(g).min_degree; }
int max_degree(const Graph& g) { return degree_stats(g).max_degree; }
int min_semidegree(const Digraph& d) { return degree_stats(d).min_semidegree; }

int regular_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  const int r = g.degree(0);
  for (int v = 1; v < g.order(); ++v) {
    if (g.degree(v) != r) return -1;
  }
  return r;
}

int regular_degree(const Digraph& d) {
  if (d.order() == 0) return 0;
  const int r = d.out_degree(0);
  for (int v = 0; v < d.order(); ++v) {
    if (d.out_degree(v) != r || d.in_degree(v) != r) return -1;
  }
  return r;
}

bool is_oriented(const Digraph& d) {
  for (int u = 0; u < d.order(); ++u) {
    for (int v : d.out_neighbours(u)) {
      if (d.has_arc(v, u)) return false;
    }
  }
  return true;
}

bool is_tournament(const Digraph& d) {
  const auto n = static_cast<std::size_t>(d.order());
  return is_oriented(d) && d.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

Graph underlying_graph(const Digraph& d) {
  std::vector<Edge> edges;
  edges.reserve(d.size());
  for (const auto& a : d.arcs()) {
    if (a.tail < a.head || !d.has_arc(a.head, a.tail)) {
      edges.push_back({std::min(a.tail, a.head), std::max(a.tail, a.head)});
    }
  }
  return Graph(d.order(), std::move(edges));
}

Digraph symmetric_digraph(const Graph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * g.size());
  for (const auto& e : g.edges()) {
    arcs.push_back({e.u, e.v});
    arcs.push_back({e.v, e.u});
  }
  return Digraph(g.order(), std::move(arcs));
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) edges.push_back({u, v});
    }
  }
  return Graph(g.order(), std::move(edges));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.has_edge(vertices[i], vertices[j])) {
        edges.push_back({static_cast<int>(i), static_cast<int>(j)});
      }
    }
  }
  return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  const int shift = a.order();
  for (const auto& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(a.order() + b.order(), std::move(edges));
}

Digraph disjoint_union(const Digraph& a, const Digraph& b) {
  auto arcs = a.arcs();
  const int shift = a.order();
  for (const auto& x : b.arcs()) arcs.push_back({x.tail + shift, x.head + shift});
  return Digraph(a.order() + b.order(), std::move(arcs));
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (int w : g.neighbours(members[i])) {
        if (comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace robustham
