#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace robustham {

// Undirected edge, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Directed edge tail -> head.
struct Arc {
  int tail = 0;
  int head = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Simple undirected graph on vertices 0..n-1. Adjacency lists are kept
// sorted; a dense byte matrix answers adjacency queries in O(1).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }

  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbours(int v) const { return adj_[v]; }

  // All edges sorted lexicographically.
  std::vector<Edge> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(int v) const;
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + v;
  }

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint8_t> matrix_;
};

// Digraph with at most one arc per ordered pair; 2-cycles are allowed.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, std::vector<Arc> arcs);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }

  bool has_arc(int tail, int head) const;
  int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
  const std::vector<int>& out_neighbours(int v) const { return out_[v]; }
  const std::vector<int>& in_neighbours(int v) const { return in_[v]; }

  // All arcs sorted lexicographically by (tail, head).
  std::vector<Arc> arcs() const;

  void add_arc(int tail, int head);
  void remove_arc(int tail, int head);
  void reverse_arc(int tail, int head);

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  void check_vertex(int v) const;
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + v;
  }

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<std::uint8_t> matrix_;
};

// A digraph with at most one arc between any pair of vertices.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  explicit OrientedGraph(Digraph d);

  const Digraph& digraph() const noexcept { return d_; }
  int order() const noexcept { return d_.order(); }
  bool is_tournament() const;

 private:
  Digraph d_;
};

struct GraphDegreeStats {
  int min_degree = 0;
  int max_degree = 0;
  std::vector<int> degrees;
};

struct DigraphDegreeStats {
  int min_out = 0;
  int min_in = 0;
  int max_out = 0;
  int max_in = 0;
  int min_semidegree = 0;  // δ⁰ = min(δ⁺, δ⁻)
  int max_semidegree = 0;  // Δ⁰ = max(Δ⁺, Δ⁻)
  std::vector<int> out_degrees;
  std::vector<int> in_degrees;
};

GraphDegreeStats degree_stats(const Graph& g);
DigraphDegreeStats degree_stats(const Digraph& d);

int min_degree(const Graph& g);
int max_degree(const Graph& g);
int min_semidegree(const Digraph& d);

// Returns r when every vertex has degree r, -1 otherwise.
int regular_degree(const Graph& g);
// Returns r when every vertex has in- and outdegree r, -1 otherwise.
int regular_degree(const Digraph& d);

bool is_oriented(const Digraph& d);
bool is_tournament(const Digraph& d);

Graph underlying_graph(const Digraph& d);
Digraph symmetric_digraph(const Graph& g);
Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Vertex-disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
Digraph disjoint_union(const Digraph& a, const Digraph& b);

// Connected components (undirected), each sorted ascending, ordered by
// smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

}  // namespace robustham
