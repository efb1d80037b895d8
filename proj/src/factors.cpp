#include "robustham/factors.hpp"

#include <algorithm>
#include <numeric>

#include "robustham/flow.hpp"
#include "robustham/matching.hpp"
#include "robustham/orient.hpp"

namespace robustham {

DegreeSpec DegreeSpec::regular(int n, int r) {
  return {std::vector<int>(n, r), std::vector<int>(n, r)};
}

bool DegreeSpec::balanced() const {
  return out.size() == in.size() &&
         std::accumulate(out.begin(), out.end(), 0LL) == std::accumulate(in.begin(), in.end(), 0LL);
}

namespace {

std::int64_t total(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

void check_spec(const Digraph& g, const DegreeSpec& spec) {
  const auto n = static_cast<std::size_t>(g.order());
  if (spec.out.size() != n || spec.in.size() != n) throw std::invalid_argument("degree spec size does not match order");
  if (!spec.balanced()) throw std::invalid_argument("degree spec is unbalanced: sum of outdegrees != sum of indegrees");
  for (std::size_t v = 0; v < n; ++v) {
    if (spec.out[v] < 0 || spec.in[v] < 0) throw std::invalid_argument("degree spec has a negative target");
  }
}

}  // namespace

DigraphFactor prescribed_subdigraph(const Digraph& g, const DegreeSpec& spec) {
  check_spec(g, spec);
  const int n = g.order();
  DigraphFactor result;
  result.factor = Digraph(n);
  if (n > 0 && std::all_of(spec.out.begin(), spec.out.end(), [&](int x) { return x == spec.out[0]; }) &&
      spec.in == spec.out) {
    result.r = spec.out[0];
  }

  for (int v = 0; v < n; ++v) {
    if (spec.out[v] > g.out_degree(v) || spec.in[v] > g.in_degree(v)) {
      result.status = FactorStatus::TriviallyInfeasible;
      result.reason = "vertex " + std::to_string(v) + " has fewer arcs than its target degree";
      return result;
    }
  }

  const int source = 2 * n;
  const int sink = 2 * n + 1;
  MaxFlow flow(2 * n + 2);
  for (int a = 0; a < n; ++a) flow.add_edge(source, a, spec.out[a]);
  const auto arcs = g.arcs();
  std::vector<int> arc_edge;
  arc_edge.reserve(arcs.size());
  for (const Arc& arc : arcs) arc_edge.push_back(flow.add_edge(arc.tail, n + arc.head, 1));
  for (int b = 0; b < n; ++b) flow.add_edge(n + b, sink, spec.in[b]);

  const std::int64_t required = total(spec.out);
  const std::int64_t value = flow.solve(source, sink);
  if (value == required) {
    result.status = FactorStatus::Found;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (flow.flow(arc_edge[i]) == 1) result.factor.add_arc(arcs[i].tail, arcs[i].head);
    }
    return result;
  }

  const auto side = flow.source_side();
  CutWitness cut;
  for (int v = 0; v < n; ++v) {
    if (side[v]) cut.U.push_back(v);
    if (!side[n + v]) cut.W.push_back(v);
  }
  cut.required = required;
  cut.capacity = cut_capacity(g, spec, cut);
  if (cut.capacity != value) throw std::logic_error("minimum cut capacity disagrees with the flow value");
  result.status = FactorStatus::Infeasible;
  result.reason = "minimum cut capacity " + std::to_string(cut.capacity) + " < " + std::to_string(required);
  result.cut = std::move(cut);
  return result;
}

DigraphFactor find_r_factor_digraph(const Digraph& g, int r) {
  if (r < 0) throw std::invalid_argument("r must be non-negative");
  DigraphFactor result = prescribed_subdigraph(g, DegreeSpec::regular(g.order(), r));
  result.r = r;
  if (result.status == FactorStatus::TriviallyInfeasible) {
    result.reason = "r = " + std::to_string(r) + " exceeds the minimum semidegree " + std::to_string(min_semidegree(g));
  }
  return result;
}

std::int64_t cut_capacity(const Digraph& g, const DegreeSpec& spec, const CutWitness& cut) {
  const int n = g.order();
  std::vector<char> in_u(n, 0), in_w(n, 0);
  for (int a : cut.U) in_u.at(a) = 1;
  for (int b : cut.W) in_w.at(b) = 1;
  std::int64_t capacity = 0;
  for (int v = 0; v < n; ++v) {
    if (!in_u[v]) capacity += spec.out[v];
    if (!in_w[v]) capacity += spec.in[v];
  }
  for (int a = 0; a < n; ++a) {
    if (!in_u[a]) continue;
    for (int b : g.out_neighbours(a)) capacity += in_w[b];
  }
  return capacity;
}

bool verify_cut(const Digraph& g, const DegreeSpec& spec, const CutWitness& cut) {
  const std::int64_t capacity = cut_capacity(g, spec, cut);
  return capacity == cut.capacity && capacity < total(spec.out) && cut.required == total(spec.out);
}

bool verify_factor(const Digraph& g, const Digraph& h, const DegreeSpec& spec) {
  const int n = g.order();
  if (h.order() != n || spec.out.size() != static_cast<std::size_t>(n) || spec.in.size() != spec.out.size()) {
    return false;
  }
  for (const Arc& a : h.arcs()) {
    if (!g.has_arc(a.tail, a.head)) return false;
  }
  for (int v = 0; v < n; ++v) {
    if (h.out_degree(v) != spec.out[v] || h.in_degree(v) != spec.in[v]) return false;
  }
  return true;
}

int reg_dir(const Digraph& g) {
  int lo = 0;
  int hi = g.order() == 0 ? 0 : min_semidegree(g);
  while (lo < hi) {
    const int mid = lo + (hi - lo + 1) / 2;
    if (find_r_factor_digraph(g, mid).status == FactorStatus::Found) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

DigraphFactor reg_dir_factor(const Digraph& g) { return find_r_factor_digraph(g, reg_dir(g)); }

DigraphFactor tournament_factor(const OrientedGraph& t) {
  if (!t.is_tournament()) throw std::invalid_argument("tournament_factor requires a tournament");
  return find_r_factor_digraph(t.digraph(), min_semidegree(t.digraph()));
}

// ---------------------------------------------------------- undirected

GraphFactor find_f_factor(const Graph& g, const std::vector<int>& targets) {
  const int n = g.order();
  if (n > kUndirectedFactorMaxOrder) {
    throw std::invalid_argument("undirected factors are limited to n <= " + std::to_string(kUndirectedFactorMaxOrder));
  }
  if (targets.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("target count does not match order");
  GraphFactor result;
  result.factor = Graph(n);
  std::int64_t sum = 0;
  std::int64_t slack_cost = 0;
  std::int64_t core_cost = 0;
  for (int v = 0; v < n; ++v) {
    const int f = targets[v];
    const int d = g.degree(v);
    if (f < 0) throw std::invalid_argument("negative degree target");
    if (f > d) {
      result.reason = "vertex " + std::to_string(v) + " has degree below its target";
      return result;
    }
    sum += f;
    slack_cost += static_cast<std::int64_t>(d) * (d - f);
    core_cost += static_cast<std::int64_t>(d) * f;
  }
  if (sum % 2 != 0) {
    result.reason = "sum of degree targets is odd";
    return result;
  }

  // Gadget: one port per (vertex, incident edge); partner ports across each
  // edge are adjacent. Slack mode adds d(v) - f(v) hub nodes per vertex and
  // an edge is kept iff its two ports are matched to each other. Core mode
  // adds f(v) hubs and an edge is kept iff its ports are matched to hubs.
  // Hubs are numbered first so the greedy start fills them.
  const bool slack_mode = slack_cost <= core_cost;
  std::vector<int> hubs(n), hub_offset(n + 1, 0), port_offset(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    hubs[v] = slack_mode ? g.degree(v) - targets[v] : targets[v];
    hub_offset[v + 1] = hub_offset[v] + hubs[v];
  }
  const int hub_total = hub_offset[n];
  port_offset[0] = hub_total;
  for (int v = 0; v < n; ++v) port_offset[v + 1] = port_offset[v] + g.degree(v);
  const int nodes = port_offset[n];

  auto port = [&](int v, int w) {
    const auto& nb = g.neighbours(v);
    return port_offset[v] + static_cast<int>(std::lower_bound(nb.begin(), nb.end(), w) - nb.begin());
  };

  std::vector<std::vector<int>> adj(nodes);
  for (int v = 0; v < n; ++v) {
    for (int h = hub_offset[v]; h < hub_offset[v + 1]; ++h) {
      for (int p = port_offset[v]; p < port_offset[v + 1]; ++p) {
        adj[h].push_back(p);
        adj[p].push_back(h);
      }
    }
  }
  for (const Edge& e : g.edges()) {
    const int pu = port(e.u, e.v);
    const int pv = port(e.v, e.u);
    adj[pu].push_back(pv);
    adj[pv].push_back(pu);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  const auto mate = max_cardinality_matching(adj);
  if (std::any_of(mate.begin(), mate.end(), [](int m) { return m < 0; })) {
    result.reason = "no spanning subgraph with the prescribed degrees";
    return result;
  }
  for (const Edge& e : g.edges()) {
    const bool paired = mate[port(e.u, e.v)] == port(e.v, e.u);
    if (paired == slack_mode) result.factor.add_edge(e.u, e.v);
  }
  result.found = true;
  if (!verify_factor(g, result.factor, targets)) throw std::logic_error("degree gadget produced an invalid factor");
  return result;
}

GraphFactor find_r_factor_graph(const Graph& g, int r) {
  if (r < 0 || r % 2 != 0) throw std::invalid_argument("find_r_factor_graph requires a non-negative even r");
  return find_f_factor(g, std::vector<int>(g.order(), r));
}

bool verify_factor(const Graph& g, const Graph& h, const std::vector<int>& targets) {
  const int n = g.order();
  if (h.order() != n || targets.size() != static_cast<std::size_t>(n)) return false;
  for (const Edge& e : h.edges()) {
    if (!g.has_edge(e.u, e.v)) return false;
  }
  for (int v = 0; v < n; ++v) {
    if (h.degree(v) != targets[v]) return false;
  }
  return true;
}

int reg_even_undir(const Graph& g) {
  if (g.order() == 0) return 0;
  int lo = 0;
  int hi = min_degree(g) / 2;  // search over r = 2k
  while (lo < hi) {
    const int mid = lo + (hi - lo + 1) / 2;
    if (find_r_factor_graph(g, 2 * mid).found) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return 2 * lo;
}

std::vector<Graph> petersen_2_factorization(const Graph& g) {
  const int n = g.order();
  const int r = regular_degree(g);
  if (r <= 0 || r % 2 != 0) throw std::invalid_argument("2-factorization requires a regular graph of positive even degree");

  const auto orientation = euler_orientation(g);
  std::vector<std::vector<int>> adj(n);
  for (const Arc& a : orientation.arcs) adj[a.tail].push_back(a.head);
  for (auto& list : adj) std::sort(list.begin(), list.end());

  std::vector<Graph> factors;
  for (int round = 0; round < r / 2; ++round) {
    const auto mate = bipartite_max_matching(n, n, adj);
    Graph factor(n);
    for (int u = 0; u < n; ++u) {
      if (mate[u] < 0) throw std::logic_error("regular bipartite double has no perfect matching");
      factor.add_edge(u, mate[u]);
      adj[u].erase(std::find(adj[u].begin(), adj[u].end(), mate[u]));
    }
    factors.push_back(std::move(factor));
  }
  return factors;
}

// ------------------------------------------------------- matchings lemma

bool matchings_hypothesis(const Graph& g, int t) {
  const auto stats = degree_stats(g);
  const int n = g.order();
  const auto s = std::count(stats.degrees.begin(), stats.degrees.end(), stats.min_degree);
  return stats.min_degree >= n - t &&
         static_cast<long long>(n) >= s + 3LL * t + 2LL * t * (stats.max_degree - stats.min_degree);
}

bool is_optimal_matching(const Graph& g, const std::vector<Edge>& m) {
  std::vector<char> covered(g.order(), 0);
  for (const Edge& e : m) {
    if (e.u < 0 || e.v >= g.order() || !g.has_edge(e.u, e.v) || covered[e.u] || covered[e.v]) return false;
    covered[e.u] = covered[e.v] = 1;
  }
  return 2 * static_cast<int>(m.size()) >= g.order() - 1;
}

namespace {

// Maximum matching of g[vertices], returned in original labels.
std::vector<Edge> matching_on(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> index(g.order(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) index[vertices[i]] = i;
  std::vector<std::vector<int>> adj(vertices.size());
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    for (int w : g.neighbours(vertices[i])) {
      if (index[w] >= 0) adj[i].push_back(index[w]);
    }
  }
  const auto mate = max_cardinality_matching(adj);
  std::vector<Edge> out;
  for (const Edge& e : matching_edges(mate)) {
    const int a = vertices[e.u];
    const int b = vertices[e.v];
    out.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> vertices_of_degree(const Graph& g, int d) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == d) out.push_back(v);
  }
  return out;
}

MatchingsStep snapshot(const Graph& g) {
  const auto stats = degree_stats(g);
  MatchingsStep step;
  step.max_degree = stats.max_degree;
  step.min_degree = stats.min_degree;
  step.max_class = static_cast<int>(std::count(stats.degrees.begin(), stats.degrees.end(), stats.max_degree));
  step.min_class = static_cast<int>(std::count(stats.degrees.begin(), stats.degrees.end(), stats.min_degree));
  return step;
}

void require_optimal(const std::vector<Edge>& m, std::size_t vertex_count) {
  if (2 * m.size() + 1 < vertex_count) throw std::logic_error("internal matching failure: no optimal matching");
}

}  // namespace

MatchingsResult matchings_extract(const Graph& g, std::optional<int> declared_t) {
  const int n = g.order();
  const auto stats = degree_stats(g);
  MatchingsResult result;
  result.n = n;
  result.delta = stats.min_degree;
  result.max_deg = stats.max_degree;
  result.s = static_cast<int>(std::count(stats.degrees.begin(), stats.degrees.end(), stats.min_degree));
  const int delta = stats.min_degree;
  const int t = declared_t.value_or(n - delta);
  result.t = t;
  if (n == 0) throw HypothesisNotMet("empty graph");
  if (t < n - delta) {
    throw HypothesisNotMet("declared t = " + std::to_string(t) + " but minimum degree " + std::to_string(delta) +
                           " < n - t");
  }
  result.factor_degree = delta % 2 == 0 ? delta : delta - 1;

  if (stats.min_degree == stats.max_degree) {
    result.regular_input = true;
    if (delta % 2 == 0) {
      result.factor = g;
      return result;
    }
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    result.matching = matching_on(g, all);
    if (2 * static_cast<int>(result.matching.size()) != n) {
      throw HypothesisNotMet("regular graph of odd degree without a perfect matching");
    }
    result.factor = g;
    for (const Edge& e : result.matching) result.factor.remove_edge(e.u, e.v);
    return result;
  }

  if (!matchings_hypothesis(g, t)) {
    throw HypothesisNotMet("n = " + std::to_string(n) + " < s + 3t + 2t(max - min degree) = " +
                           std::to_string(result.s + 3LL * t + 2LL * t * (stats.max_degree - delta)));
  }

  // Trim the 2t highest-degree vertices down to d = d(x_2t).
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  const int top = 2 * t;
  const int d = g.degree(order[top - 1]);
  std::vector<char> blocked(n, 0);
  for (int v = 0; v < n; ++v) blocked[v] = g.degree(v) == delta;
  for (int i = 0; i < top; ++i) blocked[order[i]] = 1;

  Graph current = g;
  for (int i = 0; i + 1 < top; ++i) {
    const int x = order[i];
    int need = g.degree(x) - d;
    for (int w : g.neighbours(x)) {
      if (need == 0) break;
      if (blocked[w]) continue;
      blocked[w] = 1;
      current.remove_edge(x, w);
      --need;
    }
    if (need > 0) throw std::logic_error("internal failure: not enough vertices to trim high degrees");
  }

  result.trace.push_back(snapshot(current));
  while (true) {
    const auto step = result.trace.back();
    if (step.min_degree != delta) throw std::logic_error("internal failure: minimum degree changed");
    if (step.max_degree == delta) break;  // reached a delta-factor
    const auto x_max = vertices_of_degree(current, step.max_degree);
    const auto m_prime = matching_on(current, x_max);
    require_optimal(m_prime, x_max.size());
    for (const Edge& e : m_prime) current.remove_edge(e.u, e.v);
    const bool last = step.max_degree == delta + 1;

    if (x_max.size() % 2 == 1) {
      std::vector<char> covered(n, 0);
      for (const Edge& e : m_prime) covered[e.u] = covered[e.v] = 1;
      int y = -1;
      for (int v : x_max) {
        if (!covered[v]) {
          y = v;
          break;
        }
      }
      std::vector<char> in_max(n, 0);
      for (int v : x_max) in_max[v] = 1;
      int y_prime = -1;
      for (int w : current.neighbours(y)) {
        if (last) {
          y_prime = w;
          break;
        }
        // Degree in G_i: w lost one edge to M' when w is in X^max_i.
        const int degree_before = current.degree(w) + (in_max[w] ? 1 : 0);
        if (degree_before == delta) continue;
        if (static_cast<int>(x_max.size()) == top && in_max[w]) continue;
        y_prime = w;
        break;
      }
      if (y_prime < 0) throw std::logic_error("internal failure: no admissible neighbour for the uncovered vertex");
      current.remove_edge(y, y_prime);
      if (last) {
        // Now y' has degree delta - 1 and every other vertex degree delta.
        std::vector<int> rest;
        for (int v = 0; v < n; ++v) {
          if (v != y_prime) rest.push_back(v);
        }
        result.matching = matching_on(current, rest);
        if (2 * result.matching.size() != rest.size()) {
          throw std::logic_error("internal matching failure: no perfect matching avoiding y'");
        }
        for (const Edge& e : result.matching) current.remove_edge(e.u, e.v);
        break;
      }
    }
    result.trace.push_back(snapshot(current));
  }

  if (result.trace.back().max_degree == delta && delta % 2 == 1 && result.matching.empty()) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    result.matching = matching_on(current, all);
    if (2 * static_cast<int>(result.matching.size()) != n) {
      throw std::logic_error("internal matching failure: odd-degree factor without a perfect matching");
    }
    for (const Edge& e : result.matching) current.remove_edge(e.u, e.v);
  }
  result.factor = std::move(current);
  if (!verify_factor(g, result.factor, std::vector<int>(n, result.factor_degree))) {
    throw std::logic_error("internal failure: extracted factor has wrong degrees");
  }
  return result;
}

}  // namespace robustham
