#include "robustham/orient.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "robustham/factors.hpp"

namespace robustham {

namespace {

constexpr std::uint64_t kOrientStream = 0x6f7269656e74ULL;
constexpr std::uint64_t kSplitStream = 0x73706c6974ULL;

}  // namespace

OrientationResult make_orientation(int n, std::vector<Edge> edges, std::vector<Arc> arcs) {
  OrientationResult r;
  r.digraph = Digraph(n, arcs);
  r.edges = std::move(edges);
  r.arcs = std::move(arcs);
  r.out_degree.resize(n);
  r.in_degree.resize(n);
  for (int v = 0; v < n; ++v) {
    r.out_degree[v] = r.digraph.out_degree(v);
    r.in_degree[v] = r.digraph.in_degree(v);
  }
  return r;
}

OrientationResult random_orientation(const Graph& g, Seed seed) {
  Rng rng(seed, kOrientStream);
  auto edges = g.edges();
  std::vector<Arc> arcs;
  arcs.reserve(edges.size());
  for (const Edge& e : edges) arcs.push_back(rng.coin() ? Arc{e.u, e.v} : Arc{e.v, e.u});
  return make_orientation(g.order(), std::move(edges), std::move(arcs));
}

std::pair<Digraph, Digraph> split_edges(const Digraph& g, double lambda, Seed seed) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw std::invalid_argument("lambda must lie in (0, 1)");
  Rng rng(seed, kSplitStream);
  Digraph first(g.order());
  Digraph second(g.order());
  for (const Arc& a : g.arcs()) {
    if (rng.bernoulli(lambda)) {
      first.add_arc(a.tail, a.head);
    } else {
      second.add_arc(a.tail, a.head);
    }
  }
  return {std::move(first), std::move(second)};
}

OrientationResult euler_orientation(const Graph& g) {
  const int n = g.order();
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) % 2 != 0) {
      throw std::invalid_argument("euler_orientation: vertex " + std::to_string(v) + " has odd degree");
    }
  }
  auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  // incidence[v] lists edge ids in ascending order of the other endpoint.
  std::vector<std::vector<int>> incidence(n);
  for (int id = 0; id < m; ++id) {
    incidence[edges[id].u].push_back(id);
    incidence[edges[id].v].push_back(id);
  }
  auto other = [&](int id, int v) { return edges[id].u == v ? edges[id].v : edges[id].u; };
  for (int v = 0; v < n; ++v) {
    std::sort(incidence[v].begin(), incidence[v].end(), [&](int a, int b) { return other(a, v) < other(b, v); });
  }

  std::vector<Arc> arcs(m);
  std::vector<char> used(m, 0);
  std::vector<std::size_t> cursor(n, 0);
  for (int start = 0; start < n; ++start) {
    // Walk closed trails greedily; every trail returns to where it began
    // because all degrees are even, so orienting along the walk balances.
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int v = stack.back();
      while (cursor[v] < incidence[v].size() && used[incidence[v][cursor[v]]]) ++cursor[v];
      if (cursor[v] == incidence[v].size()) {
        stack.pop_back();
        continue;
      }
      const int id = incidence[v][cursor[v]];
      used[id] = 1;
      const int w = other(id, v);
      arcs[id] = {v, w};
      stack.push_back(w);
    }
  }
  return make_orientation(n, std::move(edges), std::move(arcs));
}

int disc_vertex(const Digraph& g, int x) { return std::abs(g.out_degree(x) - g.in_degree(x)); }

long long disc(const Digraph& g) {
  long long total = 0;
  for (int v = 0; v < g.order(); ++v) total += disc_vertex(g, v);
  return total;
}

BalanceResult path_switch_balance(const OrientedGraph& og) {
  Digraph d = og.digraph();
  const int n = d.order();
  const Graph underlying = underlying_graph(d);
  const int r = regular_degree(underlying);
  if (r < 0 || r % 2 != 0) {
    throw std::invalid_argument("path_switch_balance requires a regular underlying graph of even degree");
  }

  BalanceResult result;
  const long long cap = disc(d) / 2;
  long long current = disc(d);
  std::vector<int> parent(n);
  for (long long step = 0; current > 0; ++step) {
    if (step >= cap) throw std::logic_error("path switching exceeded its iteration cap");
    int x = 0;
    while (d.out_degree(x) <= d.in_degree(x)) ++x;

    std::fill(parent.begin(), parent.end(), -2);
    parent[x] = -1;
    std::vector<int> queue{x};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (int w : d.out_neighbours(queue[i])) {
        if (parent[w] == -2) {
          parent[w] = queue[i];
          queue.push_back(w);
        }
      }
    }
    int y = -1;
    for (int v = 0; v < n; ++v) {
      if (parent[v] != -2 && d.in_degree(v) > d.out_degree(v)) {
        y = v;
        break;
      }
    }
    if (y < 0) throw PathNotFound("no deficit vertex reachable from vertex " + std::to_string(x));

    SwitchStep s;
    for (int v = y; v >= 0; v = parent[v]) s.path.push_back(v);
    std::reverse(s.path.begin(), s.path.end());
    s.disc_before = current;
    for (std::size_t i = 0; i + 1 < s.path.size(); ++i) d.reverse_arc(s.path[i], s.path[i + 1]);
    current = disc(d);
    s.disc_after = current;
    ++result.trace.path_length_histogram[static_cast<int>(s.path.size()) - 1];
    result.trace.steps.push_back(std::move(s));
  }

  auto edges = underlying.edges();
  std::vector<Arc> arcs;
  arcs.reserve(edges.size());
  for (const Edge& e : edges) arcs.push_back(d.has_arc(e.u, e.v) ? Arc{e.u, e.v} : Arc{e.v, e.u});
  result.orientation = make_orientation(n, std::move(edges), std::move(arcs));
  return result;
}

namespace {

// Merge orientations of edge-disjoint graphs into one orientation of g.
OrientationResult orientation_of(const Graph& g, const Digraph& d) {
  auto edges = g.edges();
  std::vector<Arc> arcs;
  arcs.reserve(edges.size());
  for (const Edge& e : edges) {
    if (d.has_arc(e.u, e.v)) {
      arcs.push_back({e.u, e.v});
    } else if (d.has_arc(e.v, e.u)) {
      arcs.push_back({e.v, e.u});
    } else {
      throw std::logic_error("orientation does not cover every edge");
    }
  }
  return make_orientation(g.order(), std::move(edges), std::move(arcs));
}

}  // namespace

RegularOrientation regular_orientation(const Graph& g, OrientationPipeline pipeline, Seed seed,
                                       const PipelineOptions& options) {
  const int n = g.order();
  const int r = regular_degree(g);
  if (r < 0 || r % 2 != 0) throw std::invalid_argument("regular_orientation requires a regular graph of even degree");

  RegularOrientation result;
  result.pipeline = pipeline;
  if (pipeline == OrientationPipeline::Euler) {
    result.orientation = euler_orientation(g);
    result.attempts = 1;
    return result;
  }

  if (!(options.xi > 0.0 && options.xi < 1.0)) throw std::invalid_argument("xi must lie in (0, 1)");
  const int k = static_cast<int>(options.xi * n);
  if (2 * k > r) throw std::invalid_argument("slice degree floor(xi n) exceeds r/2");

  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    const Seed s = attempt == 0 ? seed : Seed{splitmix64(seed.value + static_cast<std::uint64_t>(attempt)), seed.trial};
    const auto oriented = random_orientation(g, s);
    auto [part1, part2] = split_edges(oriented.digraph, options.lambda, s);

    DegreeSpec spec{std::vector<int>(n), std::vector<int>(n)};
    bool negative = false;
    for (int v = 0; v < n; ++v) {
      spec.out[v] = k - part1.out_degree(v);
      spec.in[v] = k - part1.in_degree(v);
      negative = negative || spec.out[v] < 0 || spec.in[v] < 0;
    }
    if (negative) continue;
    const auto top_up = prescribed_subdigraph(part2, spec);
    if (top_up.status != FactorStatus::Found) continue;

    Digraph slice = part1;
    for (const Arc& a : top_up.factor.arcs()) slice.add_arc(a.tail, a.head);
    Graph remainder = g;
    for (const Arc& a : slice.arcs()) remainder.remove_edge(a.tail, a.head);
    const auto rest = euler_orientation(remainder);

    Digraph all = slice;
    for (const Arc& a : rest.arcs) all.add_arc(a.tail, a.head);
    result.orientation = orientation_of(g, all);
    if (regular_degree(result.orientation.digraph) != r / 2) {
      throw std::logic_error("slice pipeline produced an irregular orientation");
    }
    result.slice = std::move(slice);
    result.slice_degree = k;
    result.attempts = attempt + 1;
    return result;
  }
  throw PipelineFailed("no regular slice found in " + std::to_string(options.max_attempts) + " attempts");
}

std::optional<int> diameter(const Digraph& g) {
  const int n = g.order();
  int best = 0;
  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (int w : g.out_neighbours(queue[i])) {
        if (dist[w] < 0) {
          dist[w] = dist[queue[i]] + 1;
          queue.push_back(w);
        }
      }
    }
    if (static_cast<int>(queue.size()) < n) return std::nullopt;
    best = std::max(best, dist[queue.back()]);
  }
  return best;
}

}  // namespace robustham
