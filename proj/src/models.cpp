#include "robustham/models.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "robustham/bounds.hpp"
#include "robustham/factors.hpp"
#include "robustham/matching.hpp"

namespace robustham {

namespace {

constexpr std::uint64_t kTournamentStream = 0x746f75726eULL;
constexpr std::uint64_t kGnpStream = 0x676e70ULL;
constexpr std::uint64_t kDigraphStream = 0x646967ULL;
constexpr std::uint64_t kPairStream = 0x7061697273ULL;

}  // namespace

OrientedGraph random_tournament(int n, Seed seed) {
  if (n < 1) throw std::invalid_argument("tournaments need n >= 1");
  Rng rng(seed, kTournamentStream);
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) arcs.push_back(rng.coin() ? Arc{i, j} : Arc{j, i});
  }
  return OrientedGraph(Digraph(n, std::move(arcs)));
}

Graph gnp(int n, double p, Seed seed) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  Rng rng(seed, kGnpStream);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p)) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

Digraph random_digraph(int n, double p, Seed seed) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  Rng rng(seed, kDigraphStream);
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && rng.bernoulli(p)) arcs.push_back({i, j});
    }
  }
  return Digraph(n, std::move(arcs));
}

Graph circulant_graph(int n, const std::vector<int>& shifts) {
  Graph g(n);
  for (int s : shifts) {
    if (s <= 0 || s >= n) throw std::invalid_argument("circulant shifts must lie in [1, n-1]");
    for (int i = 0; i < n; ++i) {
      const int j = (i + s) % n;
      if (!g.has_edge(i, j)) g.add_edge(i, j);
    }
  }
  return g;
}

Digraph circulant_digraph(int n, const std::vector<int>& shifts) {
  Digraph d(n);
  for (int s : shifts) {
    if (s <= 0 || s >= n) throw std::invalid_argument("circulant shifts must lie in [1, n-1]");
    for (int i = 0; i < n; ++i) {
      const int j = (i + s) % n;
      if (!d.has_arc(i, j)) d.add_arc(i, j);
    }
  }
  return d;
}

Digraph complete_digraph(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) arcs.push_back({i, j});
    }
  }
  return Digraph(n, std::move(arcs));
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges));
}

std::pair<Digraph, ExtremalConstruction> extremal_digraph(int n, int delta) {
  if (n < 2 || 2 * delta < n || delta > n - 1) throw std::invalid_argument("extremal_digraph needs n/2 <= delta <= n-1");
  ExtremalConstruction c;
  c.n = n;
  c.delta = delta;
  if (delta == n - 1) {
    c.Delta = n - 1;
    c.b_size = n;
    c.b_degree = n - 1;
    c.complete = true;
    return {complete_digraph(n), c};
  }
  const std::int64_t radicand = static_cast<std::int64_t>(n) * (2 * delta - n) + ((n - delta) % 2 == 0 ? 0 : 1);
  std::int64_t root = isqrt(radicand);
  if (root * root < radicand) ++root;  // ceil(sqrt)
  // Smallest k with 2k - n >= sqrt(radicand).
  const int k = static_cast<int>((n + root + 1) / 2);
  c.Delta = std::max(k, delta + 1);
  if (c.Delta > n - 1) throw std::invalid_argument("extremal construction needs Delta <= n-1");
  c.a_size = n - c.Delta;
  c.b_size = c.Delta;
  c.b_degree = delta + c.Delta - n;

  std::vector<Arc> arcs;
  for (int a = 0; a < c.a_size; ++a) {
    for (int b = c.a_size; b < n; ++b) {
      arcs.push_back({a, b});
      arcs.push_back({b, a});
    }
  }
  for (int i = 0; i < c.b_size; ++i) {
    for (int s = 1; s <= c.b_degree; ++s) arcs.push_back({c.a_size + i, c.a_size + (i + s) % c.b_size});
  }
  Digraph d(n, std::move(arcs));
  const auto stats = degree_stats(d);
  if (stats.min_semidegree != delta || stats.max_semidegree != c.Delta) {
    throw std::logic_error("extremal construction has the wrong semidegrees");
  }
  return {std::move(d), c};
}

OrientedGraph rotational_tournament(int n) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("rotational tournaments need odd n");
  std::vector<int> shifts;
  for (int j = 1; j <= (n - 1) / 2; ++j) shifts.push_back(j);
  return OrientedGraph(circulant_digraph(n, shifts));
}

OrientedGraph k_partite_tournament(int k, int m) {
  if (k < 2) throw std::invalid_argument("k-partite tournaments need k >= 2");
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("class size m must be positive and even");
  const int n = k * m;
  std::vector<Arc> arcs;
  for (int c = 0; c < k; ++c) {
    for (int d = c + 1; d < k; ++d) {
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          const int x = c * m + i;
          const int y = d * m + j;
          if (((j - i) % m + m) % m < m / 2) {
            arcs.push_back({x, y});
          } else {
            arcs.push_back({y, x});
          }
        }
      }
    }
  }
  return OrientedGraph(Digraph(n, std::move(arcs)));
}

Graph paley(int q) {
  if (q < 5 || q % 4 != 1) throw std::invalid_argument("Paley graphs need a prime q = 1 (mod 4)");
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) throw std::invalid_argument("Paley graphs need a prime q");
  }
  std::vector<char> square(q, 0);
  for (int x = 1; x < q; ++x) square[static_cast<std::int64_t>(x) * x % q] = 1;
  std::vector<Edge> edges;
  for (int i = 0; i < q; ++i) {
    for (int j = i + 1; j < q; ++j) {
      if (square[j - i]) edges.push_back({i, j});
    }
  }
  return Graph(q, std::move(edges));
}

// ----------------------------------------------------------- experiments

std::vector<TrialReport> run_trials(std::int64_t trials, int jobs,
                                    const std::function<TrialReport(std::int64_t)>& body) {
  if (trials < 0) throw std::invalid_argument("trials must be non-negative");
  std::vector<TrialReport> out(static_cast<std::size_t>(trials));
  auto timed = [&](std::int64_t t) {
    const auto start = std::chrono::steady_clock::now();
    out[t] = body(t);
    out[t].trial = t;
    out[t].runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  if (jobs <= 1 || trials <= 1) {
    for (std::int64_t t = 0; t < trials; ++t) timed(t);
    return out;
  }
  std::atomic<std::int64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  const int workers = static_cast<int>(std::min<std::int64_t>(jobs, trials));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (std::int64_t t = next++; t < trials; t = next++) {
        try {
          timed(t);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<TrialReport> tourn_edges_suite(int n, std::int64_t trials, double eps, Seed seed, int pairs, int jobs) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (pairs < 1) throw std::invalid_argument("pairs must be positive");
  const double spread = std::sqrt(n * std::log(static_cast<double>(n)) / 2);
  const double lower = n / 2.0 - (1 + eps) * spread;
  const double upper = n / 2.0 - (1 - eps) * spread;
  const double bound = 9.0 * std::pow(static_cast<double>(n), 1.5);
  const int words = (n + 63) / 64;

  return run_trials(trials, jobs, [&](std::int64_t t) {
    const Seed s = seed.with_trial(static_cast<std::uint64_t>(t));
    const auto tournament = random_tournament(n, s);
    const Digraph& d = tournament.digraph();
    TrialReport r;
    r.model = "tourn-edges";
    r.seed = seed.value;
    r.params = {{"n", n}, {"eps", eps}, {"pairs", pairs}};
    const int min0 = min_semidegree(d);
    r.counts["min_semidegree"] = min0;
    r.values["lower"] = lower;
    r.values["upper"] = upper;
    r.conditions["i_lower"] = min0 >= lower;
    r.conditions["ii_upper"] = min0 <= upper;

    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n) * words, 0);
    for (int v = 0; v < n; ++v) {
      for (int w : d.out_neighbours(v)) rows[static_cast<std::size_t>(v) * words + w / 64] |= std::uint64_t{1} << (w % 64);
    }
    Rng rng(s, kPairStream);
    std::vector<std::uint64_t> b_mask(words);
    std::vector<int> a_set;
    double worst = 0;
    for (int k = 0; k < pairs; ++k) {
      a_set.clear();
      std::fill(b_mask.begin(), b_mask.end(), 0);
      long long size_b = 0;
      if (k == 0) {
        for (int v = 0; v < n; ++v) a_set.push_back(v);
        for (int v = 0; v < n; ++v) b_mask[v / 64] |= std::uint64_t{1} << (v % 64);
        size_b = n;
      } else {
        const double pa = rng.uniform();
        const double pb = rng.uniform();
        for (int v = 0; v < n; ++v) {
          if (rng.bernoulli(pa)) a_set.push_back(v);
        }
        for (int v = 0; v < n; ++v) {
          if (rng.bernoulli(pb)) {
            b_mask[v / 64] |= std::uint64_t{1} << (v % 64);
            ++size_b;
          }
        }
      }
      long long e = 0;
      for (int a : a_set) {
        const std::uint64_t* row = &rows[static_cast<std::size_t>(a) * words];
        for (int w = 0; w < words; ++w) e += std::popcount(row[w] & b_mask[w]);
      }
      worst = std::max(worst, std::abs(static_cast<double>(e) - static_cast<double>(a_set.size()) * size_b / 2.0));
    }
    r.values["max_discrepancy"] = worst;
    r.values["discrepancy_bound"] = bound;
    r.conditions["iii_discrepancy"] = worst <= bound;
    return r;
  });
}

std::vector<TrialReport> erdos_experiment(int n, std::int64_t trials, const SearchBudget& budget, Seed seed, int jobs) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  return run_trials(trials, jobs, [&](std::int64_t t) {
    const auto tournament = random_tournament(n, seed.with_trial(static_cast<std::uint64_t>(t)));
    const int min0 = min_semidegree(tournament.digraph());
    TrialReport r;
    r.model = "erdos";
    r.seed = seed.value;
    r.params = {{"n", n}};
    r.counts["min_semidegree"] = min0;
    const auto factor = tournament_factor(tournament);
    const bool found = factor.status == FactorStatus::Found &&
                       verify_factor(tournament.digraph(), factor.factor, DegreeSpec::regular(n, min0));
    r.conditions["factor_found"] = found;
    r.conditions["factor_regular"] = found && regular_degree(factor.factor) == min0;
    if (found && n <= 13) {
      const auto packed = pack_hamilton(factor.factor, min0, budget);
      r.counts["cycles"] = static_cast<std::int64_t>(packed.packing.cycles.size());
      r.counts["search_nodes"] = packed.nodes;
      r.conditions["packing_found"] = packed.status == SearchStatus::Found;
      r.conditions["search_completed"] = packed.status != SearchStatus::BudgetExhausted;
    }
    return r;
  });
}

std::vector<TrialReport> gnp_h_property(int n, double p, std::int64_t trials, Seed seed, int jobs) {
  if (p < 2.0 / 3.0 || p > 1.0) throw std::invalid_argument("gnp_h_property needs 2/3 <= p <= 1");
  if (n < 2 || n > kUndirectedFactorMaxOrder) throw std::invalid_argument("gnp_h_property needs 2 <= n <= 300");
  const double complement_cap = 2.0 * std::cbrt(static_cast<double>(n));
  return run_trials(trials, jobs, [&](std::int64_t t) {
    const Graph g = gnp(n, p, seed.with_trial(static_cast<std::uint64_t>(t)));
    const auto stats = degree_stats(g);
    const int delta = stats.min_degree;
    const int t_param = n - delta;
    TrialReport r;
    r.model = "gnp-h";
    r.seed = seed.value;
    r.params = {{"n", n}, {"p", p}};
    r.counts["min_degree"] = delta;
    r.counts["max_degree"] = stats.max_degree;
    r.counts["s"] = std::count(stats.degrees.begin(), stats.degrees.end(), delta);
    r.counts["t"] = t_param;
    r.counts["max_degree_vertices"] = std::count(stats.degrees.begin(), stats.degrees.end(), stats.max_degree);
    r.counts["complement_max_degree"] = n - 1 - delta;
    r.counts["hypothesis_rhs"] = r.counts["s"] + 3LL * t_param + 2LL * t_param * (stats.max_degree - delta);
    r.values["complement_cap"] = complement_cap;
    r.conditions["complement_degree_ok"] = n - 1 - delta <= complement_cap;

    const bool hypothesis = matchings_hypothesis(g, t_param) || stats.min_degree == stats.max_degree;
    r.conditions["hypothesis"] = hypothesis;
    if (hypothesis) {
      bool ok = false;
      try {
        const auto m = matchings_extract(g);
        ok = verify_factor(g, m.factor, std::vector<int>(n, m.factor_degree));
        if (delta % 2 == 1) {
          ok = ok && is_optimal_matching(g, m.matching);
          for (const Edge& e : m.matching) ok = ok && !m.factor.has_edge(e.u, e.v);
        }
      } catch (const HypothesisNotMet&) {
        ok = false;
      }
      r.conditions["procedure_verified"] = ok;
    }

    // Independent route through the degree gadget.
    bool exact = false;
    if (delta % 2 == 0) {
      exact = find_r_factor_graph(g, delta).found;
    } else {
      const auto matching = matching_edges(max_cardinality_matching(g));
      if (is_optimal_matching(g, matching)) {
        Graph rest = g;
        for (const Edge& e : matching) rest.remove_edge(e.u, e.v);
        const auto f = find_f_factor(rest, std::vector<int>(n, delta - 1));
        exact = f.found && verify_factor(rest, f.factor, std::vector<int>(n, delta - 1));
      }
    }
    r.conditions["exact_route_verified"] = exact;
    return r;
  });
}

}  // namespace robustham
