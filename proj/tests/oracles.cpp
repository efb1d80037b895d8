#include "oracles.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace oracle {

namespace mp = boost::multiprecision;

std::int64_t f_dir(int n, int delta) {
  const mp::cpp_int radicand = mp::cpp_int(n) * (2 * delta - n) + ((n - delta) % 2 == 0 ? 0 : 1);
  // Largest k with 2k - delta <= sqrt(radicand).
  std::int64_t k = 0;
  while (true) {
    const mp::cpp_int lhs = mp::cpp_int(2 * (k + 1) - delta);
    if (lhs > 0 && lhs * lhs > radicand) break;
    ++k;
  }
  return k;
}

bool digraph_has_factor(const Digraph& g, int r) {
  const int n = g.order();
  std::vector<int> in(n, 0);
  // Choose exactly r out-neighbours for each vertex in turn.
  std::function<bool(int)> assign = [&](int v) -> bool {
    if (v == n) return std::all_of(in.begin(), in.end(), [&](int x) { return x == r; });
    const auto& nb = g.out_neighbours(v);
    const int d = static_cast<int>(nb.size());
    if (d < r) return false;
    std::vector<bool> pick(d, false);
    std::fill(pick.end() - r, pick.end(), true);
    do {
      bool ok = true;
      for (int i = 0; i < d; ++i) {
        if (pick[i] && ++in[nb[i]] > r) ok = false;
      }
      if (ok && assign(v + 1)) return true;
      for (int i = 0; i < d; ++i) {
        if (pick[i]) --in[nb[i]];
      }
    } while (std::next_permutation(pick.begin(), pick.end()));
    return false;
  };
  return assign(0);
}

bool graph_has_factor(const Graph& g, const std::vector<int>& targets) {
  const auto edges = g.edges();
  const int n = g.order();
  std::vector<int> deg(n, 0);
  std::vector<int> remaining(n, 0);
  for (const auto& e : edges) {
    ++remaining[e.u];
    ++remaining[e.v];
  }
  std::function<bool(std::size_t)> step = [&](std::size_t i) -> bool {
    if (i == edges.size()) {
      for (int v = 0; v < n; ++v) {
        if (deg[v] != targets[v]) return false;
      }
      return true;
    }
    const auto [u, v] = edges[i];
    --remaining[u];
    --remaining[v];
    bool found = false;
    if (deg[u] < targets[u] && deg[v] < targets[v]) {
      ++deg[u];
      ++deg[v];
      found = step(i + 1);
      --deg[u];
      --deg[v];
    }
    if (!found && deg[u] + remaining[u] >= targets[u] && deg[v] + remaining[v] >= targets[v]) found = step(i + 1);
    ++remaining[u];
    ++remaining[v];
    return found;
  };
  return step(0);
}

int reg_dir(const Digraph& g) {
  int r = g.order();
  for (int v = 0; v < g.order(); ++v) r = std::min({r, g.out_degree(v), g.in_degree(v)});
  while (r > 0 && !digraph_has_factor(g, r)) --r;
  return r;
}

int reg_even(const Graph& g) {
  int r = g.order();
  for (int v = 0; v < g.order(); ++v) r = std::min(r, g.degree(v));
  r -= r % 2;
  while (r > 0 && !graph_has_factor(g, std::vector<int>(g.order(), r))) r -= 2;
  return r;
}

std::optional<std::uint32_t> expansion_violation(const Digraph& g, const Rational& nu, const Rational& tau) {
  const int n = g.order();
  if (n > 22) throw std::invalid_argument("oracle limited to n <= 22");
  // Integer comparisons with cross-multiplication.
  const std::int64_t nn = nu.numerator(), nd = nu.denominator();
  const std::int64_t tn = tau.numerator(), td = tau.denominator();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const std::int64_t s = std::popcount(mask);
    if (s * td < tn * n || s * td > (td - tn) * n) continue;
    std::int64_t rn = 0;
    for (int x = 0; x < n; ++x) {
      std::int64_t c = 0;
      for (int y : g.in_neighbours(x)) c += (mask >> y) & 1u;
      if (c * nd >= nn * n) ++rn;
    }
    if (rn * nd < s * nd + nn * n) return mask;
  }
  return std::nullopt;
}

std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    }
    if (off < 1e-22) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a[i][i];
  std::sort(eig.begin(), eig.end());
  return eig;
}

double second_eigenvalue(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1.0;
  auto eig = jacobi_eigenvalues(a);
  eig.pop_back();  // the top eigenvalue d
  double lambda = 0;
  for (double x : eig) lambda = std::max(lambda, std::abs(x));
  return lambda;
}

namespace {

template <typename Adjacent>
std::vector<std::vector<int>> all_hamilton_cycles(int n, Adjacent adjacent, bool undirected) {
  std::vector<std::vector<int>> cycles;
  if (n < 3) return cycles;
  std::vector<int> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (undirected && perm.front() > perm.back()) continue;
    bool ok = adjacent(0, perm.front()) && adjacent(perm.back(), 0);
    for (int i = 0; ok && i + 1 < n - 1; ++i) ok = adjacent(perm[i], perm[i + 1]);
    if (!ok) continue;
    std::vector<int> cycle{0};
    cycle.insert(cycle.end(), perm.begin(), perm.end());
    cycles.push_back(cycle);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return cycles;
}

int max_disjoint(const std::vector<std::vector<bool>>& sets) {
  int best = 0;
  std::vector<bool> used(sets.empty() ? 0 : sets[0].size(), false);
  std::function<void(std::size_t, int)> go = [&](std::size_t start, int count) {
    best = std::max(best, count);
    for (std::size_t i = start; i < sets.size(); ++i) {
      bool clash = false;
      for (std::size_t e = 0; e < used.size() && !clash; ++e) clash = used[e] && sets[i][e];
      if (clash) continue;
      for (std::size_t e = 0; e < used.size(); ++e) {
        if (sets[i][e]) used[e] = true;
      }
      go(i + 1, count + 1);
      for (std::size_t e = 0; e < used.size(); ++e) {
        if (sets[i][e]) used[e] = false;
      }
    }
  };
  go(0, 0);
  return best;
}

}  // namespace

bool has_hamilton_cycle(const Graph& g) {
  return !all_hamilton_cycles(g.order(), [&](int u, int v) { return g.has_edge(u, v); }, true).empty();
}

bool has_hamilton_cycle(const Digraph& g) {
  return !all_hamilton_cycles(g.order(), [&](int u, int v) { return g.has_arc(u, v); }, false).empty();
}

int max_hamilton_packing(const Graph& g) {
  const int n = g.order();
  if (n > 9) throw std::invalid_argument("oracle limited to n <= 9");
  const auto cycles = all_hamilton_cycles(n, [&](int u, int v) { return g.has_edge(u, v); }, true);
  std::vector<std::vector<bool>> sets;
  for (const auto& c : cycles) {
    std::vector<bool> s(static_cast<std::size_t>(n * n), false);
    for (int i = 0; i < n; ++i) {
      const int a = std::min(c[i], c[(i + 1) % n]), b = std::max(c[i], c[(i + 1) % n]);
      s[static_cast<std::size_t>(a * n + b)] = true;
    }
    sets.push_back(s);
  }
  return max_disjoint(sets);
}

int max_hamilton_packing(const Digraph& g) {
  const int n = g.order();
  if (n > 9) throw std::invalid_argument("oracle limited to n <= 9");
  const auto cycles = all_hamilton_cycles(n, [&](int u, int v) { return g.has_arc(u, v); }, false);
  std::vector<std::vector<bool>> sets;
  for (const auto& c : cycles) {
    std::vector<bool> s(static_cast<std::size_t>(n * n), false);
    for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(c[i] * n + c[(i + 1) % n])] = true;
    sets.push_back(s);
  }
  return max_disjoint(sets);
}

int diameter(const Digraph& g) {
  const int n = g.order();
  int best = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w = 0; w < n; ++w) {
        if (g.has_arc(v, w) && dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
      }
    }
    for (int d : dist) {
      if (d < 0) return -1;
      best = std::max(best, d);
    }
  }
  return best;
}

namespace {

mp::cpp_rational binom_half(int trials, int k) {
  mp::cpp_int c = 1;
  for (int i = 0; i < k; ++i) c = c * (trials - i) / (i + 1);
  return mp::cpp_rational(c, mp::cpp_int(1) << trials);
}

}  // namespace

double binom_half_pmf(int trials, int k) {
  if (k < 0 || k > trials) return 0.0;
  return static_cast<double>(binom_half(trials, k));
}

double binom_half_cdf(int trials, int k) {
  mp::cpp_rational sum = 0;
  for (int i = 0; i <= std::min(k, trials); ++i) sum += binom_half(trials, i);
  return static_cast<double>(sum);
}

}  // namespace oracle
