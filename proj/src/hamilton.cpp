#include "robustham/hamilton.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <type_traits>

#include "robustham/factors.hpp"
#include "robustham/random.hpp"

namespace robustham {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::None: return "none";
    case SearchStatus::BudgetExhausted: return "budget_exhausted";
  }
  return "";
}

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr Mask bit(int v) { return Mask{1} << v; }

// Depth-first enumeration of Hamilton cycles through vertex 0 on mutable
// adjacency masks. Undirected instances store both directions and only
// report cycles whose second vertex is below the last.
class CycleSearch {
 public:
  CycleSearch(int n, bool undirected, const SearchBudget& budget)
      : n_(n),
        undirected_(undirected),
        out_(n, 0),
        in_(n, 0),
        path_(n, 0),
        budget_(budget),
        start_(Clock::now()),
        all_(n == 64 ? ~Mask{0} : bit(n) - 1) {}

  void add_arc(int a, int b) {
    out_[a] |= bit(b);
    in_[b] |= bit(a);
  }
  void remove_arc(int a, int b) {
    out_[a] &= ~bit(b);
    in_[b] &= ~bit(a);
  }
  void remove_cycle(const std::vector<int>& c) { for_cycle(c, [&](int a, int b) { remove_link(a, b); }); }
  void restore_cycle(const std::vector<int>& c) { for_cycle(c, [&](int a, int b) { add_link(a, b); }); }

  std::int64_t nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

  // Calls visit on every cycle with path[1] > min_second until it returns
  // true. Returns true when stopped by visit or by the budget.
  bool enumerate(int min_second, const std::function<bool(const std::vector<int>&)>& visit) {
    // Calls may nest from inside visit, so the caller's state is restored.
    const auto saved_path = path_;
    const int saved_min = min_second_;
    const auto* saved_visit = visit_;
    min_second_ = min_second;
    visit_ = &visit;
    path_[0] = 0;
    const bool stopped = dfs(0, bit(0), 1);
    path_ = saved_path;
    min_second_ = saved_min;
    visit_ = saved_visit;
    return stopped;
  }

 private:
  template <typename F>
  void for_cycle(const std::vector<int>& c, F f) {
    for (int i = 0; i < n_; ++i) f(c[i], c[(i + 1) % n_]);
  }
  void remove_link(int a, int b) {
    remove_arc(a, b);
    if (undirected_) remove_arc(b, a);
  }
  void add_link(int a, int b) {
    add_arc(a, b);
    if (undirected_) add_arc(b, a);
  }

  bool over_budget() {
    ++nodes_;
    if (nodes_ > budget_.max_nodes) {
      exhausted_ = true;
    } else if ((nodes_ & 4095) == 0 &&
               std::chrono::duration<double>(Clock::now() - start_).count() > budget_.max_seconds) {
      exhausted_ = true;
    }
    return exhausted_;
  }

  bool feasible(int cur, Mask unvisited, int depth) const {
    if (undirected_ && depth >= 2) {
      // The closing neighbour of 0 must still exceed path[1].
      const Mask above = path_[1] == 63 ? 0 : ~(bit(path_[1] + 1) - 1);
      if ((out_[0] & unvisited & above) == 0) return false;
    }
    for (Mask rest = unvisited; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if (undirected_) {
        if (std::popcount(out_[u] & (unvisited | bit(cur) | bit(0))) < 2) return false;
      } else if ((in_[u] & (unvisited | bit(cur))) == 0 || (out_[u] & (unvisited | bit(0))) == 0) {
        return false;
      }
    }
    // Every unvisited vertex must be reachable from cur inside unvisited.
    Mask seen = 0;
    Mask frontier = out_[cur] & unvisited;
    while (frontier) {
      seen |= frontier;
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= out_[std::countr_zero(f)];
      frontier = next & unvisited & ~seen;
    }
    return seen == unvisited;
  }

  bool dfs(int cur, Mask visited, int depth) {
    if (over_budget()) return true;
    if (depth == n_) {
      if ((out_[cur] & bit(0)) == 0) return false;
      if (undirected_ && path_[1] > path_[n_ - 1]) return false;
      return (*visit_)(path_);
    }
    const Mask unvisited = all_ & ~visited;
    if (!feasible(cur, unvisited, depth)) return false;
    Mask cand = out_[cur] & unvisited;
    if (depth == 1 && min_second_ >= 0) cand &= min_second_ >= 63 ? 0 : ~(bit(min_second_ + 1) - 1);

    // Fewest onward options first.
    std::vector<std::pair<int, int>> order;
    for (Mask c = cand; c; c &= c - 1) {
      const int v = std::countr_zero(c);
      order.emplace_back(std::popcount(out_[v] & (unvisited | bit(0))), v);
    }
    std::sort(order.begin(), order.end());
    for (const auto& [_, v] : order) {
      path_[depth] = v;
      if (dfs(v, visited | bit(v), depth + 1)) return true;
    }
    return false;
  }

  int n_;
  bool undirected_;
  std::vector<Mask> out_;
  std::vector<Mask> in_;
  std::vector<int> path_;
  const SearchBudget& budget_;
  Clock::time_point start_;
  Mask all_;
  int min_second_ = -1;
  const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
  std::int64_t nodes_ = 0;
  bool exhausted_ = false;
};

CycleSearch make_search(const Graph& g, const SearchBudget& budget) {
  CycleSearch s(g.order(), true, budget);
  for (const Edge& e : g.edges()) {
    s.add_arc(e.u, e.v);
    s.add_arc(e.v, e.u);
  }
  return s;
}

CycleSearch make_search(const Digraph& g, const SearchBudget& budget) {
  CycleSearch s(g.order(), false, budget);
  for (const Arc& a : g.arcs()) s.add_arc(a.tail, a.head);
  return s;
}

// Rotate to start at 0; undirected cycles also put the smaller neighbour of 0 second.
std::vector<int> normalise(std::vector<int> c, bool undirected) {
  std::rotate(c.begin(), std::find(c.begin(), c.end(), 0), c.end());
  if (undirected && c.size() > 2 && c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
  return c;
}

std::optional<std::vector<int>> rotation_extension(const Graph& g, Rng& rng) {
  const int n = g.order();
  std::vector<int> path{static_cast<int>(rng.below(n))};
  std::vector<int> pos(n, -1);
  pos[path[0]] = 0;
  const std::int64_t steps = 20LL * n * n;
  std::vector<int> options;
  for (std::int64_t step = 0; step < steps; ++step) {
    const int v = path.back();
    options.clear();
    for (int w : g.neighbours(v)) {
      if (pos[w] < 0) options.push_back(w);
    }
    if (!options.empty()) {
      const int w = options[rng.below(options.size())];
      pos[w] = static_cast<int>(path.size());
      path.push_back(w);
      continue;
    }
    if (static_cast<int>(path.size()) == n && g.has_edge(v, path[0])) return path;
    // Rotate: pick an on-path neighbour w = path[i] and reverse path[i+1..].
    for (int w : g.neighbours(v)) {
      if (pos[w] + 2 < static_cast<int>(path.size())) options.push_back(w);
    }
    if (options.empty()) return std::nullopt;
    const int i = pos[options[rng.below(options.size())]];
    std::reverse(path.begin() + i + 1, path.end());
    for (int k = i + 1; k < static_cast<int>(path.size()); ++k) pos[path[k]] = k;
  }
  return std::nullopt;
}

template <typename G>
HamiltonResult exact_hamilton(const G& g, const SearchBudget& budget) {
  HamiltonResult result;
  if (g.order() > kExactSearchMaxOrder) {
    result.status = SearchStatus::BudgetExhausted;
    return result;
  }
  auto search = make_search(g, budget);
  search.enumerate(-1, [&](const std::vector<int>& cycle) {
    result.cycle = cycle;
    return true;
  });
  result.nodes = search.nodes();
  if (!result.cycle.empty()) {
    result.status = SearchStatus::Found;
  } else {
    result.status = search.exhausted() ? SearchStatus::BudgetExhausted : SearchStatus::None;
  }
  return result;
}

}  // namespace

HamiltonResult find_hamilton(const Graph& g, const SearchBudget& budget) {
  const int n = g.order();
  if (n < 3) throw std::invalid_argument("Hamilton cycles need n >= 3");
  if (n > 12 && min_degree(g) >= 2) {
    for (int r = 0; r < budget.restarts; ++r) {
      Rng rng(Seed{budget.seed, static_cast<std::uint64_t>(r)}, 0x726f74ULL);
      if (auto cycle = rotation_extension(g, rng)) {
        HamiltonResult result;
        result.status = SearchStatus::Found;
        result.cycle = normalise(std::move(*cycle), true);
        result.heuristic = true;
        return result;
      }
    }
  }
  return exact_hamilton(g, budget);
}

HamiltonResult find_hamilton(const Digraph& g, const SearchBudget& budget) {
  if (g.order() < 3) throw std::invalid_argument("Hamilton cycles need n >= 3");
  return exact_hamilton(g, budget);
}

namespace {

template <typename G>
PackResult pack(const G& g, int target, const SearchBudget& budget, bool undirected) {
  const int n = g.order();
  if (n < 3) throw std::invalid_argument("Hamilton cycles need n >= 3");
  if (n > kExactSearchMaxOrder) throw std::invalid_argument("packing search is limited to n <= 64");
  int bound = 0;
  if constexpr (std::is_same_v<G, Graph>) {
    bound = min_degree(g) / 2;
  } else {
    bound = min_semidegree(g);
  }
  if (target < 0 || target > bound) {
    throw std::invalid_argument("target " + std::to_string(target) + " exceeds the trivial bound " +
                                std::to_string(bound));
  }
  PackResult result;
  result.packing.directed = !undirected;
  result.packing.n = n;
  auto search = make_search(g, budget);
  std::vector<std::vector<int>> current;
  bool reached = target == 0;

  std::function<bool(int)> extend = [&](int last_second) -> bool {
    if (static_cast<int>(current.size()) == target) {
      reached = true;
      return true;
    }
    return search.enumerate(last_second, [&](const std::vector<int>& cycle) {
      current.push_back(cycle);
      if (current.size() > result.packing.cycles.size()) result.packing.cycles = current;
      search.remove_cycle(cycle);
      const bool stop = extend(cycle[1]);
      search.restore_cycle(current.back());
      current.pop_back();
      return stop;
    });
  };
  if (!reached) extend(-1);

  result.nodes = search.nodes();
  if (reached) {
    result.status = SearchStatus::Found;
  } else {
    result.status = search.exhausted() ? SearchStatus::BudgetExhausted : SearchStatus::None;
  }
  const std::size_t edges = g.size();
  result.packing.complete = result.packing.cycles.size() * static_cast<std::size_t>(n) == edges;
  return result;
}

template <typename G>
PackingCheck check_packing(const G& g, const HamiltonPacking& p, bool undirected) {
  const int n = g.order();
  PackingCheck check;
  auto fail = [&](std::string why) {
    check.ok = false;
    check.violation = std::move(why);
    return check;
  };
  if (p.n != n) return fail("order mismatch");
  if (p.directed == undirected) return fail("directedness mismatch");
  std::set<std::pair<int, int>> used;
  for (std::size_t k = 0; k < p.cycles.size(); ++k) {
    const auto& c = p.cycles[k];
    std::vector<char> seen(n, 0);
    if (static_cast<int>(c.size()) != n) return fail("not spanning: cycle " + std::to_string(k));
    for (int v : c) {
      if (v < 0 || v >= n || seen[v]) return fail("not spanning: cycle " + std::to_string(k));
      seen[v] = 1;
    }
    for (int i = 0; i < n; ++i) {
      int a = c[i];
      int b = c[(i + 1) % n];
      bool present;
      if constexpr (std::is_same_v<G, Graph>) {
        present = g.has_edge(a, b);
        if (a > b) std::swap(a, b);
      } else {
        present = g.has_arc(a, b);
      }
      if (!present) return fail("edge not in graph: " + std::to_string(a) + "-" + std::to_string(b));
      if (!used.emplace(a, b).second) return fail("duplicate edge: " + std::to_string(a) + "-" + std::to_string(b));
    }
  }
  if (p.complete != (used.size() == g.size())) return fail("complete flag does not match edge coverage");
  return check;
}

}  // namespace

PackResult pack_hamilton(const Graph& g, int target, const SearchBudget& budget) {
  return pack(g, target, budget, true);
}

PackResult pack_hamilton(const Digraph& g, int target, const SearchBudget& budget) {
  return pack(g, target, budget, false);
}

PackingCheck verify_packing(const Graph& g, const HamiltonPacking& p) { return check_packing(g, p, true); }
PackingCheck verify_packing(const Digraph& g, const HamiltonPacking& p) { return check_packing(g, p, false); }

namespace {

template <typename G>
HamVsReg finish(const G& g, HamVsReg report, const G& factor, const SearchBudget& budget) {
  auto packed = pack_hamilton(factor, report.bound, budget);
  report.packed_factor = true;
  if (packed.status != SearchStatus::Found) {
    auto direct = pack_hamilton(g, report.bound, budget);
    if (direct.status == SearchStatus::Found ||
        direct.packing.cycles.size() > packed.packing.cycles.size()) {
      packed = std::move(direct);
      report.packed_factor = false;
    } else if (direct.status == SearchStatus::BudgetExhausted) {
      packed.status = SearchStatus::BudgetExhausted;
    }
  }
  report.status = packed.status;
  report.packing = std::move(packed.packing);
  // Packings found inside the factor are re-verified against g.
  report.packing.complete = report.packing.cycles.size() * static_cast<std::size_t>(g.order()) == g.size();
  report.ham_lower = static_cast<int>(report.packing.cycles.size());
  report.equality = report.ham_lower == report.bound;
  if (!verify_packing(g, report.packing).ok) throw std::logic_error("packing failed verification");
  return report;
}

}  // namespace

HamVsReg ham_vs_reg(const Graph& g, const SearchBudget& budget) {
  HamVsReg report;
  report.reg = reg_even_undir(g);
  report.bound = report.reg / 2;
  const auto factor = find_r_factor_graph(g, report.reg);
  if (!factor.found) throw std::logic_error("reg_even factor vanished on recomputation");
  return finish(g, report, factor.factor, budget);
}

HamVsReg ham_vs_reg(const Digraph& g, const SearchBudget& budget) {
  HamVsReg report;
  report.directed = true;
  report.reg = reg_dir(g);
  report.bound = report.reg;
  const auto factor = find_r_factor_digraph(g, report.reg);
  if (factor.status != FactorStatus::Found) throw std::logic_error("reg factor vanished on recomputation");
  return finish(g, report, factor.factor, budget);
}

}  // namespace robustham
