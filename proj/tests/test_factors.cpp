#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "robustham/bounds.hpp"
#include "robustham/factors.hpp"
#include "robustham/matching.hpp"
#include "robustham/models.hpp"
#include "robustham/orient.hpp"

using namespace robustham;

namespace {

Graph remove_edges(Graph g, const std::vector<Edge>& edges) {
  for (const auto& e : edges) g.remove_edge(e.u, e.v);
  return g;
}

bool is_two_factor(const Graph& f) { return regular_degree(f) == 2; }

}  // namespace

TEST(DigraphFactor, CompleteDigraphIsItsOwnFactor) {
  const auto d = complete_digraph(5);
  const auto f = find_r_factor_digraph(d, 4);
  ASSERT_EQ(f.status, FactorStatus::Found);
  EXPECT_EQ(f.factor, d);
}

TEST(DigraphFactor, ExtremalSixThree) {
  const auto [d, c] = extremal_digraph(6, 3);
  const auto two = find_r_factor_digraph(d, 2);
  ASSERT_EQ(two.status, FactorStatus::Found);
  EXPECT_TRUE(verify_factor(d, two.factor, DegreeSpec::regular(6, 2)));
  const auto three = find_r_factor_digraph(d, 3);
  ASSERT_EQ(three.status, FactorStatus::Infeasible);
  ASSERT_TRUE(three.cut.has_value());
  EXPECT_TRUE(verify_cut(d, DegreeSpec::regular(6, 3), *three.cut));
  EXPECT_LT(three.cut->capacity, 18);
  EXPECT_FALSE(oracle::digraph_has_factor(d, 3));
}

TEST(DigraphFactor, DirectedCycle) {
  const auto c = circulant_digraph(5, {1});
  const auto f = find_r_factor_digraph(c, 1);
  ASSERT_EQ(f.status, FactorStatus::Found);
  EXPECT_EQ(f.factor, c);
}

TEST(DigraphFactor, TrivialInfeasibility) {
  const auto f = find_r_factor_digraph(circulant_digraph(5, {1}), 2);
  EXPECT_EQ(f.status, FactorStatus::TriviallyInfeasible);
  EXPECT_FALSE(f.reason.empty());
}

TEST(RegDir, FrozenValues) {
  EXPECT_EQ(reg_dir(complete_digraph(6)), 5);
  EXPECT_EQ(reg_dir(extremal_digraph(6, 3).first), 2);
  EXPECT_EQ(reg_dir(extremal_digraph(6, 3).first), f_dir(6, 3).f);
  Digraph sink(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}});
  EXPECT_EQ(reg_dir(sink), 0);
}

TEST(RegDir, AgreesWithExhaustiveOracle) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const Digraph d = random_digraph(6, 0.7, Seed{s, 0});
    EXPECT_EQ(reg_dir(d), oracle::reg_dir(d)) << s;
  }
}

TEST(PrescribedSubdigraph, CompleteDigraphHalf) {
  const auto d = complete_digraph(6);
  const DegreeSpec spec{std::vector<int>(6, 3), std::vector<int>(6, 3)};
  const auto f = prescribed_subdigraph(d, spec);
  ASSERT_EQ(f.status, FactorStatus::Found);
  EXPECT_TRUE(verify_factor(d, f.factor, spec));
}

TEST(PrescribedSubdigraph, UnbalancedSpecThrows) {
  const DegreeSpec spec{{1, 1, 1}, {1, 1, 0}};
  EXPECT_THROW(prescribed_subdigraph(complete_digraph(3), spec), std::invalid_argument);
}

TEST(PrescribedSubdigraph, SliceCompletion) {
  // Top up a random sparse part G1 to a xi n-regular digraph inside G1 ∪ G2.
  const int n = 60;
  const int k = 12;  // xi = 0.2
  const auto [g1, g2] = split_edges(complete_digraph(n), 0.05, Seed{11, 0});
  DegreeSpec spec{std::vector<int>(n), std::vector<int>(n)};
  for (int v = 0; v < n; ++v) {
    spec.out[v] = k - g1.out_degree(v);
    spec.in[v] = k - g1.in_degree(v);
    ASSERT_GE(spec.out[v], 0);
    ASSERT_GE(spec.in[v], 0);
  }
  if (!spec.balanced()) GTEST_SKIP() << "unbalanced split";
  const auto f = prescribed_subdigraph(g2, spec);
  ASSERT_EQ(f.status, FactorStatus::Found);
  EXPECT_TRUE(verify_factor(g2, f.factor, spec));
}

TEST(DigraphFactor, FlowCutDuality) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const Digraph d = random_digraph(8, 0.6, Seed{s, 7});
    const int delta0 = min_semidegree(d);
    for (int r = 1; r <= delta0; ++r) {
      const auto f = find_r_factor_digraph(d, r);
      const auto spec = DegreeSpec::regular(8, r);
      if (f.status == FactorStatus::Found) {
        EXPECT_TRUE(verify_factor(d, f.factor, spec));
      } else {
        ASSERT_TRUE(f.cut.has_value());
        EXPECT_TRUE(verify_cut(d, spec, *f.cut));
        EXPECT_EQ(cut_capacity(d, spec, *f.cut), f.cut->capacity);
      }
    }
  }
}

TEST(DigraphFactor, OneFactorPeeling) {
  // An r-factor contains an (r-1)-factor: peel a perfect matching of its
  // bipartite double and check the remainder.
  for (std::uint64_t s = 0; s < 100; ++s) {
    const int n = 10 + static_cast<int>(s % 31);
    const Digraph d = random_digraph(n, 0.5, Seed{s, 9});
    const auto f = reg_dir_factor(d);
    if (f.r <= 0) continue;
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = f.factor.out_neighbours(v);
    const auto mate = bipartite_max_matching(n, n, adj);
    ASSERT_TRUE(std::none_of(mate.begin(), mate.end(), [](int m) { return m < 0; }));
    Digraph rest = f.factor;
    for (int v = 0; v < n; ++v) rest.remove_arc(v, mate[v]);
    EXPECT_EQ(regular_degree(rest), f.r - 1);
    EXPECT_EQ(find_r_factor_digraph(d, f.r - 1).status, FactorStatus::Found);
  }
}

TEST(GraphFactor, RegEven) {
  EXPECT_EQ(reg_even_undir(complete_graph(7)), 6);
  EXPECT_EQ(reg_even_undir(circulant_graph(5, {1})), 2);
  EXPECT_EQ(reg_even_undir(complete_graph(6)), 4);
  EXPECT_EQ(oracle::reg_even(complete_graph(6)), 4);
}

TEST(GraphFactor, AgreesWithExhaustiveOracle) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const Graph g = gnp(8, 0.6, Seed{s, 3});
    for (int r = 1; r <= 3; ++r) {
      const std::vector<int> targets(8, r);
      const auto f = find_f_factor(g, targets);
      EXPECT_EQ(f.found, oracle::graph_has_factor(g, targets)) << s << " r=" << r;
      if (f.found) {
        EXPECT_TRUE(verify_factor(g, f.factor, targets));
      }
    }
    std::vector<int> mixed(8);
    for (int v = 0; v < 8; ++v) mixed[v] = std::min(g.degree(v), 1 + v % 3);
    const auto f = find_f_factor(g, mixed);
    EXPECT_EQ(f.found, oracle::graph_has_factor(g, mixed)) << s;
  }
}

TEST(GraphFactor, OddRRejected) { EXPECT_THROW(find_r_factor_graph(complete_graph(6), 3), std::invalid_argument); }

TEST(Petersen, SixCycle) {
  const auto c6 = circulant_graph(6, {1});
  const auto f = petersen_2_factorization(c6);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0], c6);
}

TEST(Petersen, PartitionsEdges) {
  for (const Graph& g : {complete_graph(5), circulant_graph(8, {1, 2}), complete_graph(11), circulant_graph(30, {2, 5, 9})}) {
    const auto factors = petersen_2_factorization(g);
    ASSERT_EQ(static_cast<int>(factors.size()), regular_degree(g) / 2);
    Graph acc(g.order());
    for (const auto& f : factors) {
      EXPECT_TRUE(is_two_factor(f));
      for (const auto& e : f.edges()) {
        ASSERT_TRUE(g.has_edge(e.u, e.v));
        ASSERT_FALSE(acc.has_edge(e.u, e.v));
        acc.add_edge(e.u, e.v);
      }
    }
    EXPECT_EQ(acc, g);
  }
}

TEST(Petersen, RejectsOddDegree) { EXPECT_THROW(petersen_2_factorization(complete_graph(6)), std::invalid_argument); }

TEST(TournamentFactor, Rotational) {
  const auto t = rotational_tournament(5);
  const auto f = tournament_factor(t);
  ASSERT_EQ(f.status, FactorStatus::Found);
  EXPECT_EQ(f.factor, t.digraph());
}

TEST(TournamentFactor, RandomHundred) {
  const auto t = random_tournament(100, Seed{7, 0});
  const auto f = tournament_factor(t);
  ASSERT_EQ(f.status, FactorStatus::Found);
  EXPECT_EQ(f.r, min_semidegree(t.digraph()));
  EXPECT_TRUE(verify_factor(t.digraph(), f.factor, DegreeSpec::regular(100, f.r)));
}

TEST(TournamentFactor, Transitive) {
  Digraph d(4);
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) d.add_arc(i, j);
  }
  const auto f = tournament_factor(OrientedGraph(d));
  ASSERT_EQ(f.status, FactorStatus::Found);
  EXPECT_EQ(f.r, 0);
  EXPECT_EQ(f.factor.size(), 0u);
}

TEST(MatchingsExtract, CompleteOdd) {
  const auto r = matchings_extract(complete_graph(7));
  EXPECT_TRUE(r.regular_input);
  EXPECT_EQ(r.factor_degree, 6);
  EXPECT_EQ(r.factor, complete_graph(7));
  EXPECT_LE(r.trace.size(), 1u);
}

TEST(MatchingsExtract, CompleteThirtyMinusMatching) {
  const Graph g = remove_edges(complete_graph(30), {{0, 1}, {2, 3}});
  EXPECT_TRUE(matchings_hypothesis(g, 2));
  const auto r = matchings_extract(g);
  EXPECT_EQ(r.delta, 28);
  EXPECT_EQ(r.s, 4);
  EXPECT_EQ(r.t, 2);
  EXPECT_EQ(r.factor_degree, 28);
  EXPECT_TRUE(verify_factor(g, r.factor, std::vector<int>(30, 28)));
  EXPECT_TRUE(r.matching.empty());
}

TEST(MatchingsExtract, CompleteSixMinusEdge) {
  const Graph g = remove_edges(complete_graph(6), {{0, 1}});
  EXPECT_FALSE(matchings_hypothesis(g, 1));
  EXPECT_THROW(matchings_extract(g), HypothesisNotMet);
}

TEST(MatchingsExtract, DeclaredTBelowDeficitThrows) {
  const Graph g = remove_edges(complete_graph(30), {{0, 1}, {2, 3}});
  EXPECT_THROW(matchings_extract(g, 1), HypothesisNotMet);
}

TEST(MatchingsExtract, OddDeltaGivesMatchingAndFactor) {
  const Graph h = remove_edges(complete_graph(33), {{0, 1}, {2, 3}});
  const auto odd = matchings_extract(h);
  ASSERT_EQ(odd.delta, 31);
  EXPECT_EQ(odd.factor_degree, 30);
  EXPECT_TRUE(is_optimal_matching(h, odd.matching));
  Graph rest = h;
  for (const auto& e : odd.matching) rest.remove_edge(e.u, e.v);
  EXPECT_TRUE(verify_factor(rest, odd.factor, std::vector<int>(33, 30)));
}

TEST(MatchingsExtract, TraceDropsMaxDegreeByOne) {
  Rng rng(Seed{5, 0});
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 20; ++trial) {
    const int n = rng.between(40, 70);
    Graph g = complete_graph(n);
    const int removals = rng.between(1, 3);
    for (int i = 0; i < removals; ++i) {
      const int u = rng.between(0, n - 1), v = rng.between(0, n - 1);
      if (u != v && g.has_edge(u, v)) g.remove_edge(u, v);
    }
    if (regular_degree(g) >= 0 || !matchings_hypothesis(g, n - min_degree(g))) continue;
    const auto r = matchings_extract(g);
    ++checked;
    const int t = r.t;
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
      EXPECT_EQ(r.trace[i].min_degree, r.delta);
      if (i + 1 < r.trace.size()) {
        EXPECT_EQ(r.trace[i + 1].max_degree, r.trace[i].max_degree - 1);
        if (r.trace[i + 1].max_degree > r.delta) {
          EXPECT_GE(r.trace[i + 1].max_class, 2 * t);
        }
      }
    }
    // An odd maximum class at the last step ends with the matching step instead of a snapshot.
    if (r.matching.empty()) {
      EXPECT_EQ(r.trace.back().max_degree, r.delta);
    } else {
      EXPECT_LE(r.trace.back().max_degree, r.delta + 1);
    }
    const Graph& f = r.factor;
    EXPECT_EQ(regular_degree(f), r.factor_degree);
  }
  EXPECT_GE(checked, 10);
}
