#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "robustham/graph.hpp"
#include "robustham/hamilton.hpp"
#include "robustham/random.hpp"

namespace robustham {

// ------------------------------------------------------------ generators

OrientedGraph random_tournament(int n, Seed seed);
Graph gnp(int n, double p, Seed seed);
// Every ordered pair becomes an arc with probability p.
Digraph random_digraph(int n, double p, Seed seed);

Graph circulant_graph(int n, const std::vector<int>& shifts);
Digraph circulant_digraph(int n, const std::vector<int>& shifts);
Digraph complete_digraph(int n);
Graph complete_graph(int n);

// A = {0, .., n-Δ-1} spans no arcs; B = {n-Δ, .., n-1} is the circulant
// with shifts 1..(δ+Δ-n); every arc between A and B in both directions.
struct ExtremalConstruction {
  int n = 0;
  int delta = 0;
  int Delta = 0;
  int a_size = 0;
  int b_size = 0;
  int b_degree = 0;
  bool complete = false;  // δ = n-1: the complete digraph
};

// Requires n/2 <= δ <= n-1. Δ = max(⌈(n + sqrt(n(2δ-n) + 1_{n≢δ}))/2⌉, δ + 1).
std::pair<Digraph, ExtremalConstruction> extremal_digraph(int n, int delta);

// i -> i+j (mod n) for j = 1..(n-1)/2; n odd.
OrientedGraph rotational_tournament(int n);
// k classes of even size m; each class pair is an m/2-regular bipartite
// tournament: (c,i) -> (c',j) for c < c' iff (j - i) mod m < m/2.
OrientedGraph k_partite_tournament(int k, int m);
// q prime, q ≡ 1 (mod 4); i ~ j iff i - j is a non-zero square mod q.
Graph paley(int q);

// ----------------------------------------------------------- experiments

// One Monte-Carlo trial. Integer and real statistics are kept apart so the
// JSON is unambiguous. runtime_seconds is only serialized on request.
struct TrialReport {
  std::string model;
  std::uint64_t seed = 0;
  std::int64_t trial = 0;
  std::map<std::string, double> params;
  std::map<std::string, std::int64_t> counts;
  std::map<std::string, double> values;
  std::map<std::string, bool> conditions;
  double runtime_seconds = 0;
};

// Runs body(t) for t in [0, trials) on up to `jobs` threads; results are
// returned in trial order.
std::vector<TrialReport> run_trials(std::int64_t trials, int jobs,
                                    const std::function<TrialReport(std::int64_t)>& body);

// Semidegree window (i), (ii) and the edge-discrepancy bound (iii)
// |e_T(A,B) - |A||B|/2| <= 9 n^{3/2} over `pairs` pairs, the first A = B = V.
std::vector<TrialReport> tourn_edges_suite(int n, std::int64_t trials, double eps, Seed seed, int pairs = 200,
                                           int jobs = 1);

// Random tournament -> δ⁰-factor -> exhaustive packing of δ⁰ cycles
// (packing only for n <= 13).
std::vector<TrialReport> erdos_experiment(int n, std::int64_t trials, const SearchBudget& budget, Seed seed,
                                          int jobs = 1);

// G(n,p) with p >= 2/3: hypothesis check of the trimming procedure, the
// procedure itself when it applies, and an independent exact factor route.
std::vector<TrialReport> gnp_h_property(int n, double p, std::int64_t trials, Seed seed, int jobs = 1);

}  // namespace robustham
