#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "robustham/graph.hpp"

namespace robustham {

// Per-vertex target out- and indegrees.
struct DegreeSpec {
  std::vector<int> out;
  std::vector<int> in;

  static DegreeSpec regular(int n, int r);
  bool balanced() const;
};

// Minimum cut of the bipartite flow network: U are the copies in the
// out-side class still joined to the source, W the copies in the in-side
// class still joined to the sink. Infeasibility is certified by
// capacity < required, where
//   capacity = sum_{a not in U} out(a) + e(U, W) + sum_{b not in W} in(b).
struct CutWitness {
  std::vector<int> U;
  std::vector<int> W;
  std::int64_t capacity = 0;
  std::int64_t required = 0;
};

enum class FactorStatus {
  Found,
  Infeasible,           // certified by a cut witness
  TriviallyInfeasible,  // some target exceeds the available degree
};

struct DigraphFactor {
  FactorStatus status = FactorStatus::Infeasible;
  Digraph factor;
  int r = -1;  // common degree when the targets are regular
  std::optional<CutWitness> cut;
  std::string reason;
};

// Exact degree-constrained spanning subdigraph via max-flow on the
// bipartite double of g. Throws std::invalid_argument on an unbalanced spec.
DigraphFactor prescribed_subdigraph(const Digraph& g, const DegreeSpec& spec);

// r-factor of a digraph; r > δ⁰(g) is reported as TriviallyInfeasible.
DigraphFactor find_r_factor_digraph(const Digraph& g, int r);

// Recomputes the capacity of a cut from scratch in O(n^2).
std::int64_t cut_capacity(const Digraph& g, const DegreeSpec& spec, const CutWitness& cut);
// True when the witness is a genuine certificate: recomputed capacity
// matches and is below the required flow value.
bool verify_cut(const Digraph& g, const DegreeSpec& spec, const CutWitness& cut);

// h is a spanning subdigraph of g with exactly the prescribed degrees.
bool verify_factor(const Digraph& g, const Digraph& h, const DegreeSpec& spec);

// Largest r such that g has an r-factor (binary search over r).
int reg_dir(const Digraph& g);
// reg_dir together with a witness factor.
DigraphFactor reg_dir_factor(const Digraph& g);

// δ⁰(T)-factor of a tournament.
DigraphFactor tournament_factor(const OrientedGraph& t);

// ---------------------------------------------------------- undirected

inline constexpr int kUndirectedFactorMaxOrder = 300;

struct GraphFactor {
  bool found = false;
  Graph factor;
  std::string reason;
};

// Spanning subgraph with degree targets[v] at every v, by reduction to
// perfect matching on Tutte's degree gadget. n <= 300.
GraphFactor find_f_factor(const Graph& g, const std::vector<int>& targets);
// r even; throws std::invalid_argument for odd r.
GraphFactor find_r_factor_graph(const Graph& g, int r);
bool verify_factor(const Graph& g, const Graph& h, const std::vector<int>& targets);

// Largest even r such that g has an r-factor.
int reg_even_undir(const Graph& g);

// Edge-disjoint 2-factors partitioning E(g), for g regular of positive
// even degree. Throws std::invalid_argument otherwise.
std::vector<Graph> petersen_2_factorization(const Graph& g);

// ------------------------------------------------------- matchings lemma

class HypothesisNotMet : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MatchingsStep {
  int max_degree = 0;
  int min_degree = 0;
  int max_class = 0;  // vertices of maximum degree
  int min_class = 0;  // vertices of minimum degree
};

struct MatchingsResult {
  int n = 0;
  int delta = 0;
  int max_deg = 0;
  int s = 0;  // vertices of minimum degree
  int t = 0;
  bool regular_input = false;
  int factor_degree = 0;       // delta when even, delta - 1 when odd
  Graph factor;                // the factor_degree-factor
  std::vector<Edge> matching;  // optimal matching disjoint from factor (delta odd)
  std::vector<MatchingsStep> trace;
};

// Hypothesis n >= s + 3t + 2t(Δ - δ) with δ >= n - t.
bool matchings_hypothesis(const Graph& g, int t);

// Degree-trimming procedure: returns a δ-factor when δ is even, otherwise
// an optimal matching M and a (δ-1)-factor of g - M. t defaults to n - δ.
// Regular inputs are handled directly. Throws HypothesisNotMet.
MatchingsResult matchings_extract(const Graph& g, std::optional<int> t = std::nullopt);

// True when m is a matching of g covering all but at most one vertex.
bool is_optimal_matching(const Graph& g, const std::vector<Edge>& m);

}  // namespace robustham
