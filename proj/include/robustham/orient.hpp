#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "robustham/graph.hpp"
#include "robustham/random.hpp"

namespace robustham {

// An orientation of an undirected graph: arcs[i] orients edges[i] of the
// source graph (edges in sorted order).
struct OrientationResult {
  Digraph digraph;
  std::vector<Edge> edges;
  std::vector<Arc> arcs;
  std::vector<int> out_degree;
  std::vector<int> in_degree;
};

OrientationResult make_orientation(int n, std::vector<Edge> edges, std::vector<Arc> arcs);

// Each edge independently directed either way with probability 1/2.
OrientationResult random_orientation(const Graph& g, Seed seed);

// Each arc goes to the first part with probability lambda, independently.
std::pair<Digraph, Digraph> split_edges(const Digraph& g, double lambda, Seed seed);

// Orients every edge along an Euler circuit of its component, so
// d⁺(x) = d⁻(x) = d(x)/2. Throws std::invalid_argument on odd degrees.
OrientationResult euler_orientation(const Graph& g);

int disc_vertex(const Digraph& g, int x);
long long disc(const Digraph& g);

class PathNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SwitchStep {
  std::vector<int> path;  // vertices x = path.front() ... y = path.back()
  long long disc_before = 0;
  long long disc_after = 0;
};

struct SwitchTrace {
  std::vector<SwitchStep> steps;
  std::map<int, int> path_length_histogram;  // arcs per reversed path -> count
};

struct BalanceResult {
  OrientationResult orientation;
  SwitchTrace trace;
};

// Repeatedly reverses a shortest directed path from the lowest-id vertex
// with d⁺ > d⁻ to the lowest-id reachable vertex with d⁻ > d⁺. The
// underlying graph must be regular of even degree.
BalanceResult path_switch_balance(const OrientedGraph& g);

enum class OrientationPipeline {
  Euler,        // Euler circuits
  ExpanderSlice // random orientation, regular slice, Euler-oriented remainder
};

struct PipelineOptions {
  double xi = 0.05;
  double lambda = 0.10;
  int max_attempts = 32;
};

struct RegularOrientation {
  OrientationResult orientation;
  OrientationPipeline pipeline = OrientationPipeline::Euler;
  // Set by the slice pipeline: the regular slice and its degree.
  std::optional<Digraph> slice;
  int slice_degree = 0;
  int attempts = 0;
};

class PipelineFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// r/2-regular orientation of an r-regular graph with r even.
RegularOrientation regular_orientation(const Graph& g, OrientationPipeline pipeline = OrientationPipeline::Euler,
                                       Seed seed = {}, const PipelineOptions& options = {});

// Longest shortest directed path over ordered pairs; nullopt when the
// digraph is not strongly connected.
std::optional<int> diameter(const Digraph& g);

}  // namespace robustham
