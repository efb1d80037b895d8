#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "robustham/graph.hpp"

namespace robustham {

struct SearchBudget {
  std::int64_t max_nodes = 50'000'000;  // search-tree nodes, shared across a whole packing
  double max_seconds = 120.0;          // wall clock per call
  int restarts = 16;                   // rotation-extension attempts
  std::uint64_t seed = 0;              // for the heuristic only
};

enum class SearchStatus { Found, None, BudgetExhausted };
const char* to_string(SearchStatus s);

// Exact search is limited by 64-bit vertex masks.
inline constexpr int kExactSearchMaxOrder = 64;

struct HamiltonResult {
  SearchStatus status = SearchStatus::None;
  std::vector<int> cycle;  // starts at 0; undirected cycles list the smaller neighbour of 0 second
  std::int64_t nodes = 0;
  bool heuristic = false;  // found by rotation-extension
};

// Rotation-extension first on undirected graphs with n > 12, then exact
// backtracking with reachability and degree pruning. None is reported only
// after the whole search space is exhausted. Requires n >= 3.
HamiltonResult find_hamilton(const Graph& g, const SearchBudget& budget = {});
HamiltonResult find_hamilton(const Digraph& g, const SearchBudget& budget = {});

struct HamiltonPacking {
  bool directed = false;
  int n = 0;
  std::vector<std::vector<int>> cycles;
  bool complete = false;  // the cycles partition the edge set
};

struct PackResult {
  SearchStatus status = SearchStatus::None;  // Found: target reached; None: exhausted below target
  HamiltonPacking packing;                   // largest packing seen
  std::int64_t nodes = 0;
};

// Exhaustive search for `target` edge-disjoint Hamilton cycles. Cycles
// start at 0 and successive cycles leave 0 through increasing neighbours.
// Throws std::invalid_argument when target exceeds ⌊δ/2⌋ (undirected) or
// δ⁰ (directed).
PackResult pack_hamilton(const Graph& g, int target, const SearchBudget& budget = {});
PackResult pack_hamilton(const Digraph& g, int target, const SearchBudget& budget = {});

struct PackingCheck {
  bool ok = true;
  std::string violation;
};

PackingCheck verify_packing(const Graph& g, const HamiltonPacking& p);
PackingCheck verify_packing(const Digraph& g, const HamiltonPacking& p);

struct HamVsReg {
  bool directed = false;
  int reg = 0;        // reg(G), or reg_even(G) for graphs
  int bound = 0;      // reg(G), or reg_even(G)/2
  int ham_lower = 0;  // size of the packing found
  bool equality = false;
  bool packed_factor = false;  // the packing lives inside the extracted factor
  SearchStatus status = SearchStatus::None;
  HamiltonPacking packing;
};

// Extracts the largest regular factor, packs it, and falls back to packing
// g directly when the factor has too few cycles.
HamVsReg ham_vs_reg(const Graph& g, const SearchBudget& budget = {});
HamVsReg ham_vs_reg(const Digraph& g, const SearchBudget& budget = {});

}  // namespace robustham
