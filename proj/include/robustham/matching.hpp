#pragma once

#include <vector>

#include "robustham/graph.hpp"

namespace robustham {

// Hopcroft–Karp. adj[l] lists right vertices adjacent to left vertex l.
// Returns mate_of_left (right index or -1).
std::vector<int> bipartite_max_matching(int left, int right, const std::vector<std::vector<int>>& adj);

// Edmonds' blossom algorithm on an arbitrary simple graph given as
// adjacency lists. Greedy start in ascending vertex order, then one
// augmenting-path search per unmatched vertex. Returns mate (or -1).
std::vector<int> max_cardinality_matching(const std::vector<std::vector<int>>& adj);
std::vector<int> max_cardinality_matching(const Graph& g);

// Edges {v, mate[v]} with v < mate[v], sorted.
std::vector<Edge> matching_edges(const std::vector<int>& mate);

}  // namespace robustham
