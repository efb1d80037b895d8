#pragma once

// Slow, independent reference implementations used to derive and freeze
// expected values. None of these call into the library's algorithms.

#include <cstdint>
#include <optional>
#include <vector>

#include "robustham/graph.hpp"
#include "robustham/rational.hpp"

namespace oracle {

using robustham::Digraph;
using robustham::Graph;
using robustham::Rational;

// floor((delta + sqrt(n(2 delta - n) + [n, delta differ in parity])) / 2)
// by exact search over big integers.
std::int64_t f_dir(int n, int delta);

// Exhaustive search for an r-factor. Exponential; small inputs only.
bool digraph_has_factor(const Digraph& g, int r);
bool graph_has_factor(const Graph& g, const std::vector<int>& targets);

// Largest r with an r-factor, by decrementing from δ⁰.
int reg_dir(const Digraph& g);
// Largest even r with an r-factor.
int reg_even(const Graph& g);

// Brute-force robust expansion over all subsets (bitmask order).
// Returns the first violating subset, or nullopt when expanding.
std::optional<std::uint32_t> expansion_violation(const Digraph& g, const Rational& nu, const Rational& tau);

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a);
// max |λ_i| over all eigenvalues except the largest (d for d-regular g).
double second_eigenvalue(const Graph& g);

// Hamilton cycle existence by trying every permutation fixing vertex 0.
bool has_hamilton_cycle(const Graph& g);
bool has_hamilton_cycle(const Digraph& g);

// Maximum number of edge-disjoint Hamilton cycles by enumerating all
// Hamilton cycles and searching for disjoint families. n <= 9.
int max_hamilton_packing(const Graph& g);
int max_hamilton_packing(const Digraph& g);

// All-pairs BFS diameter; -1 when not strongly connected.
int diameter(const Digraph& g);

// Exact binomial quantities at p = 1/2: C(n-1, k) / 2^(n-1) and the tail.
double binom_half_pmf(int trials, int k);
double binom_half_cdf(int trials, int k);

}  // namespace oracle
