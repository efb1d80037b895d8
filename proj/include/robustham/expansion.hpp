#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "robustham/graph.hpp"
#include "robustham/random.hpp"
#include "robustham/rational.hpp"

namespace robustham {

// 0 < nu <= tau < 1, held exactly.
struct ExpansionParams {
  Rational nu;
  Rational tau;

  // Throws std::invalid_argument unless 0 < nu <= tau < 1.
  static ExpansionParams make(Rational nu, Rational tau);
};

enum class VerdictKind { Certified, Refuted, NoViolationFound, NotApplicable };
enum class CertMethod { Exact, Degree, Spectral };

const char* to_string(VerdictKind k);
const char* to_string(CertMethod m);

struct ExpansionVerdict {
  VerdictKind kind = VerdictKind::NotApplicable;
  ExpansionParams params;
  std::optional<CertMethod> method;  // Certified only
  // Refuted: the violating set, |RN_nu(S)| and |S| + nu n.
  std::vector<int> witness;
  int rn_size = 0;
  Rational required;
  std::int64_t trials = 0;  // NoViolationFound, and the trial that refuted
  std::string reason;       // NotApplicable
  std::map<std::string, double> diagnostics;
};

// Integer range of |S| with tau n <= |S| <= (1 - tau) n; empty when lo > hi.
struct SizeRange {
  int lo = 0;
  int hi = -1;
};
SizeRange size_range(int n, const ExpansionParams& p);

// {x : |N⁻(x) ∩ S| >= nu n}.
std::vector<int> robust_outneighbourhood(const Digraph& g, const std::vector<int>& s, const Rational& nu);
std::vector<int> robust_outneighbourhood(const Graph& g, const std::vector<int>& s, const Rational& nu);

// Recomputes a Refuted witness from scratch.
bool verify_refutation(const Digraph& g, const ExpansionVerdict& v);

inline constexpr int kExactMaxOrder = 22;

// Enumerates every S in the size range, by size and then lexicographically;
// the first violation is the witness. n <= 22.
ExpansionVerdict check_exact(const Digraph& g, const ExpansionParams& p);
ExpansionVerdict check_exact(const Graph& g, const ExpansionParams& p);

// One-sided search: mixes uniform sets, breadth-first balls and a local
// search on |RN(S)| - |S|. Never certifies.
ExpansionVerdict refute_sampled(const Digraph& g, const ExpansionParams& p, std::int64_t trials, Seed seed);
ExpansionVerdict refute_sampled(const Graph& g, const ExpansionParams& p, std::int64_t trials, Seed seed);

// Minimum-degree certificate with eps = δ⁰/n - 1/2 (δ/n - 1/2 for graphs):
// Certified iff eps > 0, nu <= tau <= eps and eps >= 2 nu / tau.
ExpansionVerdict certify_degree(const Digraph& g, const ExpansionParams& p);
ExpansionVerdict certify_degree(const Graph& g, const ExpansionParams& p);

struct SpectralData {
  int n = 0;
  int d = 0;
  double lambda = 0;  // max over non-trivial eigenvalues of |λ_i|
  double residual = 0;
  double tolerance = 1e-9;
};

// Throws std::invalid_argument on non-regular input.
SpectralData second_eigenvalue(const Graph& g);

struct MixingReport {
  bool holds = true;
  bool exhaustive = false;
  std::uint64_t pairs = 0;
  double worst_margin = 0;  // max of lhs - rhs over checked pairs
  std::vector<int> violating_a;
  std::vector<int> violating_b;
};

// |e'(A,B)/(|A||B|) - d/n| <= λ/sqrt(|A||B|) with e' counting ordered
// adjacent pairs. Exhaustive over all nonempty A, B for n <= 16, using the
// fact that for fixed A and |B| only the extreme sums of |N(v) ∩ A| matter.
MixingReport verify_mixing_exhaustive(const Graph& g, const SpectralData& s);
MixingReport verify_mixing_sampled(const Graph& g, const SpectralData& s, std::int64_t pairs, Seed seed);

// Spectral certificate: for every integer s in the size range,
//   s d - nu n^2 >= (d/n) s (s + nu n) + λ sqrt(s (s + nu n)).
// Non-regular input throws; d < alpha n yields NotApplicable.
ExpansionVerdict certify_spectral(const Graph& g, const ExpansionParams& p, std::optional<double> alpha = std::nullopt);

}  // namespace robustham
