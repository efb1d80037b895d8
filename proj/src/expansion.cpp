#include "robustham/expansion.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace robustham {

ExpansionParams ExpansionParams::make(Rational nu, Rational tau) {
  if (!(nu > 0 && nu <= tau && tau < 1)) throw std::invalid_argument("expansion parameters need 0 < nu <= tau < 1");
  return {nu, tau};
}

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Certified: return "certified";
    case VerdictKind::Refuted: return "refuted";
    case VerdictKind::NoViolationFound: return "no_violation_found";
    case VerdictKind::NotApplicable: return "not_applicable";
  }
  return "";
}

const char* to_string(CertMethod m) {
  switch (m) {
    case CertMethod::Exact: return "exact";
    case CertMethod::Degree: return "degree";
    case CertMethod::Spectral: return "spectral";
  }
  return "";
}

SizeRange size_range(int n, const ExpansionParams& p) {
  return {static_cast<int>(ceil(p.tau * n)), static_cast<int>(floor((1 - p.tau) * n))};
}

namespace {

// Smallest integer count meeting "at least nu n".
int threshold(int n, const Rational& nu) { return static_cast<int>(ceil(nu * n)); }

// |RN| - |S| < nu n  <=>  |RN| - |S| < ceil(nu n) for integers.
bool violates(int rn, int s, int thr) { return rn - s < thr; }

ExpansionVerdict refuted(const ExpansionParams& p, int n, std::vector<int> s, int rn) {
  ExpansionVerdict v;
  v.kind = VerdictKind::Refuted;
  v.params = p;
  v.required = Rational(static_cast<std::int64_t>(s.size())) + p.nu * n;
  v.witness = std::move(s);
  v.rn_size = rn;
  return v;
}

ExpansionVerdict certified(const ExpansionParams& p, CertMethod m) {
  ExpansionVerdict v;
  v.kind = VerdictKind::Certified;
  v.params = p;
  v.method = m;
  return v;
}

ExpansionVerdict not_applicable(const ExpansionParams& p, std::string reason) {
  ExpansionVerdict v;
  v.kind = VerdictKind::NotApplicable;
  v.params = p;
  v.reason = std::move(reason);
  return v;
}

}  // namespace

std::vector<int> robust_outneighbourhood(const Digraph& g, const std::vector<int>& s, const Rational& nu) {
  const int n = g.order();
  const int thr = threshold(n, nu);
  std::vector<int> count(n, 0);
  for (int v : s) {
    for (int w : g.out_neighbours(v)) ++count[w];
  }
  std::vector<int> out;
  for (int x = 0; x < n; ++x) {
    if (count[x] >= thr) out.push_back(x);
  }
  return out;
}

std::vector<int> robust_outneighbourhood(const Graph& g, const std::vector<int>& s, const Rational& nu) {
  return robust_outneighbourhood(symmetric_digraph(g), s, nu);
}

bool verify_refutation(const Digraph& g, const ExpansionVerdict& v) {
  if (v.kind != VerdictKind::Refuted) return false;
  const int n = g.order();
  const auto range = size_range(n, v.params);
  const int s = static_cast<int>(v.witness.size());
  if (s < range.lo || s > range.hi) return false;
  std::vector<int> sorted = v.witness;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= n)) return false;
  const int rn = static_cast<int>(robust_outneighbourhood(g, sorted, v.params.nu).size());
  return rn == v.rn_size && Rational(rn) < Rational(s) + v.params.nu * n;
}

ExpansionVerdict check_exact(const Digraph& g, const ExpansionParams& p) {
  const int n = g.order();
  if (n > kExactMaxOrder) throw std::invalid_argument("check_exact is limited to n <= " + std::to_string(kExactMaxOrder));
  const int thr = threshold(n, p.nu);
  std::vector<std::uint32_t> in_mask(n, 0);
  for (const Arc& a : g.arcs()) in_mask[a.head] |= 1u << a.tail;

  const auto range = size_range(n, p);
  std::vector<int> idx;
  for (int s = std::max(range.lo, 0); s <= range.hi; ++s) {
    idx.resize(s);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::uint32_t mask = 0;
      for (int v : idx) mask |= 1u << v;
      int rn = 0;
      for (int x = 0; x < n; ++x) rn += std::popcount(in_mask[x] & mask) >= thr;
      if (violates(rn, s, thr)) return refuted(p, n, idx, rn);
      // Next combination in lexicographic order.
      int i = s - 1;
      while (i >= 0 && idx[i] == n - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return certified(p, CertMethod::Exact);
}

ExpansionVerdict check_exact(const Graph& g, const ExpansionParams& p) { return check_exact(symmetric_digraph(g), p); }

namespace {

// Maintains |N⁻(x) ∩ S| for a changing S.
class SetState {
 public:
  SetState(const Digraph& g, int thr) : g_(g), thr_(thr), count_(g.order(), 0), member_(g.order(), 0) {}

  void add(int v) {
    member_[v] = 1;
    ++size_;
    for (int w : g_.out_neighbours(v)) rn_ += ++count_[w] == thr_;
  }
  void remove(int v) {
    member_[v] = 0;
    --size_;
    for (int w : g_.out_neighbours(v)) rn_ -= count_[w]-- == thr_;
  }
  // Change of |RN| - |S| if v were toggled.
  int gain(int v) const {
    int delta = 0;
    if (member_[v]) {
      for (int w : g_.out_neighbours(v)) delta -= count_[w] == thr_;
      return delta + 1;
    }
    for (int w : g_.out_neighbours(v)) delta += count_[w] == thr_ - 1;
    return delta - 1;
  }
  bool member(int v) const { return member_[v] != 0; }
  int size() const { return size_; }
  int rn() const { return thr_ <= 0 ? g_.order() : rn_; }
  std::vector<int> members() const {
    std::vector<int> out;
    for (int v = 0; v < g_.order(); ++v) {
      if (member_[v]) out.push_back(v);
    }
    return out;
  }

 private:
  const Digraph& g_;
  int thr_;
  std::vector<int> count_;
  std::vector<char> member_;
  int size_ = 0;
  int rn_ = 0;
};

std::vector<int> random_subset(Rng& rng, int n, int size) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  for (int i = 0; i < size; ++i) std::swap(all[i], all[i + rng.below(n - i)]);
  all.resize(size);
  return all;
}

std::vector<int> bfs_ball(const Digraph& g, Rng& rng, int size) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  const int start = static_cast<int>(rng.below(n));
  std::vector<int> queue{start};
  seen[start] = 1;
  for (std::size_t i = 0; i < queue.size() && static_cast<int>(queue.size()) < size; ++i) {
    for (const auto* list : {&g.out_neighbours(queue[i]), &g.in_neighbours(queue[i])}) {
      for (int w : *list) {
        if (!seen[w] && static_cast<int>(queue.size()) < size) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  while (static_cast<int>(queue.size()) < size) {
    const int v = static_cast<int>(rng.below(n));
    if (!seen[v]) {
      seen[v] = 1;
      queue.push_back(v);
    }
  }
  return queue;
}

}  // namespace

ExpansionVerdict refute_sampled(const Digraph& g, const ExpansionParams& p, std::int64_t trials, Seed seed) {
  if (trials < 0) throw std::invalid_argument("trials must be non-negative");
  const int n = g.order();
  const auto range = size_range(n, p);
  ExpansionVerdict none;
  none.kind = VerdictKind::NoViolationFound;
  none.params = p;
  none.trials = trials;
  if (range.lo > range.hi || n == 0) return none;
  const int thr = threshold(n, p.nu);
  const int lo = std::max(range.lo, 0);
  const int hi = range.hi;

  for (std::int64_t t = 0; t < trials; ++t) {
    Rng rng(seed, static_cast<std::uint64_t>(t));
    const int size = rng.between(lo, hi);
    const int kind = static_cast<int>(t % 3);
    SetState state(g, thr);
    for (int v : kind == 1 ? bfs_ball(g, rng, size) : random_subset(rng, n, size)) state.add(v);

    auto check = [&]() -> std::optional<ExpansionVerdict> {
      if (!violates(state.rn(), state.size(), thr)) return std::nullopt;
      auto v = refuted(p, n, state.members(), state.rn());
      v.trials = t + 1;
      return v;
    };
    if (auto v = check()) return *v;
    if (kind != 2) continue;

    // Local search: toggle the best of a random candidate sample while
    // |RN| - |S| does not increase.
    const int steps = std::min(n, 64);
    const int candidates = std::min(n, 64);
    for (int step = 0; step < steps; ++step) {
      int best = -1;
      int best_gain = 1;
      for (int c = 0; c < candidates; ++c) {
        const int v = candidates == n ? c : static_cast<int>(rng.below(n));
        const int next_size = state.size() + (state.member(v) ? -1 : 1);
        if (next_size < lo || next_size > hi) continue;
        const int gain = state.gain(v);
        if (gain < best_gain || (gain == best_gain && best >= 0 && v < best)) {
          best = v;
          best_gain = gain;
        }
      }
      if (best < 0 || best_gain > 0) break;
      if (state.member(best)) {
        state.remove(best);
      } else {
        state.add(best);
      }
      if (auto v = check()) return *v;
    }
  }
  return none;
}

ExpansionVerdict refute_sampled(const Graph& g, const ExpansionParams& p, std::int64_t trials, Seed seed) {
  return refute_sampled(symmetric_digraph(g), p, trials, seed);
}

namespace {

ExpansionVerdict certify_by_degree(int n, int delta, const ExpansionParams& p) {
  if (n == 0) return not_applicable(p, "empty graph");
  const Rational eps = Rational(delta, n) - Rational(1, 2);
  auto v = not_applicable(p, "");
  if (eps <= 0) {
    v.reason = "minimum degree is at most n/2";
  } else if (p.tau > eps) {
    v.reason = "tau exceeds eps";
  } else if (eps < 2 * p.nu / p.tau) {
    v.reason = "eps < 2 nu / tau";
  } else {
    v = certified(p, CertMethod::Degree);
  }
  v.diagnostics["eps"] = to_double(eps);
  v.diagnostics["two_nu_over_tau"] = to_double(2 * p.nu / p.tau);
  return v;
}

}  // namespace

ExpansionVerdict certify_degree(const Digraph& g, const ExpansionParams& p) {
  return certify_by_degree(g.order(), g.order() == 0 ? 0 : min_semidegree(g), p);
}

ExpansionVerdict certify_degree(const Graph& g, const ExpansionParams& p) {
  return certify_by_degree(g.order(), g.order() == 0 ? 0 : min_degree(g), p);
}

SpectralData second_eigenvalue(const Graph& g) {
  const int n = g.order();
  const int d = regular_degree(g);
  if (d < 0 || n == 0) throw std::invalid_argument("second_eigenvalue requires a non-empty regular graph");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1.0;
  // Removing (d/n)J sends the all-ones eigenvalue d to 0 and leaves the
  // rest of the spectrum unchanged.
  const Eigen::MatrixXd deflated = a - Eigen::MatrixXd::Constant(n, n, static_cast<double>(d) / n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(deflated);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigen-solve failed");
  const auto& values = solver.eigenvalues();
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < values.size(); ++i) {
    if (std::abs(values[i]) > std::abs(values[best])) best = i;
  }
  SpectralData s;
  s.n = n;
  s.d = d;
  s.lambda = std::abs(values[best]);
  const Eigen::VectorXd v = solver.eigenvectors().col(best);
  s.residual = (deflated * v - values[best] * v).norm() / v.norm();
  if (s.residual > s.tolerance) throw std::runtime_error("eigenpair residual above tolerance");
  return s;
}

namespace {

// lhs - rhs of the mixing inequality; e counts ordered pairs.
double mixing_margin(double e, double a, double b, const SpectralData& s) {
  return std::abs(e / (a * b) - static_cast<double>(s.d) / s.n) - s.lambda / std::sqrt(a * b);
}

constexpr double kMixingSlack = 1e-9;

}  // namespace

MixingReport verify_mixing_exhaustive(const Graph& g, const SpectralData& s) {
  const int n = g.order();
  if (n > 16) throw std::invalid_argument("exhaustive mixing check is limited to n <= 16");
  MixingReport report;
  report.exhaustive = true;
  report.worst_margin = -std::numeric_limits<double>::infinity();
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::pair<int, int>> c(n);  // (|N(v) ∩ A|, v)
  for (std::uint32_t a = 1; a <= full; ++a) {
    for (int v = 0; v < n; ++v) c[v] = {std::popcount(adj[v] & a), v};
    std::sort(c.begin(), c.end());
    const double size_a = std::popcount(a);
    int low = 0;
    int high = 0;
    for (int k = 1; k <= n; ++k) {
      low += c[k - 1].first;
      high += c[n - k].first;
      for (int which = 0; which < 2; ++which) {
        const double margin = mixing_margin(which == 0 ? low : high, size_a, k, s);
        report.worst_margin = std::max(report.worst_margin, margin);
        if (margin > kMixingSlack && report.holds) {
          report.holds = false;
          for (int v = 0; v < n; ++v) {
            if (a >> v & 1u) report.violating_a.push_back(v);
          }
          for (int j = 0; j < k; ++j) report.violating_b.push_back(which == 0 ? c[j].second : c[n - 1 - j].second);
          std::sort(report.violating_b.begin(), report.violating_b.end());
        }
      }
    }
  }
  report.pairs = static_cast<std::uint64_t>(full) * full;
  return report;
}

MixingReport verify_mixing_sampled(const Graph& g, const SpectralData& s, std::int64_t pairs, Seed seed) {
  const int n = g.order();
  MixingReport report;
  report.worst_margin = -std::numeric_limits<double>::infinity();
  Rng rng(seed, 0x6d6978ULL);
  auto draw = [&]() {
    std::vector<int> set;
    while (set.empty()) {
      for (int v = 0; v < n; ++v) {
        if (rng.coin()) set.push_back(v);
      }
    }
    return set;
  };
  for (std::int64_t i = 0; i < pairs; ++i) {
    const auto a = draw();
    const auto b = draw();
    std::vector<char> in_b(n, 0);
    for (int v : b) in_b[v] = 1;
    long long e = 0;
    for (int v : a) {
      for (int w : g.neighbours(v)) e += in_b[w];
    }
    const double margin = mixing_margin(static_cast<double>(e), a.size(), b.size(), s);
    report.worst_margin = std::max(report.worst_margin, margin);
    ++report.pairs;
    if (margin > kMixingSlack && report.holds) {
      report.holds = false;
      report.violating_a = a;
      report.violating_b = b;
    }
  }
  return report;
}

ExpansionVerdict certify_spectral(const Graph& g, const ExpansionParams& p, std::optional<double> alpha) {
  const int n = g.order();
  const auto spectral = second_eigenvalue(g);
  const double d = spectral.d;
  const double lambda = spectral.lambda;
  const double nu = to_double(p.nu);
  const double tau = to_double(p.tau);

  ExpansionVerdict v;
  v.params = p;
  v.diagnostics["lambda"] = lambda;
  v.diagnostics["d"] = d;
  // The literal inequality chain of the proof, reported for comparison.
  const double theta = lambda / std::sqrt(tau * n * d / 2);
  v.diagnostics["chain_a"] = nu * n * n <= (tau / 4) * tau * n * d;
  v.diagnostics["chain_b"] = (d / n + theta) * (1 - tau) <= (1 - tau / 2) * d / n;
  v.diagnostics["chain_c"] = tau * tau / 4 >= nu;

  if (alpha && d < *alpha * n) {
    v.kind = VerdictKind::NotApplicable;
    v.reason = "degree below alpha n";
    return v;
  }
  const auto range = size_range(n, p);
  const double nu_n = nu * n;
  double worst = std::numeric_limits<double>::infinity();
  for (int s = range.lo; s <= range.hi; ++s) {
    const double r = s + nu_n;
    const double margin = s * d - nu_n * n - (d / n) * s * r - lambda * std::sqrt(s * r);
    worst = std::min(worst, margin);
  }
  v.diagnostics["worst_margin"] = range.lo <= range.hi ? worst : 0.0;
  // A relative guard keeps rounding from turning a tie into a certificate.
  if (range.lo > range.hi || worst > 1e-9 * std::max(1.0, d * n)) {
    v.kind = VerdictKind::Certified;
    v.method = CertMethod::Spectral;
  } else {
    v.kind = VerdictKind::NotApplicable;
    v.reason = "spectral bound too weak for some set size";
  }
  return v;
}

}  // namespace robustham
