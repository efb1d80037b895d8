#pragma once

#include <cstdint>
#include <vector>

namespace robustham {

// Largest k with k*k <= x.
std::int64_t isqrt(std::int64_t x);

// The directed regular-factor threshold for digraphs on n vertices with
// minimum semidegree delta:
//   r* = (delta + sqrt(n(2 delta - n) + indicator)) / 2,  f = floor(r*),
// where indicator = 0 iff n and delta have the same parity.
struct DirBound {
  int n = 0;
  int delta = 0;
  int indicator = 0;
  std::int64_t radicand = 0;  // n(2 delta - n) + indicator
  std::int64_t f = 0;

  double r_star() const;
};

DirBound f_dir(int n, int delta);

// The undirected analogue g = (delta + sqrt(n(2 delta - n))) / 2 together
// with the largest even integers at most g and at most g + 1.
struct UndirBound {
  int n = 0;
  int delta = 0;
  std::int64_t radicand = 0;  // n(2 delta - n)
  std::int64_t g_even = 0;
  std::int64_t g_prime_even = 0;

  double g() const;
};

// Strict mode requires n/2 < delta < n; relaxed mode also admits delta = n/2.
UndirBound g_undir(int n, int delta, bool relaxed = false);

// exp(-a^2 mean / 3): the lower-tail Chernoff bound for a binomial variable.
double chernoff(double mean, double a);

// Binomial point and tail probabilities for X ~ Bin(n-1, p) (b, B) and
// X' ~ Bin(n-2, p) (b', B'). Probabilities are computed in log space.
class BinomialTail {
 public:
  BinomialTail(int n, double p);

  double b(long long r) const;
  double B(long long m) const;
  double b_prime(long long r) const;
  double B_prime(long long m) const;

  int n() const noexcept { return n_; }
  double p() const noexcept { return p_; }

 private:
  int n_;
  double p_;
  std::vector<double> pmf_;        // Bin(n-1, p)
  std::vector<double> pmf_prime_;  // Bin(n-2, p)
  std::vector<double> cdf_;
  std::vector<double> cdf_prime_;
};

// Numerical check of three binomial estimates at p = 1/2, evaluated from
// exact binomial coefficients. Logarithms are natural. Arguments n/2 - h
// that are not integers are evaluated at their floor.
struct BinResults {
  bool ratio_ok = false;        // b'(r)/b(r) <= 1 + 1/ln n
  bool point_lower_ok = false;  // b(n/2-h) >= e^{-2h^2/n - 4h^3/n^2} / (2 sqrt n)
  bool tail_upper_ok = false;   // B(n/2-h) <= (sqrt n / h) e^{-2h^2/n}
  double ratio = 0;
  double ratio_bound = 0;
  double point = 0;
  double point_bound = 0;
  double tail = 0;
  double tail_bound = 0;
};

BinResults check_binresults(int n, int r, double h);

}  // namespace robustham
