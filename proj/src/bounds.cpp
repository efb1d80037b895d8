#include "robustham/bounds.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>
#include <string>

namespace robustham {

namespace mp = boost::multiprecision;

std::int64_t isqrt(std::int64_t x) {
  if (x < 0) throw std::domain_error("isqrt of negative number");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

double DirBound::r_star() const {
  return (delta + std::sqrt(static_cast<double>(radicand))) / 2.0;
}

DirBound f_dir(int n, int delta) {
  if (n <= 0 || 2 * static_cast<std::int64_t>(delta) < n || delta >= n) {
    throw std::invalid_argument("f_dir needs n/2 <= delta < n (got n=" + std::to_string(n) +
                                ", delta=" + std::to_string(delta) + ")");
  }
  DirBound b;
  b.n = n;
  b.delta = delta;
  b.indicator = (n - delta) % 2 == 0 ? 0 : 1;
  b.radicand = static_cast<std::int64_t>(n) * (2 * static_cast<std::int64_t>(delta) - n) + b.indicator;
  // floor((delta + sqrt(D)) / 2) == floor((delta + isqrt(D)) / 2)
  b.f = (delta + isqrt(b.radicand)) / 2;
  return b;
}

double UndirBound::g() const {
  return (delta + std::sqrt(static_cast<double>(radicand))) / 2.0;
}

UndirBound g_undir(int n, int delta, bool relaxed) {
  const std::int64_t twice = 2 * static_cast<std::int64_t>(delta);
  const bool lower_ok = relaxed ? twice >= n : twice > n;
  if (n <= 0 || !lower_ok || delta >= n) {
    throw std::invalid_argument(std::string("g_undir needs n/2 ") + (relaxed ? "<=" : "<") +
                                " delta < n (got n=" + std::to_string(n) + ", delta=" + std::to_string(delta) +
                                ")");
  }
  UndirBound b;
  b.n = n;
  b.delta = delta;
  b.radicand = static_cast<std::int64_t>(n) * (twice - n);
  const std::int64_t floor_g = (delta + isqrt(b.radicand)) / 2;
  b.g_even = floor_g - floor_g % 2;
  b.g_prime_even = (floor_g + 1) - (floor_g + 1) % 2;
  return b;
}

double chernoff(double mean, double a) {
  if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("chernoff needs 0 < a < 1");
  if (mean < 0.0) throw std::invalid_argument("chernoff needs a nonnegative mean");
  return std::exp(-a * a * mean / 3.0);
}

// ---------------------------------------------------------- BinomialTail

namespace {

std::vector<double> binomial_pmf(int trials, double p) {
  std::vector<double> pmf(static_cast<std::size_t>(std::max(trials, 0)) + 1, 0.0);
  if (trials < 0) return pmf;
  if (p <= 0.0) {
    pmf[0] = 1.0;
    return pmf;
  }
  if (p >= 1.0) {
    pmf[trials] = 1.0;
    return pmf;
  }
  const long double lp = std::log(static_cast<long double>(p));
  const long double lq = std::log1p(-static_cast<long double>(p));
  const long double lfull = std::lgamma(static_cast<long double>(trials) + 1);
  for (int k = 0; k <= trials; ++k) {
    const long double lc = lfull - std::lgamma(static_cast<long double>(k) + 1) -
                           std::lgamma(static_cast<long double>(trials - k) + 1);
    pmf[k] = static_cast<double>(std::exp(lc + k * lp + (trials - k) * lq));
  }
  return pmf;
}

std::vector<double> cumulative(const std::vector<double>& pmf) {
  std::vector<double> cdf(pmf.size());
  long double acc = 0;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    acc += pmf[i];
    cdf[i] = static_cast<double>(std::min<long double>(acc, 1.0L));
  }
  if (!cdf.empty()) cdf.back() = 1.0;
  return cdf;
}

double lookup(const std::vector<double>& table, long long k) {
  if (k < 0 || k >= static_cast<long long>(table.size())) return 0.0;
  return table[static_cast<std::size_t>(k)];
}

double lookup_cdf(const std::vector<double>& cdf, long long m) {
  if (m < 0) return 0.0;
  if (m >= static_cast<long long>(cdf.size()) - 1) return 1.0;
  return cdf[static_cast<std::size_t>(m)];
}

}  // namespace

BinomialTail::BinomialTail(int n, double p) : n_(n), p_(p) {
  if (n < 2) throw std::invalid_argument("BinomialTail needs n >= 2");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("BinomialTail needs 0 <= p <= 1");
  pmf_ = binomial_pmf(n - 1, p);
  pmf_prime_ = binomial_pmf(n - 2, p);
  cdf_ = cumulative(pmf_);
  cdf_prime_ = cumulative(pmf_prime_);
}

double BinomialTail::b(long long r) const { return lookup(pmf_, r); }
double BinomialTail::B(long long m) const { return lookup_cdf(cdf_, m); }
double BinomialTail::b_prime(long long r) const { return lookup(pmf_prime_, r); }
double BinomialTail::B_prime(long long m) const { return lookup_cdf(cdf_prime_, m); }

// -------------------------------------------------------- binresults

namespace {

constexpr int kBinResultsMaxN = 4000;

using Real = mp::cpp_bin_float_100;

// C(trials, k) for k = 0..trials, exact.
std::vector<mp::cpp_int> binomial_row(int trials) {
  std::vector<mp::cpp_int> row(static_cast<std::size_t>(trials) + 1);
  row[0] = 1;
  for (int k = 0; k < trials; ++k) row[k + 1] = row[k] * (trials - k) / (k + 1);
  return row;
}

Real exact_ratio(const mp::cpp_int& num, const mp::cpp_int& den) {
  return Real(num) / Real(den);
}

}  // namespace

BinResults check_binresults(int n, int r, double h) {
  if (n < 3 || n > kBinResultsMaxN) {
    throw std::invalid_argument("check_binresults evaluates exactly for 3 <= n <= " + std::to_string(kBinResultsMaxN));
  }
  const double ln_n = std::log(static_cast<double>(n));
  if (r < 0 || r > n - 1 || r < n / 2.0 - std::sqrt(2.0 * n * ln_n)) {
    throw std::invalid_argument("check_binresults needs n/2 - sqrt(2 n ln n) <= r <= n-1");
  }
  if (!(h > 0.0) || h > std::pow(static_cast<double>(n), 0.6)) {
    throw std::invalid_argument("check_binresults needs 0 < h <= n^(3/5)");
  }

  const auto row = binomial_row(n - 1);
  const auto row_prime = binomial_row(n - 2);
  const mp::cpp_int two_pow = mp::cpp_int(1) << (n - 1);

  BinResults out;
  const Real rn(n);
  const Real rh(h);
  const Real log_n = mp::log(rn);

  // (i) b'(r)/b(r) = 2 C(n-2, r) / C(n-1, r)
  {
    const mp::cpp_int num = r <= n - 2 ? 2 * row_prime[r] : mp::cpp_int(0);
    const Real ratio = exact_ratio(num, row[r]);
    const Real bound = 1 + 1 / log_n;
    out.ratio_ok = ratio <= bound;
    out.ratio = static_cast<double>(ratio);
    out.ratio_bound = static_cast<double>(bound);
  }

  const long long m = static_cast<long long>(std::floor(n / 2.0 - h));

  // (ii) b(n/2 - h) >= e^{-2h^2/n - 4h^3/n^2} / (2 sqrt n)
  {
    const Real point = (m >= 0 && m <= n - 1) ? exact_ratio(row[m], two_pow) : Real(0);
    const Real bound = mp::exp(-2 * rh * rh / rn - 4 * rh * rh * rh / (rn * rn)) / (2 * mp::sqrt(rn));
    out.point_lower_ok = point >= bound;
    out.point = static_cast<double>(point);
    out.point_bound = static_cast<double>(bound);
  }

  // (iii) B(n/2 - h) <= (sqrt n / h) e^{-2h^2/n}
  {
    mp::cpp_int sum = 0;
    for (long long k = 0; k <= std::min<long long>(m, n - 1); ++k) sum += row[k];
    const Real tail = exact_ratio(sum, two_pow);
    const Real bound = mp::sqrt(rn) / rh * mp::exp(-2 * rh * rh / rn);
    out.tail_upper_ok = tail <= bound;
    out.tail = static_cast<double>(tail);
    out.tail_bound = static_cast<double>(bound);
  }
  return out;
}

}  // namespace robustham
