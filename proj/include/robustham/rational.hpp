#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <string_view>

namespace robustham {

using Rational = boost::rational<std::int64_t>;

// Parses "0.05", "1/20", "3", "1e-3" exactly.
Rational parse_rational(std::string_view text);

// Exact value of the shortest decimal that round-trips to x, so 0.1 maps
// to 1/10 rather than to the binary expansion of the double.
Rational rational_from_double(double x);

double to_double(const Rational& r);
std::string to_string(const Rational& r);

// Smallest integer k with k >= r, and largest with k <= r.
std::int64_t ceil(const Rational& r);
std::int64_t floor(const Rational& r);

}  // namespace robustham
