#include "robustham/rational.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace robustham {

namespace {

constexpr std::int64_t kMaxMantissa = 100000000000000000LL;  // 1e17

std::int64_t pow10(int e) {
  std::int64_t p = 1;
  for (int i = 0; i < e; ++i) {
    if (p > kMaxMantissa) throw std::invalid_argument("rational exponent too large");
    p *= 10;
  }
  return p;
}

Rational parse_decimal(std::string_view s, std::string_view original) {
  auto fail = [&]() { return std::invalid_argument("malformed number '" + std::string(original) + "'"); };
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
  std::int64_t mantissa = 0;
  int scale = 0;
  bool any_digit = false;
  bool seen_point = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '.') {
      if (seen_point) throw fail();
      seen_point = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) break;
    any_digit = true;
    if (mantissa > kMaxMantissa) throw std::invalid_argument("too many digits in '" + std::string(original) + "'");
    mantissa = mantissa * 10 + (c - '0');
    if (seen_point) ++scale;
  }
  if (!any_digit) throw fail();
  int exponent = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), exponent);
    if (ec != std::errc() || ptr == s.data() + i) throw fail();
    i = static_cast<std::size_t>(ptr - s.data());
  }
  if (i != s.size()) throw fail();
  const int net = exponent - scale;
  Rational r = net >= 0 ? Rational(mantissa * pow10(net)) : Rational(mantissa, pow10(-net));
  return negative ? -r : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const Rational num = parse_decimal(text.substr(0, slash), text);
    const Rational den = parse_decimal(text.substr(slash + 1), text);
    if (den.numerator() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  return parse_decimal(text, text);
}

Rational rational_from_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw std::invalid_argument("cannot format double");
  return parse_rational(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t floor(const Rational& r) {
  const std::int64_t q = r.numerator() / r.denominator();
  return (r.numerator() % r.denominator() != 0 && r.numerator() < 0) ? q - 1 : q;
}

std::int64_t ceil(const Rational& r) {
  const std::int64_t q = r.numerator() / r.denominator();
  return (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ? q + 1 : q;
}

}  // namespace robustham
