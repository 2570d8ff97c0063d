#include "troprate/numeric.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "troprate/errors.hpp"

namespace troprate {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_decimal(std::string_view text, std::string_view whole) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw DomainError("malformed number '" + std::string(whole) + "'");
  }
  if (value < 0.0) {
    throw DomainError("negative number '" + std::string(whole) + "' is outside the semifield");
  }
  return value;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const std::string_view t = trim(text);
  if (t == "inf" || t == "Infinity" || t == "top") return Scalar::top();
  if (const auto slash = t.find('/'); slash != std::string_view::npos) {
    const double num = parse_decimal(t.substr(0, slash), text);
    const double den = parse_decimal(t.substr(slash + 1), text);
    if (den == 0.0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    if (num == 0.0) return Scalar::zero();
    return Scalar::from_log(std::log(num) - std::log(den));
  }
  return Scalar::from_value(parse_decimal(t, text));
}

std::string format_decimal(Scalar s) {
  if (s.is_zero()) return "0";
  if (s.is_top()) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", s.value());
  return buf;
}

std::optional<std::string> exact_fraction(Scalar s, long long max_den) {
  if (s.is_zero()) return "0";
  if (s.is_top()) return std::nullopt;
  const double v = s.value();
  // Continued-fraction convergents of v.
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double rest = v;
  for (int iter = 0; iter < 64; ++iter) {
    const double a_real = std::floor(rest);
    if (a_real > 1e15) break;
    const auto a = static_cast<long long>(a_real);
    const long long p2 = a * p1 + p0;
    const long long q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1, q0 = q1, p1 = p2, q1 = q2;
    const double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::abs(approx - v) <= 1e-12 * std::max(1.0, std::abs(v))) {
      if (p1 == 0) return std::nullopt;
      return q1 == 1 ? std::to_string(p1) : std::to_string(p1) + "/" + std::to_string(q1);
    }
    const double frac = rest - a_real;
    if (frac <= 0.0) break;
    rest = 1.0 / frac;
  }
  return std::nullopt;
}

}  // namespace troprate
