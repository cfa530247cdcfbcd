// Probability that n words land in their correct positions by coincidence:
// (1/n)(1/(n-1))...(1/2) = 1/n!.

#ifndef SYNAPPER_CHANCE_HPP
#define SYNAPPER_CHANCE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>

#include "synapper/types.hpp"

namespace synapper {

struct Rational {
  std::uint64_t numerator = 1;
  std::uint64_t denominator = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
};

struct ChanceProbability {
  int n = 2;
  double p = 0.5;
  /// log10(p); finite for every accepted n.
  double log10_p = 0.0;
  /// Exact 1/n! while n! fits in 64 bits (n <= 20).
  std::optional<Rational> exact;
};

inline constexpr int kMaxExactN = 20;
/// 1/171! underflows a double.
inline constexpr int kMaxChanceN = 170;

inline ChanceProbability chance_probability(int n) {
  if (n < 2) throw OperationError("NTooSmall", "n", "n must be at least 2, got " + std::to_string(n));
  if (n > kMaxChanceN)
    throw OperationError("NTooLarge", "n",
                         "n must be at most " + std::to_string(kMaxChanceN) + ", got " + std::to_string(n));
  ChanceProbability out;
  out.n = n;
  // n! for n <= 20 is exact as a double, so 1/n! is correctly rounded there
  std::uint64_t factorial = 1;
  for (int k = 2; k <= std::min(n, kMaxExactN); ++k) factorial *= static_cast<std::uint64_t>(k);
  double p = 1.0 / static_cast<double>(factorial);
  for (int k = kMaxExactN + 1; k <= n; ++k) p /= static_cast<double>(k);
  out.p = p;
  out.log10_p = -std::lgamma(static_cast<double>(n) + 1.0) / std::log(10.0);
  if (n <= kMaxExactN) out.exact = Rational{1, factorial};
  return out;
}

/// "2.755732e-7 (1/3628800)": six-digit mantissa, unpadded exponent, exact
/// fraction when available.
inline std::string format_chance(const ChanceProbability& c) {
  int exponent = static_cast<int>(std::floor(std::log10(c.p)));
  double mantissa = c.p / std::pow(10.0, exponent);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", mantissa);
  if (std::string(buf) == "10.000000") {
    mantissa /= 10.0;
    ++exponent;
    std::snprintf(buf, sizeof buf, "%.6f", mantissa);
  }
  std::string out = std::string(buf) + "e" + std::to_string(exponent);
  if (c.exact)
    out += " (" + std::to_string(c.exact->numerator) + "/" + std::to_string(c.exact->denominator) + ")";
  return out;
}

}  // namespace synapper

#endif  // SYNAPPER_CHANCE_HPP
