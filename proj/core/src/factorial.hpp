#pragma once

#include <cmath>
#include <cstddef>

namespace nhho::detail {

// sqrt(hi! / lo!) by direct product; intended for short spans (hi - lo small).
inline double sqrt_factorial_ratio(std::size_t hi, std::size_t lo) {
  double result = 1.0;
  for (std::size_t k = lo + 1; k <= hi; ++k) result *= std::sqrt(static_cast<double>(k));
  return result;
}

// hi! / lo! as a product of integers; exact while it stays below 2^53.
inline double falling_product(std::size_t hi, std::size_t lo) {
  double result = 1.0;
  for (std::size_t k = lo + 1; k <= hi; ++k) result *= static_cast<double>(k);
  return result;
}

// sqrt((n!/mid!) (m!/mid!)) with one rounding in the common case, so
// diagonal terms like <n|a+a|n> come out as exact integers.
inline double ladder_amplitude(std::size_t n, std::size_t m, std::size_t mid) {
  const double a = falling_product(n, mid);
  const double b = falling_product(m, mid);
  const double prod = a * b;
  if (std::isfinite(prod)) return std::sqrt(prod);
  return sqrt_factorial_ratio(n, mid) * sqrt_factorial_ratio(m, mid);
}

// log(hi! / lo!) by summing logarithms, so long spans never overflow.
inline double log_factorial_ratio(std::size_t hi, std::size_t lo) {
  double result = 0.0;
  for (std::size_t k = lo + 1; k <= hi; ++k) result += std::log(static_cast<double>(k));
  return result;
}

}  // namespace nhho::detail
