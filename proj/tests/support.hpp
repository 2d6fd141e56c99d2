#pragma once

// Hand-rolled generators for the property tests. Everything is seeded.

#include <cstdint>
#include <random>

#include "taxicab/cassini.hpp"

namespace testing {

using taxicab::CassiniSpec;
using taxicab::Point;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Point point(double lo = -20.0, double hi = 20.0) { return {real(lo, hi), real(lo, hi)}; }

  // Multiples of 1/16: sums, differences and products by small powers of
  // two stay exact.
  double dyadic(int lo, int hi) { return integer(lo * 16, hi * 16) / 16.0; }
  Point dyadic_point(int lo = -20, int hi = 20) { return {dyadic(lo, hi), dyadic(lo, hi)}; }

  CassiniSpec spec() {
    double r = 0.0;
    while (r == 0.0) r = real(0.0, 40.0);
    return {point(), point(), r};
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline double relative_residual(const CassiniSpec& spec, Point x) {
  const double level = spec.r * spec.r;
  return std::abs(taxicab::product_value(spec, x) - level) / std::max(1.0, level);
}

}  // namespace testing
