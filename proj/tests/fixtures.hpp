#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>

#include "braess/core.hpp"

namespace braess::testing {

inline FourNodeConfig worked_example() { return {{2, 36, 6, 40, 2}, {30, 32, 3, 8, 19}}; }
inline FourNodeConfig zero_delay() { return {{0, 15, 7.5, 15, 0}, {0.01, 0, 0, 0, 0.01}}; }
inline FourNodeConfig asymmetric() { return {{1, 2, 5, 1, 2}, {3, 4, 9, 3, 4}}; }
inline FourNodeConfig all_ones() { return {{1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}}; }

// Exact rational over 128-bit integers, for recomputing small closed forms.
struct Frac {
  __int128 num = 0;
  __int128 den = 1;

  Frac(__int128 n = 0, __int128 d = 1) : num(n), den(d) {
    if (den < 0) num = -num, den = -den;
    const auto g = gcd(num < 0 ? -num : num, den);
    if (g > 1) num /= g, den /= g;
  }
  static __int128 gcd(__int128 a, __int128 b) {
    while (b != 0) a = std::exchange(b, a % b);
    return a;
  }
  friend Frac operator+(Frac a, Frac b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Frac operator-(Frac a, Frac b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Frac operator*(Frac a, Frac b) { return {a.num * b.num, a.den * b.den}; }
  friend Frac operator/(Frac a, Frac b) { return {a.num * b.den, a.den * b.num}; }
  friend bool operator==(Frac a, Frac b) { return a.num == b.num && a.den == b.den; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

class ConfigGen {
 public:
  explicit ConfigGen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  /// All alpha in [0, 50], all beta in [0.1, 20].
  FourNodeConfig strict() {
    FourNodeConfig c;
    for (auto& a : c.alpha) a = uniform(0.0, 50.0);
    for (auto& b : c.beta) b = uniform(0.1, 20.0);
    return c;
  }

  /// Small integer parameters, so ties and exact thresholds occur.
  FourNodeConfig integral() {
    FourNodeConfig c;
    for (auto& a : c.alpha) a = integer(0, 20);
    for (auto& b : c.beta) b = integer(1, 10);
    return c;
  }

  FourNodeConfig m_pattern() {
    const double a2 = uniform(0.0, 50.0);
    const double b1 = uniform(0.1, 20.0);
    const double b2 = uniform(0.1, 20.0);
    return {{0, a2, uniform(0.0, 50.0), a2, 0}, {b1, b2, b2, b2, b1}};
  }

  FourNodeConfig s_pattern() {
    const double a1 = uniform(0.0, 20.0);
    const double a2 = uniform(0.0, 50.0);
    const double b1 = uniform(0.1, 20.0);
    const double b2 = uniform(0.1, 20.0);
    return {{a1, a2, uniform(0.0, 20.0), a2, a1}, {b1, b2, uniform(0.1, 20.0), b2, b1}};
  }

  FourNodeConfig a_pattern() {
    const double a1 = uniform(0.0, 50.0);
    const double a2 = uniform(0.0, 50.0);
    const double b1 = uniform(0.1, 20.0);
    const double b2 = uniform(0.1, 20.0);
    return {{a1, a2, uniform(0.0, 50.0), a1, a2}, {b1, b2, uniform(0.1, 20.0), b1, b2}};
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline bool near_rel(double a, double b, double tol) { return std::abs(a - b) <= tol * (1.0 + std::abs(b)); }

}  // namespace braess::testing
