#include "braess/core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

#include "braess/errors.hpp"

namespace braess {

namespace {

double sum_over(const std::array<double, 5>& values, std::initializer_list<int> links) {
  double total = 0.0;
  for (int link : links) {
    if (link < 1 || link > 5) throw std::out_of_range(fmt::format("link index {} not in 1..5", link));
    total += values[static_cast<std::size_t>(link - 1)];
  }
  return total;
}

}  // namespace

double FourNodeConfig::alpha_sum(std::initializer_list<int> links) const { return sum_over(alpha, links); }
double FourNodeConfig::beta_sum(std::initializer_list<int> links) const { return sum_over(beta, links); }

void validate(const FourNodeConfig& cfg, Mode mode, bool with_bc) {
  for (int i = 1; i <= 5; ++i) {
    if (i == 3 && !with_bc) continue;
    const double a = cfg.a(i);
    const double b = cfg.b(i);
    if (!std::isfinite(a) || a < 0.0)
      throw InvalidConfig(fmt::format("alpha_{} must be finite and >= 0 (got {})", i, a));
    if (!std::isfinite(b) || b < 0.0)
      throw InvalidConfig(fmt::format("beta_{} must be finite and >= 0 (got {})", i, b));
    if (mode == Mode::Strict && b == 0.0)
      throw InvalidConfig(fmt::format("beta_{} must be > 0 in strict mode", i));
  }
  if (cfg.beta_sum({1, 2, 4, 5}) <= 0.0)
    throw InvalidConfig("beta_1 + beta_2 + beta_4 + beta_5 must be > 0");
}

DerivedQuantities derive_quantities(const FourNodeConfig& cfg, Mode mode) {
  validate(cfg, mode, true);

  const auto A = [&](std::initializer_list<int> l) { return cfg.alpha_sum(l); };
  const auto B = [&](std::initializer_list<int> l) { return cfg.beta_sum(l); };

  DerivedQuantities d;
  d.al_bar = A({4}) - A({1, 3});
  d.al_hat = A({2}) - A({3, 5});
  // Equal to alpha_45 - alpha_12; formed this way the identity is exact.
  d.al = d.al_bar - d.al_hat;
  d.beta_total = B({1, 2, 4, 5});
  const double beta = d.beta_total;

  // Braess numbers are differences of nearly equal products; the extra
  // precision keeps them accurate to the last double digit.
  const auto L = [&](std::initializer_list<int> l) {
    long double s = 0.0L;
    for (int i : l) s += static_cast<long double>(cfg.b(i));
    return s;
  };
  const long double lbeta = L({1, 2, 4, 5});
  d.b1 = static_cast<double>(L({1}) * L({5}) - L({2}) * L({4}));
  d.b2 = static_cast<double>(L({1, 3, 5}) * lbeta - L({1, 2}) * L({4, 5}));
  d.b3 = static_cast<double>(L({4, 5}) * L({4, 5}) * L({1, 3, 4}) - L({4}) * L({4}) * lbeta);
  d.b4 = static_cast<double>(L({1, 2}) * L({1, 2}) * L({2, 3, 5}) - L({2}) * L({2}) * lbeta);

  d.mu1 = ExtendedReal::ratio(d.al_hat * B({1, 4}) - d.al * cfg.b(3),
                              cfg.b(3) * B({4, 5}) + cfg.b(5) * B({1, 4}), "mu1");
  d.mu2 = ExtendedReal::ratio(d.al_bar * B({2, 5}) + d.al * cfg.b(3),
                              cfg.b(1) * B({2, 5}) + cfg.b(3) * B({1, 2}), "mu2");

  d.bridge_numerator = d.al_hat * B({1, 4}) + d.al_bar * B({2, 5});
  d.bridge_denominator = cfg.b(3) * beta + B({1, 4}) * B({2, 5});
  return d;
}

}  // namespace braess
