#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>

#include "braess/extended_real.hpp"

namespace braess {

/// Strict mode requires every delay parameter to be positive. Relaxed mode
/// admits zero delay parameters and resolves the resulting x/0 bounds to
/// +/-inf.
enum class Mode { Strict, Relaxed };

/// The canonical four-node configuration a -> {b, c} -> d.
///
/// Links are numbered 1..5: 1=(a,b), 2=(b,d), 3=(b,c), 4=(a,c), 5=(c,d).
/// Link i has travel time alpha[i-1] + beta[i-1] * flow.
struct FourNodeConfig {
  std::array<double, 5> alpha{};
  std::array<double, 5> beta{};

  /// Sum of alpha over 1-based link indices. Repeated indices count again,
  /// so alpha_sum({1, 3, 5}) is alpha_1 + alpha_3 + alpha_5.
  double alpha_sum(std::initializer_list<int> links) const;
  /// Same for beta; beta_sum({4, 5, 5}) is beta_4 + 2 beta_5.
  double beta_sum(std::initializer_list<int> links) const;

  double a(int link) const { return alpha.at(static_cast<std::size_t>(link - 1)); }
  double b(int link) const { return beta.at(static_cast<std::size_t>(link - 1)); }

  friend bool operator==(const FourNodeConfig&, const FourNodeConfig&) = default;
};

/// Throws InvalidConfig unless all parameters are finite and nonnegative,
/// delay parameters are positive in strict mode and beta_1+beta_2+beta_4+beta_5
/// is positive. Link 3 is ignored when `with_bc` is false.
void validate(const FourNodeConfig& cfg, Mode mode, bool with_bc = true);

/// Scalar quantities every equilibrium case and paradox bound is built from.
struct DerivedQuantities {
  double al = 0.0;          // alpha_45 - alpha_12
  double al_bar = 0.0;      // alpha_4 - alpha_13
  double al_hat = 0.0;      // alpha_2 - alpha_35
  double beta_total = 0.0;  // beta_1245
  // Braess numbers.
  double b1 = 0.0;
  double b2 = 0.0;
  double b3 = 0.0;
  double b4 = 0.0;
  // Upper limits of the single-vanishing-path cases in N+.
  ExtendedReal mu1;
  ExtendedReal mu2;
  // al_hat * beta_14 + al_bar * beta_25; equals al_bar * beta - al * beta_14.
  // Bridge flow in the all-paths-used case is (bridge_numerator - Q b1) /
  // bridge_denominator.
  double bridge_numerator = 0.0;
  // beta_3 * beta + beta_14 * beta_25.
  double bridge_denominator = 0.0;
};

/// Validates `cfg` (with the bridge link) and computes all derived quantities.
/// Throws ZeroOverZero if a mu has a vanishing numerator and denominator.
DerivedQuantities derive_quantities(const FourNodeConfig& cfg, Mode mode = Mode::Strict);

}  // namespace braess
