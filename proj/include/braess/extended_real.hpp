#pragma once

#include <compare>
#include <initializer_list>
#include <limits>
#include <string>
#include <string_view>

namespace braess {

/// A real number extended with +inf and -inf. NaN is never representable.
///
/// Bounds on the total flow are ratios whose denominators vanish when some
/// delay parameters are zero. `ratio` maps x/0 to +inf or -inf by the sign of
/// x and rejects 0/0 with ZeroOverZero.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  ExtendedReal(double value);  // NOLINT(google-explicit-constructor)

  static constexpr ExtendedReal pos_inf() {
    return ExtendedReal(std::numeric_limits<double>::infinity(), Unchecked{});
  }
  static constexpr ExtendedReal neg_inf() {
    return ExtendedReal(-std::numeric_limits<double>::infinity(), Unchecked{});
  }

  /// num / den. `what` names the quantity in the ZeroOverZero message.
  static ExtendedReal ratio(double num, double den, std::string_view what = {});

  constexpr double value() const { return value_; }
  bool is_finite() const;
  bool is_pos_inf() const { return value_ == std::numeric_limits<double>::infinity(); }
  bool is_neg_inf() const { return value_ == -std::numeric_limits<double>::infinity(); }

  constexpr ExtendedReal operator-() const { return ExtendedReal(-value_, Unchecked{}); }

  friend constexpr bool operator==(ExtendedReal a, ExtendedReal b) { return a.value_ == b.value_; }
  friend constexpr std::partial_ordering operator<=>(ExtendedReal a, ExtendedReal b) {
    return a.value_ <=> b.value_;
  }

 private:
  struct Unchecked {};
  constexpr ExtendedReal(double value, Unchecked) : value_(value) {}

  double value_ = 0.0;
};

ExtendedReal max_of(std::initializer_list<ExtendedReal> values);
ExtendedReal min_of(std::initializer_list<ExtendedReal> values);

/// Fixed-point rendering with `decimals` digits; infinities print as "inf"/"-inf".
std::string format_fixed(ExtendedReal x, int decimals);

}  // namespace braess
