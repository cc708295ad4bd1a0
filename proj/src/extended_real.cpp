#include "braess/extended_real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "braess/errors.hpp"

namespace braess {

ExtendedReal::ExtendedReal(double value) : value_(value) {
  if (std::isnan(value)) throw std::invalid_argument("ExtendedReal cannot hold NaN");
}

ExtendedReal ExtendedReal::ratio(double num, double den, std::string_view what) {
  if (den != 0.0) return ExtendedReal(num / den);
  if (num > 0.0) return pos_inf();
  if (num < 0.0) return neg_inf();
  throw ZeroOverZero(what.empty() ? std::string("0/0 in bound computation")
                                  : fmt::format("0/0 while computing {}", what));
}

bool ExtendedReal::is_finite() const { return std::isfinite(value_); }

ExtendedReal max_of(std::initializer_list<ExtendedReal> values) {
  ExtendedReal best = ExtendedReal::neg_inf();
  for (auto v : values) best = std::max(best, v);
  return best;
}

ExtendedReal min_of(std::initializer_list<ExtendedReal> values) {
  ExtendedReal best = ExtendedReal::pos_inf();
  for (auto v : values) best = std::min(best, v);
  return best;
}

std::string format_fixed(ExtendedReal x, int decimals) {
  if (x.is_pos_inf()) return "inf";
  if (x.is_neg_inf()) return "-inf";
  return fmt::format("{:.{}f}", x.value(), decimals);
}

}  // namespace braess
