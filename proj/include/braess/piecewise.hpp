#pragma once

#include <vector>

#include "braess/core.hpp"
#include "braess/equilibrium.hpp"

namespace braess {

/// One affine piece of the equilibrium travel time, valid on (lo, hi].
/// hi is +inf for the last piece when no case threshold lies beyond it.
struct Segment {
  double lo = 0.0;
  double hi = 0.0;
  CaseLabel label = CaseLabel::NA;
  Line line;
};

/// Equilibrium travel time as a function of the total flow.
class PiecewiseLinearFn {
 public:
  PiecewiseLinearFn() = default;
  explicit PiecewiseLinearFn(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segments_; }
  /// Interior breakpoints, ascending.
  std::vector<double> breakpoints() const;

  /// Segment containing q (segments are closed on the right). Throws
  /// std::out_of_range outside (0, hi of the last segment].
  const Segment& segment_at(double q) const;
  double operator()(double q) const { return segment_at(q).line.at(q); }

  /// Adjacent lines agree at every breakpoint within rel_tol * (1 + |T|).
  bool is_continuous(double rel_tol = 1e-9) const;
  /// All slopes are >= -tol.
  bool is_nondecreasing(double tol = 1e-9) const;

 private:
  std::vector<Segment> segments_;
};

/// Every finite positive flow at which a guard of the equilibrium cases can
/// switch, ascending and deduplicated.
std::vector<double> case_thresholds(const FourNodeConfig& cfg, bool with_bc, Mode mode = Mode::Strict);

/// Assembles T_eq(Q) (with_bc = false) or T+_eq(Q) (with_bc = true) on
/// (0, q_max] from the case thresholds. Each gap between thresholds is
/// labelled by solving at its midpoint; neighbouring pieces with the same
/// case are merged. Throws std::logic_error if the result is discontinuous.
PiecewiseLinearFn piecewise_equilibrium(const FourNodeConfig& cfg, bool with_bc, double q_max,
                                        Mode mode = Mode::Strict);

}  // namespace braess
