#include "braess/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include "braess/errors.hpp"

namespace braess {

PiecewiseLinearFn::PiecewiseLinearFn(std::vector<Segment> segments) : segments_(std::move(segments)) {}

std::vector<double> PiecewiseLinearFn::breakpoints() const {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < segments_.size(); ++i) out.push_back(segments_[i].hi);
  return out;
}

const Segment& PiecewiseLinearFn::segment_at(double q) const {
  for (const auto& s : segments_)
    if (q > s.lo && q <= s.hi) return s;
  throw std::out_of_range(fmt::format("Q={} outside the domain of the piecewise function", q));
}

bool PiecewiseLinearFn::is_continuous(double rel_tol) const {
  for (std::size_t i = 0; i + 1 < segments_.size(); ++i) {
    const double x = segments_[i].hi;
    const double left = segments_[i].line.at(x);
    const double right = segments_[i + 1].line.at(x);
    if (std::abs(left - right) > rel_tol * (1.0 + std::abs(left))) return false;
  }
  return true;
}

bool PiecewiseLinearFn::is_nondecreasing(double tol) const {
  return std::all_of(segments_.begin(), segments_.end(), [&](const Segment& s) { return s.line.slope >= -tol; });
}

std::vector<double> case_thresholds(const FourNodeConfig& cfg, bool with_bc, Mode mode) {
  validate(cfg, mode, with_bc);
  const auto B = [&](std::initializer_list<int> l) { return cfg.beta_sum(l); };
  const double al = cfg.alpha_sum({4, 5}) - cfg.alpha_sum({1, 2});

  std::vector<ExtendedReal> raw = {ExtendedReal::ratio(al, B({1, 2}), "al/beta_12"),
                                   ExtendedReal::ratio(-al, B({4, 5}), "-al/beta_45")};
  if (with_bc) {
    const DerivedQuantities d = derive_quantities(cfg, mode);
    raw.push_back(ExtendedReal::ratio(d.al_hat, B({3, 5}), "al_hat/beta_35"));
    raw.push_back(ExtendedReal::ratio(d.al_bar, B({1, 3}), "al_bar/beta_13"));
    raw.push_back(ExtendedReal::ratio(-d.al_bar, cfg.b(4), "-al_bar/beta_4"));
    raw.push_back(ExtendedReal::ratio(-d.al_hat, cfg.b(2), "-al_hat/beta_2"));
    raw.push_back(d.mu1);
    raw.push_back(d.mu2);
    // The switch between "only P3 unused" and "all paths used" moves with
    // the sign of B1, so it is a candidate whenever B1 is nonzero.
    if (d.b1 != 0.0) raw.push_back(ExtendedReal(d.bridge_numerator / d.b1));
  }
  std::vector<double> out;
  for (auto x : raw)
    if (x.is_finite() && x.value() > 0.0) out.push_back(x.value());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PiecewiseLinearFn piecewise_equilibrium(const FourNodeConfig& cfg, bool with_bc, double q_max, Mode mode) {
  if (!std::isfinite(q_max) || q_max <= 0.0) throw InvalidQ(fmt::format("q_max must be finite and > 0 (got {})", q_max));
  const std::vector<double> all = case_thresholds(cfg, with_bc, mode);

  std::vector<double> cuts = {0.0};
  for (double t : all)
    if (t < q_max) cuts.push_back(t);
  const bool bounded = std::any_of(all.begin(), all.end(), [&](double t) { return t >= q_max; });
  cuts.push_back(bounded ? q_max : std::numeric_limits<double>::infinity());

  std::vector<Segment> segments;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    const double probe = std::isfinite(hi) ? 0.5 * (lo + hi) : lo + std::max(1.0, lo);
    const CaseLabel label = equilibrium(cfg, with_bc, probe, mode).label;
    if (!segments.empty() && segments.back().label == label) {
      segments.back().hi = hi;
      continue;
    }
    segments.push_back({lo, hi, label, case_line(cfg, label, mode)});
  }

  PiecewiseLinearFn fn(std::move(segments));
  if (!fn.is_continuous(1e-9)) throw std::logic_error("equilibrium travel time is discontinuous across a breakpoint");
  return fn;
}

}  // namespace braess
