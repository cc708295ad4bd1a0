#include "braess/paradox.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "braess/errors.hpp"

namespace braess {

namespace {

constexpr double kRoundingWidth = 1e-12;
// Relative gap below which two different case lines count as equal.
constexpr double kEqualTolerance = 1e-12;

bool near(double a, double b, double rel_tol) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= rel_tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

// Theorem intervals whose width is pure rounding noise (the bounds agree in
// exact arithmetic) are reported empty.
Interval drop_rounding_sliver(Interval in) {
  if (in.empty() || !in.lo().is_finite() || !in.hi().is_finite()) return in;
  if (near(in.lo().value(), in.hi().value(), kRoundingWidth) && in.lo_open()) return Interval();
  return in;
}

// Bounds shared by the theorem intervals and the pseudo-paradox conditions.
struct Bounds {
  ExtendedReal al_12, neg_al_45, hat_35, bar_13, neg_bar_4, neg_hat_2;

  Bounds(const FourNodeConfig& cfg, const DerivedQuantities& d)
      : al_12(ExtendedReal::ratio(d.al, cfg.beta_sum({1, 2}), "al/beta_12")),
        neg_al_45(ExtendedReal::ratio(-d.al, cfg.beta_sum({4, 5}), "-al/beta_45")),
        hat_35(ExtendedReal::ratio(d.al_hat, cfg.beta_sum({3, 5}), "al_hat/beta_35")),
        bar_13(ExtendedReal::ratio(d.al_bar, cfg.beta_sum({1, 3}), "al_bar/beta_13")),
        neg_bar_4(ExtendedReal::ratio(-d.al_bar, cfg.b(4), "-al_bar/beta_4")),
        neg_hat_2(ExtendedReal::ratio(-d.al_hat, cfg.b(2), "-al_hat/beta_2")) {}

  // Lower limit of "both paths used in N".
  ExtendedReal n_interior() const { return max_of({al_12, neg_al_45}); }
};

// Restricts to Q > 0.
Interval positive_part(ExtendedReal lo, ExtendedReal hi, bool lo_open, bool hi_open) {
  if (lo <= ExtendedReal(0.0)) {
    lo = 0.0;
    lo_open = true;
  }
  return Interval::make(lo, hi, lo_open, hi_open);
}

}  // namespace

Interval Interval::make(ExtendedReal lo, ExtendedReal hi, bool lo_open, bool hi_open) {
  if (!lo.is_finite()) lo_open = true;
  if (!hi.is_finite()) hi_open = true;
  Interval out;
  if (lo > hi || (lo == hi && (lo_open || hi_open))) return out;
  out.empty_ = false;
  out.lo_ = lo;
  out.hi_ = hi;
  out.lo_open_ = lo_open;
  out.hi_open_ = hi_open;
  return out;
}

bool Interval::contains(double q) const {
  if (empty_) return false;
  const bool above_lo = lo_open_ ? q > lo_.value() : q >= lo_.value();
  const bool below_hi = hi_open_ ? q < hi_.value() : q <= hi_.value();
  return above_lo && below_hi;
}

namespace {

// "500.00" -> "500"; other values keep every decimal.
std::string display_bound(ExtendedReal x, int decimals) {
  std::string s = format_fixed(x, decimals);
  const auto dot = s.find('.');
  if (dot != std::string::npos && s.find_first_not_of('0', dot + 1) == std::string::npos) s.erase(dot);
  return s;
}

}  // namespace

std::string Interval::to_string(int decimals) const {
  if (empty_) return "empty";
  return fmt::format("{}{}, {}{}", lo_open_ ? '(' : '[', display_bound(lo_, decimals), display_bound(hi_, decimals),
                     hi_open_ ? ')' : ']');
}

std::vector<Interval> normalize_union(std::vector<Interval> pieces, double rel_tol) {
  std::erase_if(pieces, [](const Interval& i) { return i.empty(); });
  std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) {
    if (a.lo() != b.lo()) return a.lo() < b.lo();
    return !a.lo_open() && b.lo_open();
  });
  std::vector<Interval> out;
  for (const auto& piece : pieces) {
    if (out.empty()) {
      out.push_back(piece);
      continue;
    }
    Interval& last = out.back();
    const bool overlaps = piece.lo() < last.hi();
    const bool touches = near(piece.lo().value(), last.hi().value(), rel_tol) && !(last.hi_open() && piece.lo_open());
    if (!overlaps && !touches) {
      out.push_back(piece);
      continue;
    }
    ExtendedReal hi = last.hi();
    bool hi_open = last.hi_open();
    if (piece.hi() > hi || (piece.hi() == hi && !piece.hi_open())) {
      hi = piece.hi();
      hi_open = piece.hi_open();
    }
    last = Interval::make(last.lo(), hi, last.lo_open(), hi_open);
  }
  return out;
}

char to_char(ParadoxCase c) {
  switch (c) {
    case ParadoxCase::A: return 'a';
    case ParadoxCase::B: return 'b';
    case ParadoxCase::C: return 'c';
    case ParadoxCase::D: return 'd';
  }
  return '?';
}

CaseLabel nplus_case(ParadoxCase pc) {
  switch (pc) {
    case ParadoxCase::A: return CaseLabel::PlusG;
    case ParadoxCase::B: return CaseLabel::PlusA;
    case ParadoxCase::C: return CaseLabel::PlusD;
    case ParadoxCase::D: return CaseLabel::PlusE;
  }
  return CaseLabel::PlusG;
}

std::optional<ParadoxCase> paradox_case_of(CaseLabel label) {
  switch (label) {
    case CaseLabel::PlusG: return ParadoxCase::A;
    case CaseLabel::PlusA: return ParadoxCase::B;
    case CaseLabel::PlusD: return ParadoxCase::C;
    case CaseLabel::PlusE: return ParadoxCase::D;
    default: return std::nullopt;
  }
}

Interval theorem1_interval(const FourNodeConfig& cfg, const DerivedQuantities& d) {
  if (!(d.b1 > 0.0)) return {};
  const Bounds b(cfg, d);
  const ExtendedReal lo = max_of({b.al_12, b.neg_al_45, d.mu1, d.mu2});
  const ExtendedReal hi = d.bridge_numerator / d.b1;
  return drop_rounding_sliver(positive_part(lo, hi, true, true));
}

Interval theorem2_interval(const FourNodeConfig& cfg, const DerivedQuantities& d) {
  if (!(d.b2 > 0.0)) return {};
  const Bounds b(cfg, d);
  const double own = (d.al_hat * cfg.beta_sum({4, 5}) + d.al_bar * cfg.beta_sum({1, 2})) / d.b2;
  const ExtendedReal lo = max_of({b.al_12, b.neg_al_45, own});
  const ExtendedReal hi = min_of({b.hat_35, b.bar_13});
  return drop_rounding_sliver(positive_part(lo, hi, true, false));
}

Interval theorem3_interval(const FourNodeConfig& cfg, const DerivedQuantities& d) {
  if (!(d.b3 > 0.0)) return {};
  const Bounds b(cfg, d);
  const double own =
      (d.al_bar * cfg.b(4) * d.beta_total - d.al * cfg.beta_sum({1, 3, 4}) * cfg.beta_sum({4, 5})) / d.b3;
  const ExtendedReal lo = max_of({b.al_12, b.neg_al_45, b.bar_13, b.neg_bar_4, own});
  return drop_rounding_sliver(positive_part(lo, d.mu1, true, false));
}

Interval theorem4_interval(const FourNodeConfig& cfg, const DerivedQuantities& d) {
  if (!(d.b4 > 0.0)) return {};
  const Bounds b(cfg, d);
  const double own =
      (d.al_hat * cfg.b(2) * d.beta_total + d.al * cfg.beta_sum({2, 3, 5}) * cfg.beta_sum({1, 2})) / d.b4;
  const ExtendedReal lo = max_of({b.al_12, b.neg_al_45, b.hat_35, b.neg_hat_2, own});
  return drop_rounding_sliver(positive_part(lo, d.mu2, true, false));
}

bool ParadoxReport::in_region(double q) const {
  return std::any_of(region.begin(), region.end(), [&](const Interval& i) { return i.contains(q); });
}

bool ParadoxReport::in_pseudo_region(double q) const {
  return std::any_of(pseudo_region.begin(), pseudo_region.end(), [&](const Interval& i) { return i.contains(q); });
}

ParadoxReport paradox_region(const FourNodeConfig& cfg, Mode mode) {
  ParadoxReport r;
  r.config = cfg;
  r.mode = mode;
  r.derived = derive_quantities(cfg, mode);
  const auto& d = r.derived;
  r.theorems = {{
      {1, ParadoxCase::A, d.b1, d.b1 > 0.0, theorem1_interval(cfg, d)},
      {2, ParadoxCase::B, d.b2, d.b2 > 0.0, theorem2_interval(cfg, d)},
      {3, ParadoxCase::C, d.b3, d.b3 > 0.0, theorem3_interval(cfg, d)},
      {4, ParadoxCase::D, d.b4, d.b4 > 0.0, theorem4_interval(cfg, d)},
  }};
  std::vector<Interval> pieces;
  for (const auto& t : r.theorems) pieces.push_back(t.interval);
  r.region = normalize_union(std::move(pieces));

  r.pseudo_conditions = pseudo_paradox_region(cfg, mode);
  std::vector<Interval> pseudo;
  for (const auto& c : r.pseudo_conditions) pseudo.push_back(c.interval);
  r.pseudo_region = normalize_union(std::move(pseudo));
  return r;
}

std::vector<PseudoCondition> pseudo_paradox_region(const FourNodeConfig& cfg, Mode mode) {
  const DerivedQuantities d = derive_quantities(cfg, mode);
  const Bounds b(cfg, d);
  const ExtendedReal zero(0.0);
  const ExtendedReal inf = ExtendedReal::pos_inf();
  const double num = d.bridge_numerator;

  std::vector<PseudoCondition> out;
  const auto add = [&](char c, Interval i) {
    if (!i.empty()) out.push_back({c, i});
  };

  // Only P2 used in both networks.
  add('a', positive_part(zero, min_of({b.neg_al_45, b.neg_bar_4}), true, false));
  // Only P1 used in both networks.
  add('b', positive_part(zero, min_of({b.al_12, b.neg_hat_2}), true, false));

  // P1 and P2 used in both networks: Q > L and Q * B1 >= num.
  const ExtendedReal lower = b.n_interior();
  if (d.b1 > 0.0) {
    const ExtendedReal t = num / d.b1;
    add('c', t > lower ? positive_part(t, inf, false, true) : positive_part(lower, inf, true, true));
  } else if (d.b1 == 0.0) {
    if (num <= 0.0) add('c', positive_part(lower, inf, true, true));
  } else {
    add('c', positive_part(lower, num / d.b1, true, false));
  }

  // All paths used in N+ but the bridge flow does not change the time.
  if (d.b1 == 0.0 && num > 0.0) add('d', positive_part(max_of({lower, d.mu1, d.mu2}), inf, true, true));
  return out;
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Improvement: return "improvement";
    case Outcome::Paradox: return "paradox";
    case Outcome::Equal: return "equal";
  }
  return "?";
}

Classification classify(const FourNodeConfig& cfg, double q, Mode mode) {
  Classification c;
  c.n = equilibrium_n(cfg, q, mode);
  c.nplus = equilibrium_nplus(cfg, q, mode);
  c.delta = c.nplus.travel_time - c.n.travel_time;
  // Same used paths in both networks: the two times are the same formula.
  const bool same_line = (c.n.label == CaseLabel::NA && c.nplus.label == CaseLabel::PlusB) ||
                         (c.n.label == CaseLabel::NB && c.nplus.label == CaseLabel::PlusC) ||
                         (c.n.label == CaseLabel::NC && c.nplus.label == CaseLabel::PlusF);
  const double tol = kEqualTolerance * std::max(1.0, std::abs(c.n.travel_time));
  if (same_line) {
    c.outcome = Outcome::Equal;
  } else if (c.delta > tol) {
    c.outcome = Outcome::Paradox;
    c.paradox_case = paradox_case_of(c.nplus.label);
    c.case_pair_admissible = c.n.label == CaseLabel::NC && c.paradox_case.has_value();
  } else if (c.delta < -tol) {
    c.outcome = Outcome::Improvement;
  } else {
    c.outcome = Outcome::Equal;
  }
  return c;
}

std::optional<SymmetryPattern> detect_symmetry(const FourNodeConfig& cfg, double tol) {
  const auto eq = [&](double x, double y) { return near(x, y, tol); };
  const bool s = eq(cfg.a(1), cfg.a(5)) && eq(cfg.a(2), cfg.a(4)) && eq(cfg.b(1), cfg.b(5)) && eq(cfg.b(2), cfg.b(4));
  if (!s) return std::nullopt;
  const bool m = eq(cfg.a(1), 0.0) && eq(cfg.a(5), 0.0) && eq(cfg.b(2), cfg.b(3));
  return m ? SymmetryPattern::M : SymmetryPattern::S;
}

bool is_asymmetric_pattern(const FourNodeConfig& cfg, double tol) {
  const auto eq = [&](double x, double y) { return near(x, y, tol); };
  return eq(cfg.a(1), cfg.a(4)) && eq(cfg.a(2), cfg.a(5)) && eq(cfg.b(1), cfg.b(4)) && eq(cfg.b(2), cfg.b(5));
}

SymmetricReport symmetric_analysis(const FourNodeConfig& cfg, Mode mode) {
  const auto pattern = detect_symmetry(cfg);
  if (!pattern) throw NotSymmetric("configuration matches neither the M nor the S symmetry pattern");

  SymmetricReport r;
  r.pattern = *pattern;
  const double b1 = cfg.b(1);
  const double b2 = cfg.b(2);
  if (r.pattern == SymmetryPattern::M) {
    const double gap = cfg.a(2) - cfg.a(3);
    if (b1 > b2 && gap > 0.0) r.closed_form = Interval::open(2.0 * gap / (3.0 * b1 + b2), 2.0 * gap / (b1 - b2));
  } else {
    const double gap = cfg.a(2) - cfg.alpha_sum({1, 3});
    if (b1 > b2 && gap > 0.0)
      r.closed_form = Interval::open(2.0 * gap / (3.0 * b1 + 2.0 * cfg.b(3) - b2), 2.0 * gap / (b1 - b2));
  }

  r.general = paradox_region(cfg, mode).region;
  if (r.closed_form.empty()) {
    r.agrees = r.general.empty();
  } else {
    r.agrees = r.general.size() == 1 && near(r.general[0].lo().value(), r.closed_form.lo().value(), 1e-9) &&
               near(r.general[0].hi().value(), r.closed_form.hi().value(), 1e-9) && r.general[0].lo_open() &&
               r.general[0].hi_open();
  }
  return r;
}

}  // namespace braess
