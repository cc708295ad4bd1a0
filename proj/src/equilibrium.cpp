#include "braess/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include <fmt/format.h>

#include "braess/errors.hpp"

namespace braess {

namespace {

void check_q(double q) {
  if (!std::isfinite(q) || q <= 0.0) throw InvalidQ(fmt::format("total flow Q must be finite and > 0 (got {})", q));
}

double checked(double value, const char* what) {
  if (!std::isfinite(value)) throw DomainError(fmt::format("{} is not finite for this configuration", what));
  return value;
}

// Assembles a solution from the bridge-side split: f on (a,b), g on (b,c).
EquilibriumSolution from_split(Topology topo, CaseLabel label, double q, double f, double g, double t) {
  f = std::clamp(f, 0.0, q);
  g = std::clamp(g, 0.0, f);
  EquilibriumSolution s;
  s.topology = topo;
  s.label = label;
  s.travel_time = checked(t, "equilibrium travel time");
  s.paths = {f - g, q - f, g};
  s.links = link_flows(s.paths);
  return s;
}

// Comparisons used by the guards. slack = 0 gives the exact comparison.
bool at_most(double q, ExtendedReal bound, double slack) {
  if (!bound.is_finite()) return q <= bound.value();
  return q <= bound.value() + slack * (1.0 + std::abs(bound.value()));
}
bool above(double q, ExtendedReal bound, double slack) {
  if (!bound.is_finite()) return q > bound.value();
  return q > bound.value() - slack * (1.0 + std::abs(bound.value()));
}

struct PlusGuards {
  ExtendedReal hat_35;     // al_hat / beta_35
  ExtendedReal bar_13;     // al_bar / beta_13
  ExtendedReal neg_al_45;  // -al / beta_45
  ExtendedReal neg_bar_4;  // -al_bar / beta_4
  ExtendedReal al_12;      // al / beta_12
  ExtendedReal neg_hat_2;  // -al_hat / beta_2
  ExtendedReal mu1;
  ExtendedReal mu2;
  double b1 = 0.0;
  double numerator = 0.0;  // al_hat beta_14 + al_bar beta_25

  PlusGuards(const FourNodeConfig& cfg, const DerivedQuantities& d)
      : hat_35(ExtendedReal::ratio(d.al_hat, cfg.beta_sum({3, 5}), "al_hat/beta_35")),
        bar_13(ExtendedReal::ratio(d.al_bar, cfg.beta_sum({1, 3}), "al_bar/beta_13")),
        neg_al_45(ExtendedReal::ratio(-d.al, cfg.beta_sum({4, 5}), "-al/beta_45")),
        neg_bar_4(ExtendedReal::ratio(-d.al_bar, cfg.b(4), "-al_bar/beta_4")),
        al_12(ExtendedReal::ratio(d.al, cfg.beta_sum({1, 2}), "al/beta_12")),
        neg_hat_2(ExtendedReal::ratio(-d.al_hat, cfg.b(2), "-al_hat/beta_2")),
        mu1(d.mu1),
        mu2(d.mu2),
        b1(d.b1),
        numerator(d.bridge_numerator) {}

  std::optional<CaseLabel> match(double q, double slack) const {
    const double qb1 = q * b1;
    const double switch_slack = slack * (1.0 + std::abs(numerator) + std::abs(qb1));
    if (at_most(q, min_of({hat_35, bar_13}), slack)) return CaseLabel::PlusA;
    if (at_most(q, min_of({neg_al_45, neg_bar_4}), slack)) return CaseLabel::PlusB;
    if (at_most(q, min_of({al_12, neg_hat_2}), slack)) return CaseLabel::PlusC;
    if (above(q, max_of({bar_13, neg_bar_4}), slack) && at_most(q, mu1, slack)) return CaseLabel::PlusD;
    if (above(q, max_of({hat_35, neg_hat_2}), slack) && at_most(q, mu2, slack)) return CaseLabel::PlusE;
    if (above(q, max_of({al_12, neg_al_45}), slack) && qb1 >= numerator - switch_slack) return CaseLabel::PlusF;
    if (above(q, max_of({mu1, mu2}), slack) && qb1 < numerator + switch_slack) return CaseLabel::PlusG;
    return std::nullopt;
  }

  std::string dump(double q) const {
    return fmt::format(
        "Q={:.17g} al_hat/beta_35={:.17g} al_bar/beta_13={:.17g} -al/beta_45={:.17g} -al_bar/beta_4={:.17g} "
        "al/beta_12={:.17g} -al_hat/beta_2={:.17g} mu1={:.17g} mu2={:.17g} B1={:.17g} "
        "al_hat*beta_14+al_bar*beta_25={:.17g}",
        q, hat_35.value(), bar_13.value(), neg_al_45.value(), neg_bar_4.value(), al_12.value(), neg_hat_2.value(),
        mu1.value(), mu2.value(), b1, numerator);
  }
};

constexpr double kGuardSlack = 1e-12;

}  // namespace

std::string_view to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::NA: return "N.a";
    case CaseLabel::NB: return "N.b";
    case CaseLabel::NC: return "N.c";
    case CaseLabel::PlusA: return "Nplus.a";
    case CaseLabel::PlusB: return "Nplus.b";
    case CaseLabel::PlusC: return "Nplus.c";
    case CaseLabel::PlusD: return "Nplus.d";
    case CaseLabel::PlusE: return "Nplus.e";
    case CaseLabel::PlusF: return "Nplus.f";
    case CaseLabel::PlusG: return "Nplus.g";
  }
  return "?";
}

char case_letter(CaseLabel label) { return to_string(label).back(); }

Topology topology_of(CaseLabel label) {
  switch (label) {
    case CaseLabel::NA:
    case CaseLabel::NB:
    case CaseLabel::NC: return Topology::N;
    default: return Topology::NPlus;
  }
}

LinkFlows link_flows(const PathFlows& p) {
  return {p.p1 + p.p3, p.p1, p.p3, p.p2, p.p2 + p.p3};
}

std::array<double, 3> path_times(const FourNodeConfig& cfg, const PathFlows& paths) {
  const LinkFlows x = link_flows(paths);
  const auto t = [&](int link, double flow) { return cfg.a(link) + cfg.b(link) * flow; };
  return {t(1, x.ab) + t(2, x.bd), t(4, x.ac) + t(5, x.cd), t(1, x.ab) + t(3, x.bc) + t(5, x.cd)};
}

Line case_line(const FourNodeConfig& cfg, CaseLabel label, Mode mode) {
  const auto A = [&](std::initializer_list<int> l) { return cfg.alpha_sum(l); };
  const auto B = [&](std::initializer_list<int> l) { return cfg.beta_sum(l); };
  const bool needs_bc = topology_of(label) == Topology::NPlus;
  validate(cfg, mode, needs_bc);
  const double al = A({4, 5}) - A({1, 2});
  const double beta = B({1, 2, 4, 5});

  Line line;
  switch (label) {
    case CaseLabel::NA:
    case CaseLabel::PlusB: line = {A({4, 5}), B({4, 5})}; break;
    case CaseLabel::NB:
    case CaseLabel::PlusC: line = {A({1, 2}), B({1, 2})}; break;
    case CaseLabel::NC:
    case CaseLabel::PlusF: line = {A({1, 2}) + al * B({1, 2}) / beta, B({4, 5}) * B({1, 2}) / beta}; break;
    case CaseLabel::PlusA: line = {A({1, 3, 5}), B({1, 3, 5})}; break;
    case CaseLabel::PlusD: {
      const double al_bar = A({4}) - A({1, 3});
      const double b4 = cfg.b(4);
      line = {A({4, 5}) - al_bar * b4 / B({1, 3, 4}), B({4, 5}) - b4 * b4 / B({1, 3, 4})};
      break;
    }
    case CaseLabel::PlusE: {
      const double al_hat = A({2}) - A({3, 5});
      const double b2 = cfg.b(2);
      line = {A({1, 2}) - al_hat * b2 / B({2, 3, 5}), B({1, 2}) - b2 * b2 / B({2, 3, 5})};
      break;
    }
    case CaseLabel::PlusG: {
      const DerivedQuantities d = derive_quantities(cfg, mode);
      const double scale = d.b1 / (beta * d.bridge_denominator);
      line = {A({1, 2}) + al * B({1, 2}) / beta + d.bridge_numerator * scale,
              B({4, 5}) * B({1, 2}) / beta - d.b1 * scale};
      break;
    }
  }
  checked(line.intercept, "case line intercept");
  checked(line.slope, "case line slope");
  return line;
}

EquilibriumSolution equilibrium_n(const FourNodeConfig& cfg, double q, Mode mode) {
  check_q(q);
  validate(cfg, mode, false);
  const auto A = [&](std::initializer_list<int> l) { return cfg.alpha_sum(l); };
  const auto B = [&](std::initializer_list<int> l) { return cfg.beta_sum(l); };
  const double al = A({4, 5}) - A({1, 2});
  const double beta = B({1, 2, 4, 5});
  const ExtendedReal neg_al_45 = ExtendedReal::ratio(-al, B({4, 5}), "-al/beta_45");
  const ExtendedReal al_12 = ExtendedReal::ratio(al, B({1, 2}), "al/beta_12");

  // Only P2 used.
  if (q <= neg_al_45.value()) return from_split(Topology::N, CaseLabel::NA, q, 0.0, 0.0, A({4, 5}) + q * B({4, 5}));
  // Only P1 used.
  if (q <= al_12.value()) return from_split(Topology::N, CaseLabel::NB, q, q, 0.0, A({1, 2}) + q * B({1, 2}));
  if (q > max_of({al_12, neg_al_45}).value()) {
    const double h = checked((al + q * B({4, 5})) / beta, "P1 flow");
    return from_split(Topology::N, CaseLabel::NC, q, h, 0.0, A({1, 2}) + (al + q * B({4, 5})) * B({1, 2}) / beta);
  }
  throw NoCaseMatched(fmt::format("no equilibrium case of N matched: Q={:.17g} al/beta_12={:.17g} -al/beta_45={:.17g}",
                                  q, al_12.value(), neg_al_45.value()));
}

EquilibriumSolution equilibrium_nplus(const FourNodeConfig& cfg, double q, Mode mode) {
  check_q(q);
  const DerivedQuantities d = derive_quantities(cfg, mode);
  const PlusGuards guards(cfg, d);

  std::optional<CaseLabel> label = guards.match(q, 0.0);
  if (!label) label = guards.match(q, kGuardSlack);
  if (!label) throw NoCaseMatched("no equilibrium case of N+ matched: " + guards.dump(q));

  const auto A = [&](std::initializer_list<int> l) { return cfg.alpha_sum(l); };
  const auto B = [&](std::initializer_list<int> l) { return cfg.beta_sum(l); };
  const double beta = d.beta_total;
  const auto plus = [&](CaseLabel l, double f, double g, double t) {
    return from_split(Topology::NPlus, l, q, f, g, t);
  };

  switch (*label) {
    case CaseLabel::PlusA: return plus(*label, q, q, A({1, 3, 5}) + q * B({1, 3, 5}));
    case CaseLabel::PlusB: return plus(*label, 0.0, 0.0, A({4, 5}) + q * B({4, 5}));
    case CaseLabel::PlusC: return plus(*label, q, 0.0, A({1, 2}) + q * B({1, 2}));
    case CaseLabel::PlusD: {
      const double f = checked((d.al_bar + q * cfg.b(4)) / B({1, 3, 4}), "flow on (a,b)");
      return plus(*label, f, f, A({4, 5}) + q * B({4, 5}) - (d.al_bar + q * cfg.b(4)) * cfg.b(4) / B({1, 3, 4}));
    }
    case CaseLabel::PlusE: {
      const double g = checked((d.al_hat + q * cfg.b(2)) / B({2, 3, 5}), "flow on (b,c)");
      return plus(*label, q, g, A({1, 2}) + q * B({1, 2}) - (d.al_hat + q * cfg.b(2)) * cfg.b(2) / B({2, 3, 5}));
    }
    case CaseLabel::PlusF: {
      const double f = checked((d.al + q * B({4, 5})) / beta, "flow on (a,b)");
      return plus(*label, f, 0.0, A({1, 2}) + (d.al + q * B({4, 5})) * B({1, 2}) / beta);
    }
    case CaseLabel::PlusG: {
      const double g = checked((d.bridge_numerator - q * d.b1) / d.bridge_denominator, "flow on (b,c)");
      const double f = (d.al + g * B({2, 5}) + q * B({4, 5})) / beta;
      return plus(*label, f, g, A({1, 2}) + (d.al + q * B({4, 5})) * B({1, 2}) / beta + g * d.b1 / beta);
    }
    default: break;
  }
  throw NoCaseMatched("unexpected case label for N+");
}

EquilibriumSolution equilibrium(const FourNodeConfig& cfg, bool with_bc, double q, Mode mode) {
  return with_bc ? equilibrium_nplus(cfg, q, mode) : equilibrium_n(cfg, q, mode);
}

}  // namespace braess
