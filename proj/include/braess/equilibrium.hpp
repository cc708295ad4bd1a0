#pragma once

#include <array>
#include <string_view>

#include "braess/core.hpp"

namespace braess {

/// N is the configuration without the bridge link (b,c); N+ includes it.
enum class Topology { N, NPlus };

/// Equilibrium regimes. In N: a = only P2 used, b = only P1 used, c = both.
/// In N+: a/b/c = only P3/P2/P1 used, d/e/f = only P1/P2/P3 unused,
/// g = all three paths used.
enum class CaseLabel { NA, NB, NC, PlusA, PlusB, PlusC, PlusD, PlusE, PlusF, PlusG };

std::string_view to_string(CaseLabel label);  // "N.a", "Nplus.g", ...
char case_letter(CaseLabel label);
Topology topology_of(CaseLabel label);

/// Flows on P1 = a-b-d, P2 = a-c-d and P3 = a-b-c-d.
struct PathFlows {
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;

  double total() const { return p1 + p2 + p3; }
};

struct LinkFlows {
  double ab = 0.0;
  double bd = 0.0;
  double bc = 0.0;
  double ac = 0.0;
  double cd = 0.0;
};

LinkFlows link_flows(const PathFlows& paths);

/// Travel times of P1, P2, P3 under the given path flows.
std::array<double, 3> path_times(const FourNodeConfig& cfg, const PathFlows& paths);

struct EquilibriumSolution {
  Topology topology = Topology::N;
  CaseLabel label = CaseLabel::NA;
  double travel_time = 0.0;
  PathFlows paths;
  LinkFlows links;
};

/// Travel time of a case as an affine function of the total flow.
struct Line {
  double intercept = 0.0;
  double slope = 0.0;

  double at(double q) const { return intercept + slope * q; }
};

/// Closed-form line of `label` for this configuration.
Line case_line(const FourNodeConfig& cfg, CaseLabel label, Mode mode = Mode::Strict);

/// Equilibrium in N for total flow q > 0 (throws InvalidQ otherwise).
/// Guards are compared exactly; at a shared boundary the earlier case wins.
EquilibriumSolution equilibrium_n(const FourNodeConfig& cfg, double q, Mode mode = Mode::Strict);

/// Equilibrium in N+ for total flow q > 0. Guards (a)..(g) are tried in
/// order with exact comparisons, then once more with a 1e-12 relative slack
/// to bridge rounding gaps between adjacent guards. Throws NoCaseMatched,
/// with every guard value in the message, if neither pass matches.
EquilibriumSolution equilibrium_nplus(const FourNodeConfig& cfg, double q, Mode mode = Mode::Strict);

EquilibriumSolution equilibrium(const FourNodeConfig& cfg, bool with_bc, double q, Mode mode = Mode::Strict);

}  // namespace braess
