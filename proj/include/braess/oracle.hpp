#pragma once

#include <array>
#include <vector>

#include "braess/core.hpp"
#include "braess/equilibrium.hpp"

namespace braess::oracle {

// Independent equilibrium solver. It shares only FourNodeConfig and the
// PathFlows carrier with the closed-form module and never calls it.

enum class Method { ActiveSet, Grid };

struct OracleSolution {
  PathFlows flows;  // p3 is zero without the bridge
  double travel_time = 0.0;  // flow-weighted mean path time
  double potential = 0.0;    // Beckmann potential at `flows`
  double kkt_residual = 0.0;
  Method method = Method::ActiveSet;
  std::array<bool, 3> support{};  // paths carrying flow
};

/// Beckmann potential: sum over links of alpha x + beta x^2 / 2.
double beckmann_potential(const FourNodeConfig& cfg, const PathFlows& flows);

/// Path times computed from the oracle's own link-path incidence.
std::array<double, 3> oracle_path_times(const FourNodeConfig& cfg, const PathFlows& flows);

/// Enumerates every nonempty path support (3 without the bridge, 7 with it),
/// solves the equal-time system on each, and returns the first support
/// (smallest first) whose flows are nonnegative and whose unused paths are
/// no faster. Requires every relevant beta > 0; throws NoKKTPoint otherwise.
OracleSolution solve_active_set(const FourNodeConfig& cfg, bool with_bc, double q);

/// Minimizes the potential over 0 <= g <= f <= Q (f on (a,b), g on (b,c)) by
/// golden-section search, outer over f and inner over g, to 1e-10 * max(1, Q)
/// in flow. Works for zero delay parameters, where flows may be non-unique.
OracleSolution solve_grid(const FourNodeConfig& cfg, bool with_bc, double q);

/// Active set when every relevant beta is positive, grid otherwise.
OracleSolution beckmann_solve(const FourNodeConfig& cfg, bool with_bc, double q);

/// System optimum: minimizes total travel time q * mean time by the active-set
/// machinery applied to marginal path costs.
OracleSolution system_optimum(const FourNodeConfig& cfg, bool with_bc, double q);

struct WardropCheck {
  bool passed = false;
  double travel_time = 0.0;
  double used_spread = 0.0;       // max |time - T| over used paths
  double unused_shortfall = 0.0;  // max (T - time) over unused paths, >= 0
  std::array<double, 3> times{};
};

/// Used paths (flow above 1e-12 * (1 + Q)) must agree on their time and
/// unused paths must not be faster, both within tol * (1 + |T|). Throws
/// InfeasibleFlows when a flow is negative or the flows miss Q by more than
/// 1e-12 * (1 + Q).
WardropCheck verify_wardrop(const FourNodeConfig& cfg, bool with_bc, double q, const PathFlows& flows,
                            double tol = 1e-8);

struct ParadoxRun {
  double lo = 0.0;  // bisection-refined entry into the paradox
  double hi = 0.0;  // bisection-refined exit
  bool open_below = false;  // run starts at the first sample
  bool open_above = false;  // run ends at the last sample
};

/// Samples n_samples evenly spaced flows in [q_lo, q_hi], classifies each by
/// comparing oracle times of N+ and N, and bisects the ends of every run of
/// paradox samples to (q_hi - q_lo) / n_samples / 100.
std::vector<ParadoxRun> scan_paradox(const FourNodeConfig& cfg, double q_lo, double q_hi, int n_samples);

/// The oracle's paradox test at one flow. Equality tolerance is 1e-9
/// relative for the active-set method and 1e-6 for the grid method.
bool oracle_paradox_at(const FourNodeConfig& cfg, double q);

}  // namespace braess::oracle
