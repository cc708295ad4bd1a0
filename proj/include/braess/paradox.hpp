#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "braess/core.hpp"
#include "braess/equilibrium.hpp"
#include "braess/extended_real.hpp"

namespace braess {

/// A possibly empty interval of total flows with open/closed ends.
class Interval {
 public:
  /// The empty interval.
  Interval() = default;

  /// Normalizes to empty when lo > hi, or lo == hi with an open end.
  /// Infinite ends are always reported open.
  static Interval make(ExtendedReal lo, ExtendedReal hi, bool lo_open, bool hi_open);
  static Interval open(ExtendedReal lo, ExtendedReal hi) { return make(lo, hi, true, true); }
  static Interval left_open(ExtendedReal lo, ExtendedReal hi) { return make(lo, hi, true, false); }

  bool empty() const { return empty_; }
  ExtendedReal lo() const { return lo_; }
  ExtendedReal hi() const { return hi_; }
  bool lo_open() const { return lo_open_; }
  bool hi_open() const { return hi_open_; }

  bool contains(double q) const;
  /// "(0.93, 8.59]", "[8.59, inf)", "(500, 1500)" or "empty".
  std::string to_string(int decimals = 2) const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  bool empty_ = true;
  ExtendedReal lo_;
  ExtendedReal hi_;
  bool lo_open_ = true;
  bool hi_open_ = true;
};

/// Sorted union of `pieces`. Overlapping pieces merge; touching pieces
/// (ends within rel_tol * (1 + |end|)) merge unless both touching ends are open.
std::vector<Interval> normalize_union(std::vector<Interval> pieces, double rel_tol = 1e-12);

/// Where, in terms of equilibrium path usage, a paradox happens. N always
/// uses both paths; in N+: A = all paths used, B = only P3 used,
/// C = only P1 unused, D = only P2 unused.
enum class ParadoxCase { A, B, C, D };

char to_char(ParadoxCase c);
/// The N+ equilibrium case a paradox in `pc` runs through.
CaseLabel nplus_case(ParadoxCase pc);
/// Inverse of nplus_case; nullopt for N+ cases in which no paradox occurs.
std::optional<ParadoxCase> paradox_case_of(CaseLabel nplus_label);

/// Exact paradox intervals for each of the four equilibrium pairings in
/// which the paradox is possible. Each is empty unless its Braess number
/// is positive. Lower bounds that are -inf (relaxed mode) drop out of the max.
Interval theorem1_interval(const FourNodeConfig& cfg, const DerivedQuantities& d);  // all paths used in N+
Interval theorem2_interval(const FourNodeConfig& cfg, const DerivedQuantities& d);  // only P3 used in N+
Interval theorem3_interval(const FourNodeConfig& cfg, const DerivedQuantities& d);  // only P1 unused in N+
Interval theorem4_interval(const FourNodeConfig& cfg, const DerivedQuantities& d);  // only P2 unused in N+

struct TheoremResult {
  int theorem = 0;  // 1..4
  ParadoxCase paradox_case = ParadoxCase::A;
  double braess_number = 0.0;
  bool gate_open = false;  // braess_number > 0
  Interval interval;
};

/// A sufficient condition for the pseudo-paradox (T+ = T on an interval).
struct PseudoCondition {
  char condition = 'a';  // 'a'..'d'
  Interval interval;
};

struct ParadoxReport {
  FourNodeConfig config;
  Mode mode = Mode::Strict;
  DerivedQuantities derived;
  std::array<TheoremResult, 4> theorems;
  /// Normalized union of the theorem intervals: exactly the flows with T+ > T.
  std::vector<Interval> region;
  /// Nonempty pseudo-paradox conditions, in condition order.
  std::vector<PseudoCondition> pseudo_conditions;
  std::vector<Interval> pseudo_region;

  bool in_region(double q) const;
  bool in_pseudo_region(double q) const;
};

ParadoxReport paradox_region(const FourNodeConfig& cfg, Mode mode = Mode::Strict);

/// Conditions under which adding the bridge leaves the equilibrium time
/// unchanged. Sufficient only; empty conditions are dropped.
std::vector<PseudoCondition> pseudo_paradox_region(const FourNodeConfig& cfg, Mode mode = Mode::Strict);

enum class Outcome { Improvement, Paradox, Equal };

std::string_view to_string(Outcome outcome);  // "improvement", "paradox", "equal"

struct Classification {
  Outcome outcome = Outcome::Equal;
  EquilibriumSolution n;
  EquilibriumSolution nplus;
  double delta = 0.0;  // T+ - T
  std::optional<ParadoxCase> paradox_case;  // set when outcome is Paradox
  /// False only if a paradox arises outside the admissible case pairs.
  bool case_pair_admissible = true;
};

/// Compares T+ and T at q. Equal when both equilibria use the same paths
/// (the times are then the same formula) or |T+ - T| <= 1e-12 * max(1, |T|).
Classification classify(const FourNodeConfig& cfg, double q, Mode mode = Mode::Strict);

enum class SymmetryPattern { M, S };

struct SymmetricReport {
  SymmetryPattern pattern = SymmetryPattern::S;
  Interval closed_form;
  std::vector<Interval> general;
  bool agrees = false;  // closed_form matches general within 1e-9
};

/// M: alpha_1 = alpha_5 = 0, alpha_2 = alpha_4, beta_1 = beta_5, beta_2 = beta_3 = beta_4.
/// S: alpha_1 = alpha_5, alpha_2 = alpha_4, beta_1 = beta_5, beta_2 = beta_4.
std::optional<SymmetryPattern> detect_symmetry(const FourNodeConfig& cfg, double tol = 1e-12);
/// alpha_1 = alpha_4, alpha_2 = alpha_5, beta_1 = beta_4, beta_2 = beta_5.
bool is_asymmetric_pattern(const FourNodeConfig& cfg, double tol = 1e-12);

/// Closed-form paradox interval for symmetric configurations, checked
/// against the general machinery. Throws NotSymmetric.
SymmetricReport symmetric_analysis(const FourNodeConfig& cfg, Mode mode = Mode::Strict);

}  // namespace braess
