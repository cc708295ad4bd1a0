#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "braess/document.hpp"
#include "braess/equilibrium.hpp"
#include "braess/paradox.hpp"

namespace braess {

struct SweepRow {
  double q = 0.0;
  EquilibriumSolution n;
  EquilibriumSolution nplus;
  double delta = 0.0;  // T+ - T
  Outcome outcome = Outcome::Equal;
};

/// `steps` evenly spaced flows from qmin to qmax inclusive, classified with
/// the closed-form equilibria. Rows are in ascending Q.
std::vector<SweepRow> sweep(const FourNodeConfig& cfg, double qmin, double qmax, int steps,
                            Mode mode = Mode::Strict);

/// Header Q,T_N,case_N,T_Nplus,case_Nplus,delta,classification; numbers with
/// 9 significant digits; '\n' line endings.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

struct VerifyOptions {
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  double tolerance = 1e-6;
  double fault_offset = 0.0;  // added to the closed-form times; test hook
};

struct VerifyResult {
  bool passed = true;
  std::size_t checked = 0;
  double q_lo = 0.0;
  double q_hi = 0.0;
  double max_residual = 0.0;  // max |T_closed - T_oracle| / (1 + |T_oracle|)
  double worst_q = 0.0;
  std::optional<double> failing_q;  // smallest sampled Q over tolerance
};

/// Flow range the verifier samples: 0.1x the smallest to 10x the largest
/// case threshold, or [0.1, 10] when there is none.
std::pair<double, double> verification_range(const FourNodeConfig& cfg, bool with_bc, Mode mode);

/// Compares closed-form and oracle equilibrium times at log-uniform random
/// flows (N, and N+ when with_bc).
VerifyResult verify_against_oracle(const FourNodeConfig& cfg, bool with_bc, Mode mode, const VerifyOptions& opts);

/// Extended reals as JSON numbers, infinities as the strings "inf"/"-inf".
nlohmann::json to_json(ExtendedReal x);
nlohmann::json to_json(const Interval& interval);
/// {"alpha": [...], "beta": [...], "has_bc": bool}; link 3 is null without the bridge.
nlohmann::json to_json(const FourNodeInput& input);
nlohmann::json to_json(const EquilibriumSolution& solution);
/// Contains a "four_node" member, so the output is itself a valid document.
nlohmann::json to_json(const ParadoxReport& report);

std::string render_text(const EquilibriumSolution& solution);
/// Human-readable report; bounds are rounded to 2 decimals.
std::string render_text(const ParadoxReport& report);

}  // namespace braess
