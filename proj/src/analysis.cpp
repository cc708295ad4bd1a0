#include "braess/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "braess/errors.hpp"
#include "braess/oracle.hpp"
#include "braess/piecewise.hpp"
#include "parallel.hpp"

namespace braess {

using nlohmann::json;

std::vector<SweepRow> sweep(const FourNodeConfig& cfg, double qmin, double qmax, int steps, Mode mode) {
  if (!(qmin > 0.0) || !(qmax > qmin) || !std::isfinite(qmax))
    throw InvalidQ(fmt::format("sweep needs 0 < qmin < qmax (got {}, {})", qmin, qmax));
  if (steps < 2) throw InvalidQ("sweep needs at least 2 steps");
  const auto n = static_cast<std::size_t>(steps);
  const double step = (qmax - qmin) / static_cast<double>(n - 1);
  std::vector<SweepRow> rows(n);
  detail::parallel_for(n, [&](std::size_t i) {
    const double q = i + 1 == n ? qmax : qmin + step * static_cast<double>(i);
    const Classification c = classify(cfg, q, mode);
    rows[i] = {q, c.n, c.nplus, c.delta, c.outcome};
  });
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "Q,T_N,case_N,T_Nplus,case_Nplus,delta,classification\n";
  for (const auto& r : rows) {
    out << fmt::format("{:.9g},{:.9g},{},{:.9g},{},{:.9g},{}\n", r.q, r.n.travel_time, to_string(r.n.label),
                       r.nplus.travel_time, to_string(r.nplus.label), r.delta, to_string(r.outcome));
  }
}

std::pair<double, double> verification_range(const FourNodeConfig& cfg, bool with_bc, Mode mode) {
  const std::vector<double> t = case_thresholds(cfg, with_bc, mode);
  if (t.empty()) return {0.1, 10.0};
  return {0.1 * t.front(), 10.0 * t.back()};
}

VerifyResult verify_against_oracle(const FourNodeConfig& cfg, bool with_bc, Mode mode, const VerifyOptions& opts) {
  VerifyResult result;
  std::tie(result.q_lo, result.q_hi) = verification_range(cfg, with_bc, mode);

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(std::log(result.q_lo), std::log(result.q_hi));
  std::vector<double> qs(opts.samples);
  for (auto& q : qs) q = std::exp(unit(rng));

  std::vector<double> residual(qs.size(), 0.0);
  detail::parallel_for(qs.size(), [&](std::size_t i) {
    const double q = qs[i];
    const auto compare = [&](bool bc) {
      const double closed = equilibrium(cfg, bc, q, mode).travel_time + opts.fault_offset;
      const double reference = oracle::beckmann_solve(cfg, bc, q).travel_time;
      return std::abs(closed - reference) / (1.0 + std::abs(reference));
    };
    residual[i] = compare(false);
    if (with_bc) residual[i] = std::max(residual[i], compare(true));
  });

  result.checked = qs.size();
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (residual[i] > result.max_residual) {
      result.max_residual = residual[i];
      result.worst_q = qs[i];
    }
    if (residual[i] > opts.tolerance && (!result.failing_q || qs[i] < *result.failing_q)) result.failing_q = qs[i];
  }
  result.passed = !result.failing_q.has_value();
  return result;
}

json to_json(ExtendedReal x) {
  if (x.is_pos_inf()) return "inf";
  if (x.is_neg_inf()) return "-inf";
  return x.value();
}

json to_json(const Interval& interval) {
  if (interval.empty()) return {{"empty", true}};
  return {{"empty", false},
          {"lo", to_json(interval.lo())},
          {"hi", to_json(interval.hi())},
          {"lo_open", interval.lo_open()},
          {"hi_open", interval.hi_open()},
          {"display", interval.to_string(2)}};
}

json to_json(const FourNodeInput& input) {
  json alpha = json::array();
  json beta = json::array();
  for (std::size_t i = 0; i < 5; ++i) {
    if (i == 2 && !input.has_bc) {
      alpha.push_back(nullptr);
      beta.push_back(nullptr);
      continue;
    }
    alpha.push_back(input.config.alpha[i]);
    beta.push_back(input.config.beta[i]);
  }
  return {{"alpha", alpha}, {"beta", beta}, {"has_bc", input.has_bc}};
}

json to_json(const EquilibriumSolution& s) {
  return {{"network", s.topology == Topology::N ? "N" : "Nplus"},
          {"case", to_string(s.label)},
          {"T_eq", s.travel_time},
          {"path_flows", {{"P1", s.paths.p1}, {"P2", s.paths.p2}, {"P3", s.paths.p3}}},
          {"link_flows",
           {{"ab", s.links.ab}, {"bd", s.links.bd}, {"bc", s.links.bc}, {"ac", s.links.ac}, {"cd", s.links.cd}}}};
}

json to_json(const ParadoxReport& r) {
  const auto& d = r.derived;
  json theorems = json::array();
  for (const auto& t : r.theorems) {
    theorems.push_back({{"theorem", t.theorem},
                        {"nplus_case", to_string(nplus_case(t.paradox_case))},
                        {"braess_number", t.braess_number},
                        {"gate_open", t.gate_open},
                        {"interval", to_json(t.interval)}});
  }
  json region = json::array();
  for (const auto& i : r.region) region.push_back(to_json(i));
  json pseudo_conditions = json::array();
  for (const auto& c : r.pseudo_conditions)
    pseudo_conditions.push_back({{"condition", std::string(1, c.condition)}, {"interval", to_json(c.interval)}});
  json pseudo = json::array();
  for (const auto& i : r.pseudo_region) pseudo.push_back(to_json(i));

  return {{"four_node", to_json(FourNodeInput{r.config, true})},
          {"mode", r.mode == Mode::Strict ? "strict" : "relaxed"},
          {"derived",
           {{"al", d.al},
            {"al_bar", d.al_bar},
            {"al_hat", d.al_hat},
            {"beta", d.beta_total},
            {"B1", d.b1},
            {"B2", d.b2},
            {"B3", d.b3},
            {"B4", d.b4},
            {"mu1", to_json(d.mu1)},
            {"mu2", to_json(d.mu2)}}},
          {"theorems", theorems},
          {"paradox_region", region},
          {"pseudo_conditions", pseudo_conditions},
          {"pseudo_region", pseudo}};
}

std::string render_text(const EquilibriumSolution& s) {
  std::string out = fmt::format("network {}  case {}\nT_eq = {:.9g}\n", s.topology == Topology::N ? "N" : "N+",
                                to_string(s.label), s.travel_time);
  out += fmt::format("path flows: P1={:.9g} P2={:.9g} P3={:.9g}\n", s.paths.p1, s.paths.p2, s.paths.p3);
  out += fmt::format("link flows: ab={:.9g} bd={:.9g} bc={:.9g} ac={:.9g} cd={:.9g}\n", s.links.ab, s.links.bd,
                     s.links.bc, s.links.ac, s.links.cd);
  return out;
}

namespace {

std::string join(const std::vector<Interval>& pieces) {
  std::string out;
  for (const auto& p : pieces) out += (out.empty() ? "" : " U ") + p.to_string(2);
  return out;
}

// Paths the network with the bridge uses while this kind of paradox lasts.
std::string usage(ParadoxCase pc) {
  switch (pc) {
    case ParadoxCase::A: return "all paths used";
    case ParadoxCase::B: return "only P3 used";
    case ParadoxCase::C: return "only P1 unused";
    case ParadoxCase::D: return "only P2 unused";
  }
  return "?";
}

bool covers_all_positive(const std::vector<Interval>& region) {
  return region.size() == 1 && region[0].lo() == ExtendedReal(0.0) && region[0].hi().is_pos_inf();
}

}  // namespace

std::string render_text(const ParadoxReport& r) {
  const auto& d = r.derived;
  const auto& c = r.config;
  std::string out = fmt::format("alpha = ({}, {}, {}, {}, {})\nbeta  = ({}, {}, {}, {}, {})\n", c.alpha[0], c.alpha[1],
                                c.alpha[2], c.alpha[3], c.alpha[4], c.beta[0], c.beta[1], c.beta[2], c.beta[3],
                                c.beta[4]);
  out += fmt::format("al = {:.6g}  al_bar = {:.6g}  al_hat = {:.6g}  beta = {:.6g}\n", d.al, d.al_bar, d.al_hat,
                     d.beta_total);
  out += fmt::format("mu1 = {}  mu2 = {}\n", format_fixed(d.mu1, 4), format_fixed(d.mu2, 4));
  out += fmt::format("B1 = {:.9g}  B2 = {:.9g}  B3 = {:.9g}  B4 = {:.9g}\n", d.b1, d.b2, d.b3, d.b4);
  for (const auto& t : r.theorems) {
    out += fmt::format("{:<22} B{} = {:<12.9g} {}\n", usage(t.paradox_case) + ":", t.theorem, t.braess_number,
                       t.gate_open ? t.interval.to_string(2) : "empty (B <= 0)");
  }
  if (r.region.empty() && covers_all_positive(r.pseudo_region)) {
    out += "no paradox for any Q; pseudo-paradox for all Q>0\n";
    return out;
  }
  out += "paradox region: " + (r.region.empty() ? std::string("none") : join(r.region)) + "\n";
  out += "pseudo-paradox region: " + (r.pseudo_region.empty() ? std::string("none") : join(r.pseudo_region));
  for (const auto& p : r.pseudo_conditions) out += fmt::format(" [{}: {}]", p.condition, p.interval.to_string(2));
  out += "\n";
  return out;
}

}  // namespace braess
