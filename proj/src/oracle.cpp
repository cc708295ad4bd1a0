#include "braess/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <stdexcept>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "braess/errors.hpp"
#include "parallel.hpp"

namespace braess::oracle {

namespace {

// incidence[link][path]: links ab, bd, bc, ac, cd; paths P1, P2, P3.
constexpr int kIncidence[5][3] = {
    {1, 0, 1},  // ab
    {1, 0, 0},  // bd
    {0, 0, 1},  // bc
    {0, 1, 0},  // ac
    {0, 1, 1},  // cd
};

struct CostModel {
  Eigen::Vector3d free_flow;  // path time at zero flow
  Eigen::Matrix3d delay;      // path time = free_flow + delay * h
};

CostModel cost_model(const FourNodeConfig& cfg) {
  CostModel m;
  m.free_flow.setZero();
  m.delay.setZero();
  for (int l = 0; l < 5; ++l) {
    for (int i = 0; i < 3; ++i) {
      if (!kIncidence[l][i]) continue;
      m.free_flow(i) += cfg.alpha[static_cast<std::size_t>(l)];
      for (int j = 0; j < 3; ++j)
        if (kIncidence[l][j]) m.delay(i, j) += cfg.beta[static_cast<std::size_t>(l)];
    }
  }
  return m;
}

Eigen::Vector3d as_vector(const PathFlows& f) { return {f.p1, f.p2, f.p3}; }
PathFlows as_flows(const Eigen::Vector3d& h) { return {h(0), h(1), h(2)}; }

void check_inputs(const FourNodeConfig& cfg, bool with_bc, double q) {
  if (!std::isfinite(q) || q <= 0.0) throw InvalidQ(fmt::format("total flow Q must be finite and > 0 (got {})", q));
  validate(cfg, Mode::Relaxed, with_bc);
}

bool all_delays_positive(const FourNodeConfig& cfg, bool with_bc) {
  for (int l = 1; l <= 5; ++l)
    if ((with_bc || l != 3) && !(cfg.b(l) > 0.0)) return false;
  return true;
}

struct Residuals {
  double travel_time = 0.0;
  double used_spread = 0.0;
  double unused_shortfall = 0.0;
  std::array<bool, 3> used{};
};

Residuals residuals(const std::array<double, 3>& times, const PathFlows& flows, int n_paths, double used_threshold) {
  const std::array<double, 3> h = {flows.p1, flows.p2, flows.p3};
  Residuals r;
  double weighted = 0.0;
  double mass = 0.0;
  for (int i = 0; i < n_paths; ++i) {
    r.used[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(i)] > used_threshold;
    weighted += h[static_cast<std::size_t>(i)] * times[static_cast<std::size_t>(i)];
    mass += h[static_cast<std::size_t>(i)];
  }
  r.travel_time = mass > 0.0 ? weighted / mass : *std::min_element(times.begin(), times.begin() + n_paths);
  for (int i = 0; i < n_paths; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (r.used[k])
      r.used_spread = std::max(r.used_spread, std::abs(times[k] - r.travel_time));
    else
      r.unused_shortfall = std::max(r.unused_shortfall, r.travel_time - times[k]);
  }
  return r;
}

OracleSolution finish(const FourNodeConfig& cfg, bool with_bc, const PathFlows& flows, Method method,
                      double used_threshold) {
  OracleSolution s;
  s.flows = flows;
  s.method = method;
  s.potential = beckmann_potential(cfg, flows);
  const Residuals r = residuals(oracle_path_times(cfg, flows), flows, with_bc ? 3 : 2, used_threshold);
  s.travel_time = r.travel_time;
  s.kkt_residual = std::max(r.used_spread, r.unused_shortfall);
  s.support = r.used;
  return s;
}

// KKT enumeration for min over the simplex of the quadratic whose gradient is
// free_flow + delay * h.
Eigen::Vector3d enumerate_supports(const CostModel& m, int n_paths, double q) {
  const double flow_tol = 1e-10 * (1.0 + q);
  std::vector<unsigned> masks;
  for (unsigned mask = 1; mask < (1u << n_paths); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });

  for (unsigned mask : masks) {
    std::vector<int> idx;
    for (int i = 0; i < n_paths; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    const auto k = static_cast<Eigen::Index>(idx.size());
    // Unknowns: h over the support, then the common time T.
    Eigen::MatrixXd lhs = Eigen::MatrixXd::Zero(k + 1, k + 1);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
    for (Eigen::Index r = 0; r < k; ++r) {
      for (Eigen::Index c = 0; c < k; ++c) lhs(r, c) = m.delay(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(c)]);
      lhs(r, k) = -1.0;
      rhs(r) = -m.free_flow(idx[static_cast<std::size_t>(r)]);
      lhs(k, r) = 1.0;
    }
    rhs(k) = q;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(lhs);
    if (!lu.isInvertible()) continue;
    const Eigen::VectorXd sol = lu.solve(rhs);

    Eigen::Vector3d h = Eigen::Vector3d::Zero();
    bool feasible = true;
    for (Eigen::Index r = 0; r < k; ++r) {
      if (sol(r) < -flow_tol) feasible = false;
      h(idx[static_cast<std::size_t>(r)]) = std::max(0.0, sol(r));
    }
    if (!feasible) continue;
    const double t = sol(k);
    const Eigen::Vector3d times = m.free_flow + m.delay * h;
    for (int j = 0; j < n_paths; ++j)
      if (!(mask & (1u << j)) && times(j) < t - 1e-10 * (1.0 + std::abs(t))) feasible = false;
    if (!feasible) continue;

    // Restore the exact total after clamping.
    Eigen::Index largest = 0;
    h.maxCoeff(&largest);
    h(largest) += q - h.sum();
    return h;
  }
  throw NoKKTPoint(fmt::format("no path support satisfies the equilibrium conditions at Q={}", q));
}

double golden_section(const std::function<double(double)>& fn, double lo, double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = fn(x1);
  double f2 = fn(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = fn(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = fn(x2);
    }
  }
  // Minima on the boundary are common (unused paths); take an end point if
  // it is at least as good.
  double best = 0.5 * (a + b);
  double best_value = fn(best);
  for (double end : {lo, hi}) {
    const double v = fn(end);
    if (v <= best_value) {
      best = end;
      best_value = v;
    }
  }
  return best;
}

}  // namespace

std::array<double, 3> oracle_path_times(const FourNodeConfig& cfg, const PathFlows& flows) {
  const CostModel m = cost_model(cfg);
  const Eigen::Vector3d t = m.free_flow + m.delay * as_vector(flows);
  return {t(0), t(1), t(2)};
}

double beckmann_potential(const FourNodeConfig& cfg, const PathFlows& flows) {
  const Eigen::Vector3d h = as_vector(flows);
  double total = 0.0;
  for (int l = 0; l < 5; ++l) {
    double x = 0.0;
    for (int i = 0; i < 3; ++i) x += kIncidence[l][i] * h(i);
    const auto k = static_cast<std::size_t>(l);
    total += cfg.alpha[k] * x + 0.5 * cfg.beta[k] * x * x;
  }
  return total;
}

OracleSolution solve_active_set(const FourNodeConfig& cfg, bool with_bc, double q) {
  check_inputs(cfg, with_bc, q);
  if (!all_delays_positive(cfg, with_bc))
    throw InvalidConfig("the active-set oracle requires every delay parameter to be positive");
  const Eigen::Vector3d h = enumerate_supports(cost_model(cfg), with_bc ? 3 : 2, q);
  return finish(cfg, with_bc, as_flows(h), Method::ActiveSet, 1e-12 * (1.0 + q));
}

OracleSolution solve_grid(const FourNodeConfig& cfg, bool with_bc, double q) {
  check_inputs(cfg, with_bc, q);
  const double tol = 1e-10 * std::max(1.0, q);
  // f on (a,b), g on (b,c).
  const auto potential = [&](double f, double g) { return beckmann_potential(cfg, {f - g, q - f, g}); };
  const auto best_g = [&](double f) {
    if (!with_bc) return 0.0;
    return golden_section([&](double g) { return potential(f, g); }, 0.0, f, tol);
  };
  const double f = golden_section([&](double x) { return potential(x, best_g(x)); }, 0.0, q, tol);
  const double g = best_g(f);
  return finish(cfg, with_bc, {f - g, q - f, g}, Method::Grid, 1e-8 * (1.0 + q));
}

OracleSolution beckmann_solve(const FourNodeConfig& cfg, bool with_bc, double q) {
  check_inputs(cfg, with_bc, q);
  return all_delays_positive(cfg, with_bc) ? solve_active_set(cfg, with_bc, q) : solve_grid(cfg, with_bc, q);
}

OracleSolution system_optimum(const FourNodeConfig& cfg, bool with_bc, double q) {
  check_inputs(cfg, with_bc, q);
  if (!all_delays_positive(cfg, with_bc))
    throw InvalidConfig("the system optimum solver requires every delay parameter to be positive");
  CostModel marginal = cost_model(cfg);
  marginal.delay *= 2.0;
  const Eigen::Vector3d h = enumerate_supports(marginal, with_bc ? 3 : 2, q);
  OracleSolution s = finish(cfg, with_bc, as_flows(h), Method::ActiveSet, 1e-12 * (1.0 + q));
  // The optimum equalizes marginal costs, not times; the residual is not meaningful here.
  s.kkt_residual = 0.0;
  return s;
}

WardropCheck verify_wardrop(const FourNodeConfig& cfg, bool with_bc, double q, const PathFlows& flows, double tol) {
  const double feas = 1e-12 * (1.0 + q);
  if (flows.p1 < -feas || flows.p2 < -feas || flows.p3 < -feas)
    throw InfeasibleFlows(fmt::format("negative path flow ({}, {}, {})", flows.p1, flows.p2, flows.p3));
  if (!with_bc && std::abs(flows.p3) > feas) throw InfeasibleFlows("flow on P3 without the bridge link");
  if (std::abs(flows.total() - q) > feas)
    throw InfeasibleFlows(fmt::format("path flows sum to {} instead of Q={}", flows.total(), q));

  const auto times = oracle_path_times(cfg, flows);
  const Residuals r = residuals(times, flows, with_bc ? 3 : 2, feas);
  WardropCheck c;
  c.travel_time = r.travel_time;
  c.used_spread = r.used_spread;
  c.unused_shortfall = std::max(0.0, r.unused_shortfall);
  c.times = times;
  const double limit = tol * (1.0 + std::abs(r.travel_time));
  c.passed = c.used_spread <= limit && c.unused_shortfall <= limit;
  return c;
}

bool oracle_paradox_at(const FourNodeConfig& cfg, double q) {
  const bool exact = all_delays_positive(cfg, true);
  const OracleSolution n = exact ? solve_active_set(cfg, false, q) : solve_grid(cfg, false, q);
  const OracleSolution plus = exact ? solve_active_set(cfg, true, q) : solve_grid(cfg, true, q);
  const double rel = exact ? 1e-9 : 1e-6;
  return plus.travel_time - n.travel_time > rel * std::max(1.0, std::abs(n.travel_time));
}

std::vector<ParadoxRun> scan_paradox(const FourNodeConfig& cfg, double q_lo, double q_hi, int n_samples) {
  if (!(q_lo > 0.0) || !(q_hi > q_lo) || !std::isfinite(q_hi))
    throw InvalidQ(fmt::format("scan range must satisfy 0 < q_lo < q_hi (got {}, {})", q_lo, q_hi));
  if (n_samples < 2) throw std::invalid_argument("scan_paradox needs at least two samples");

  const auto n = static_cast<std::size_t>(n_samples);
  const double step = (q_hi - q_lo) / static_cast<double>(n - 1);
  const auto sample = [&](std::size_t i) { return i + 1 == n ? q_hi : q_lo + step * static_cast<double>(i); };
  std::vector<char> paradox(n, 0);
  detail::parallel_for(n, [&](std::size_t i) { paradox[i] = oracle_paradox_at(cfg, sample(i)) ? 1 : 0; });

  const double tol = (q_hi - q_lo) / static_cast<double>(n_samples) / 100.0;
  // Bisects a bracket whose left end has state `left_state`.
  const auto refine = [&](double a, double b, bool left_state) {
    while (b - a > tol) {
      const double mid = 0.5 * (a + b);
      if (oracle_paradox_at(cfg, mid) == left_state)
        a = mid;
      else
        b = mid;
    }
    return 0.5 * (a + b);
  };

  std::vector<ParadoxRun> runs;
  for (std::size_t i = 0; i < n;) {
    if (!paradox[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < n && paradox[j + 1]) ++j;
    ParadoxRun run;
    run.open_below = i == 0;
    run.open_above = j + 1 == n;
    run.lo = run.open_below ? sample(i) : refine(sample(i - 1), sample(i), false);
    run.hi = run.open_above ? sample(j) : refine(sample(j), sample(j + 1), true);
    runs.push_back(run);
    i = j + 1;
  }
  return runs;
}

}  // namespace braess::oracle
