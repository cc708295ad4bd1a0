// braess: command-line front end for the four-node Braess analysis.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "braess/analysis.hpp"
#include "braess/document.hpp"
#include "braess/errors.hpp"
#include "braess/paradox.hpp"

namespace {

enum Exit { kOk = 0, kParse = 1, kTopology = 2, kDomain = 3, kVerify = 4 };

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0  success\n"
    "  1  malformed input, invalid parameters or I/O failure\n"
    "  2  network topology error (a role path is missing or broken)\n"
    "  3  math-domain error (for example 0/0 in a bound)\n"
    "  4  verification failure (closed form disagrees with the oracle)\n";

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("braess");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("BRAESS_LOG")) {
    const auto level = spdlog::level::from_str(env);
    // from_str maps unknown names to off; keep the default then.
    if (level != spdlog::level::off || std::string(env) == "off") spdlog::set_level(level);
  }
}

braess::FourNodeInput load(const std::string& path) {
  auto input = braess::resolve(braess::load_document(path));
  spdlog::debug("loaded {} (bridge {})", path, input.has_bc ? "present" : "absent");
  return input;
}

void require_bridge(const braess::FourNodeInput& input, const char* command) {
  if (!input.has_bc) throw braess::TopologyError("BC", fmt::format("{} needs the bridge link (role BC)", command));
}

struct Options {
  std::string input = "-";
  bool json = false;
  bool relaxed = false;
  bool no_bc = false;
  double q = 0.0;
  double qmin = 0.0;
  double qmax = 0.0;
  int steps = 0;
  std::string out;
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  double fault = 0.0;
};

braess::Mode mode_of(const Options& o) { return o.relaxed ? braess::Mode::Relaxed : braess::Mode::Strict; }

int cmd_reduce(const Options& o) {
  std::cout << braess::to_json(load(o.input)).dump(2) << '\n';
  return kOk;
}

int cmd_eq(const Options& o) {
  const auto input = load(o.input);
  const bool with_bc = input.has_bc && !o.no_bc;
  const auto solution = braess::equilibrium(input.config, with_bc, o.q, mode_of(o));
  if (o.json)
    std::cout << braess::to_json(solution).dump(2) << '\n';
  else
    std::cout << braess::render_text(solution);
  return kOk;
}

int cmd_paradox(const Options& o) {
  const auto input = load(o.input);
  require_bridge(input, "paradox");
  const auto report = braess::paradox_region(input.config, mode_of(o));
  if (o.json)
    std::cout << braess::to_json(report).dump(2) << '\n';
  else
    std::cout << braess::render_text(report);
  return kOk;
}

int cmd_sweep(const Options& o) {
  const auto input = load(o.input);
  require_bridge(input, "sweep");
  const auto rows = braess::sweep(input.config, o.qmin, o.qmax, o.steps, mode_of(o));
  if (o.out.empty() || o.out == "-") {
    braess::write_sweep_csv(std::cout, rows);
    return kOk;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) {
    spdlog::error("cannot open {}", o.out);
    return kParse;
  }
  braess::write_sweep_csv(file, rows);
  file.close();
  if (!file) {
    spdlog::error("write to {} failed", o.out);
    return kParse;
  }
  spdlog::info("wrote {} rows to {}", rows.size(), o.out);
  return kOk;
}

int cmd_verify(const Options& o) {
  const auto input = load(o.input);
  braess::VerifyOptions vo;
  vo.samples = o.samples;
  vo.seed = o.seed;
  vo.fault_offset = o.fault;
  const auto r = braess::verify_against_oracle(input.config, input.has_bc, mode_of(o), vo);
  std::cout << fmt::format("samples: {} over Q in [{:.6g}, {:.6g}]\n", r.checked, r.q_lo, r.q_hi);
  std::cout << fmt::format("max residual: {:.3e} at Q = {:.9g}\n", r.max_residual, r.worst_q);
  if (!r.passed) {
    std::cout << fmt::format("FAIL: residual above {:.0e} at Q = {:.9g}\n", vo.tolerance, *r.failing_q);
    return kVerify;
  }
  std::cout << "PASS\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();

  CLI::App app{"Braess paradox analysis of four-node networks"};
  app.footer(std::string(kExitCodes) +
             "\nInput is a JSON network document path, or - for stdin.\n"
             "Set BRAESS_LOG=error|info|debug for diagnostics on stderr.");
  app.require_subcommand(1);

  Options o;
  const auto add_input = [&](CLI::App* sub) { sub->add_option("input", o.input, "network document (- for stdin)"); };

  auto* reduce = app.add_subcommand("reduce", "reduce a network to the four-node configuration (JSON)");
  add_input(reduce);

  auto* eq = app.add_subcommand("eq", "equilibrium at one total flow");
  add_input(eq);
  eq->add_option("--Q", o.q, "total flow")->required();
  eq->add_flag("--no-bc", o.no_bc, "drop the bridge link");
  eq->add_flag("--relaxed", o.relaxed, "allow zero delay parameters");
  eq->add_flag("--json", o.json, "JSON output");

  auto* paradox = app.add_subcommand("paradox", "paradox and pseudo-paradox regions");
  add_input(paradox);
  paradox->add_flag("--relaxed", o.relaxed, "allow zero delay parameters");
  paradox->add_flag("--json", o.json, "JSON output with full precision");

  auto* sweep = app.add_subcommand("sweep", "tabulate both equilibria over a range of flows (CSV)");
  add_input(sweep);
  sweep->add_option("--qmin", o.qmin, "smallest flow")->required();
  sweep->add_option("--qmax", o.qmax, "largest flow")->required();
  sweep->add_option("--steps", o.steps, "number of rows, at least 2")->required();
  sweep->add_option("--out", o.out, "output file (default stdout)");
  sweep->add_flag("--relaxed", o.relaxed, "allow zero delay parameters");

  auto* verify = app.add_subcommand("verify", "cross-check closed-form equilibria against the oracle");
  add_input(verify);
  verify->add_option("--samples", o.samples, "number of random flows")->capture_default_str();
  verify->add_option("--seed", o.seed, "random seed")->capture_default_str();
  verify->add_flag("--relaxed", o.relaxed, "allow zero delay parameters");
  verify->add_option("--inject-fault", o.fault, "add this offset to closed-form times")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*reduce) return cmd_reduce(o);
    if (*eq) return cmd_eq(o);
    if (*paradox) return cmd_paradox(o);
    if (*sweep) return cmd_sweep(o);
    if (*verify) return cmd_verify(o);
  } catch (const braess::TopologyError& e) {
    std::cerr << "topology error (role " << e.role() << "): " << e.what() << '\n';
    return kTopology;
  } catch (const braess::DomainError& e) {
    std::cerr << "math-domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const braess::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kDomain;
  }
  return kOk;
}
