#include <cmath>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sfwit/sweep.hpp"

namespace {

struct RawFlags {
  std::string range;
  std::string c;
  std::string format;
  std::string config;
  double alpha_re = std::numeric_limits<double>::quiet_NaN();
  double alpha_im = std::numeric_limits<double>::quiet_NaN();
};

void add_common(CLI::App* cmd, sfwit::SweepRequest& req, RawFlags& raw) {
  cmd->add_option("--range", raw.range, "parameter range MIN:MAX:STEPS");
  cmd->add_option("--y", req.y, "delocalization ratio r/sigma");
  cmd->add_option("--delta", req.deltas,
                  "thermal parameter hbar*omega/kB*T (repeatable)");
  cmd->add_option("--eta", req.eta, "displacement scale");
  cmd->add_option("--alpha-re", raw.alpha_re, "coherent amplitude, real part");
  cmd->add_option("--alpha-im", raw.alpha_im,
                  "coherent amplitude, imaginary part");
  cmd->add_option("--p", req.p, "mixing probability of the mixed scenario");
  cmd->add_option("--c", raw.c, "witness coefficients cx,cy,cz or 'auto'");
  cmd->add_option("--nmax", req.n_max, "Fock-space truncation");
  cmd->add_option("--out", req.out_path, "output path (default: stdout)");
  cmd->add_option("--format", raw.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--seed", req.seed, "RNG seed for the verification battery");
  cmd->add_option("--config", raw.config,
                  "JSON config file (applied before command-line flags)");
  cmd->add_flag("--oracle", req.oracle_overlay,
                "also emit brute-force oracle rows");
}

void apply_raw(sfwit::SweepRequest& req, const RawFlags& raw) {
  if (!std::isnan(raw.alpha_re))
    req.alpha = sfwit::Complex(raw.alpha_re, req.alpha.imag());
  if (!std::isnan(raw.alpha_im))
    req.alpha = sfwit::Complex(req.alpha.real(), raw.alpha_im);
  if (!raw.range.empty()) {
    size_t a = raw.range.find(':'), b = raw.range.rfind(':');
    if (a == std::string::npos || b == a)
      throw CLI::ValidationError("--range", "expected MIN:MAX:STEPS");
    try {
      req.range.lo = std::stod(raw.range.substr(0, a));
      req.range.hi = std::stod(raw.range.substr(a + 1, b - a - 1));
      req.range.steps = std::stoi(raw.range.substr(b + 1));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--range", "expected MIN:MAX:STEPS");
    }
  }
  if (!raw.c.empty()) {
    if (raw.c == "auto") {
      req.c.reset();
    } else {
      double v[3];
      size_t a = raw.c.find(','), b = raw.c.rfind(',');
      if (a == std::string::npos || b == a)
        throw CLI::ValidationError("--c", "expected cx,cy,cz or 'auto'");
      try {
        v[0] = std::stod(raw.c.substr(0, a));
        v[1] = std::stod(raw.c.substr(a + 1, b - a - 1));
        v[2] = std::stod(raw.c.substr(b + 1));
        req.c = sfwit::WitnessCoefficients(v[0], v[1], v[2]);
      } catch (const CLI::Error&) {
        throw;
      } catch (const std::exception& e) {
        throw CLI::ValidationError("--c", e.what());
      }
    }
  }
  if (!raw.format.empty())
    req.format = raw.format == "json" ? sfwit::OutputFormat::json
                                      : sfwit::OutputFormat::csv;
}

}  // namespace

int main(int argc, char** argv) {
  sfwit::SweepRequest req;

  // config file first, so explicit flags can override its values
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    std::string path;
    if (arg == "--config" && i + 1 < argc)
      path = argv[i + 1];
    else if (arg.rfind("--config=", 0) == 0)
      path = arg.substr(9);
    if (!path.empty()) {
      try {
        sfwit::apply_config(req, path);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
    }
  }

  CLI::App app{
      "Structure-factor entanglement witnesses for hybrid spin-position "
      "systems"};
  app.require_subcommand(1);
  RawFlags raw;

  CLI::App* cmd_gaussian = app.add_subcommand(
      "gaussian", "double-well curves <W>_1..3 over the rescaled momentum x");
  CLI::App* cmd_thermal = app.add_subcommand(
      "thermal", "two-ion thermal-mode curve per bath parameter delta");
  CLI::App* cmd_hybrid = app.add_subcommand(
      "hybrid", "spin-motion scenario curves phi1(alpha), phi2, phi3(p)");
  CLI::App* cmd_sweep =
      app.add_subcommand("sweep", "generic sweep selected by --scenario");
  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "closed-form vs brute-force verification battery");
  std::string sweep_scenario;
  cmd_sweep->add_option("--scenario", sweep_scenario,
                        "gaussian | thermal | hybrid | custom");
  for (CLI::App* c :
       {cmd_gaussian, cmd_thermal, cmd_hybrid, cmd_sweep, cmd_verify})
    add_common(c, req, raw);

  try {
    app.parse(argc, argv);
    apply_raw(req, raw);

    if (cmd_verify->parsed()) return sfwit::run_verify(req);

    std::vector<sfwit::SweepResult> results;
    if (cmd_gaussian->parsed()) {
      req.scenario = "gaussian";
      results = sfwit::run_gaussian(req);
    } else if (cmd_thermal->parsed()) {
      req.scenario = "thermal";
      results = sfwit::run_thermal(req);
    } else if (cmd_hybrid->parsed()) {
      req.scenario = "hybrid";
      results = sfwit::run_hybrid(req);
    } else {
      if (!sweep_scenario.empty()) req.scenario = sweep_scenario;
      results = sfwit::run_sweep(req);
    }
    sfwit::emit(results, req);
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
