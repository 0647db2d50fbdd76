#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sfwit/oracle.hpp"

namespace sfwit {

struct SweepRange {
  double lo = -3.0, hi = 3.0;
  int steps = 301;
  void validate() const;
  double point(int i) const { return lo + (hi - lo) * i / double(steps - 1); }
};

enum class OutputFormat { csv, json };

/// Parameters of one CLI invocation. Fields cover every scenario; each runner
/// reads only what it needs.
struct SweepRequest {
  std::string scenario = "gaussian";  // gaussian | thermal | hybrid | custom
  SweepRange range;
  double y = 1.2;
  std::vector<double> deltas = {100.0, 1.0, 0.01};
  double eta = 1.0;
  Complex alpha{1.0, 0.0};
  double p = 0.75;
  std::optional<WitnessCoefficients> c;  // nullopt = auto (scenario default)
  int n_max = 60;
  std::string out_path;  // empty = stdout
  OutputFormat format = OutputFormat::csv;
  std::uint64_t seed = 42;
  bool oracle_overlay = false;

  void validate() const;
};

/// One labeled curve: ordered (parameter, value) pairs plus provenance.
struct SweepResult {
  std::string curve;
  std::string method;  // closed_form | oracle
  std::vector<double> parameters;
  std::vector<double> values;
};

std::vector<SweepResult> run_gaussian(const SweepRequest& req);
std::vector<SweepResult> run_thermal(const SweepRequest& req);
std::vector<SweepResult> run_hybrid(const SweepRequest& req);
/// Generic dispatch by request.scenario (with optional oracle overlay rows).
std::vector<SweepResult> run_sweep(const SweepRequest& req);

std::string to_csv(const std::vector<SweepResult>& results);
ordered_json to_json(const std::vector<SweepResult>& results,
                     const SweepRequest& req);

/// Writes the results in the requested format to out_path (stdout if empty).
void emit(const std::vector<SweepResult>& results, const SweepRequest& req);

/// Runs the verification battery, writes the JSON report, returns the exit
/// code (0 iff every non-expected-fail suite passes).
int run_verify(const SweepRequest& req, const VerifyHooks& hooks = {});

/// Applies JSON config-file values to a request; CLI flags override later.
void apply_config(SweepRequest& req, const std::string& path);

}  // namespace sfwit
