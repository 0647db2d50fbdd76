#include "sfwit/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace sfwit {

void SweepRange::validate() const {
  if (steps < 2) throw InvalidStateError("range: steps must be >= 2");
  if (!std::isfinite(lo) || !std::isfinite(hi) || hi <= lo)
    throw InvalidStateError("range: bounds must be finite with hi > lo");
}

void SweepRequest::validate() const {
  range.validate();
  if (scenario != "gaussian" && scenario != "thermal" && scenario != "hybrid" &&
      scenario != "custom")
    throw InvalidStateError("unknown scenario tag: " + scenario);
  if (y <= 0) throw InvalidStateError("y must be > 0");
  for (double d : deltas)
    if (d <= 0) throw InvalidStateError("delta must be > 0");
  if (p < 0 || p > 1) throw InvalidStateError("p must be in [0, 1]");
  if (n_max < 1) throw InvalidStateError("nmax must be >= 1");
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

void parallel_points(int n, const std::function<void(int)>& body) {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  unsigned n_threads = std::min<unsigned>(hw, n);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n_threads; ++t)
    pool.emplace_back([&, t] {
      for (int i = t; i < n; i += n_threads) body(i);
    });
  for (auto& th : pool) th.join();
}

SweepResult make_curve(const std::string& name, const std::string& method,
                       const SweepRange& range,
                       const std::function<double(double)>& f) {
  SweepResult r;
  r.curve = name;
  r.method = method;
  r.parameters.resize(range.steps);
  r.values.resize(range.steps);
  for (int i = 0; i < range.steps; ++i) r.parameters[i] = range.point(i);
  parallel_points(range.steps,
                  [&](int i) { r.values[i] = f(r.parameters[i]); });
  for (double v : r.values)
    if (!std::isfinite(v))
      throw InvalidStateError("sweep produced a non-finite value");
  return r;
}

WitnessCoefficients coeffs_for(const SweepRequest& req) {
  if (req.c) return *req.c;
  return req.scenario == "gaussian" ? WitnessCoefficients::all_minus()
                                    : WitnessCoefficients::xy_plus_z_minus();
}

}  // namespace

std::vector<SweepResult> run_gaussian(const SweepRequest& req) {
  req.validate();
  WitnessCoefficients c = req.c ? *req.c : WitnessCoefficients::all_minus();
  std::vector<SweepResult> out;
  for (int id = 1; id <= 3; ++id) {
    out.push_back(make_curve("w" + std::to_string(id), "closed_form", req.range,
                             [&, id](double x) {
                               return closed_form_w(
                                   id, GaussianScenario(x, req.y, c));
                             }));
    if (req.oracle_overlay)
      out.push_back(make_curve("w" + std::to_string(id), "oracle", req.range,
                               [&, id](double x) {
                                 return gaussian_grid_expectation(id, x, req.y,
                                                                  c, 2048);
                               }));
  }
  return out;
}

std::vector<SweepResult> run_thermal(const SweepRequest& req) {
  req.validate();
  WitnessCoefficients c =
      req.c ? *req.c : WitnessCoefficients::xy_plus_z_minus();
  std::vector<SweepResult> out;
  DensityMatrix spin_rho =
      DensityMatrix::from_pure(canonical_state(TwoSpinState::psi_plus));
  for (double delta : req.deltas) {
    std::string tag = "delta=" + fmt_short(delta);
    out.push_back(make_curve(tag, "closed_form", req.range, [&](double q) {
      return closed_form_thermal(q, req.eta, delta, c);
    }));
    if (req.oracle_overlay) {
      FockSpace space = delta < 0.1 ? thermal_space_for(delta, 1e-7)
                                    : FockSpace(req.n_max);
      ModeState th = thermal_state(delta, space, delta < 0.1 ? 1e-7 : 1e-10);
      out.push_back(make_curve(tag, "oracle", req.range, [&](double q) {
        WitnessOperator w = witness_bc_single_mode(q, req.eta, space, c);
        return w.expectation_product(spin_rho, th.rho());
      }));
    }
  }
  return out;
}

std::vector<SweepResult> run_hybrid(const SweepRequest& req) {
  req.validate();
  WitnessCoefficients c =
      req.c ? *req.c : WitnessCoefficients::xy_plus_z_minus();
  FockSpace space(req.n_max);
  std::vector<SweepResult> out;

  struct Curve {
    std::string name;
    std::function<double(double)> closed;
    HybridScenarioState state;
  };
  std::vector<Curve> curves;
  curves.push_back({"phi1_alpha=0",
                    [&](double q) {
                      return closed_form_hybrid1(q, req.eta, Complex(0.0), c);
                    },
                    hybrid_phi1(0.0, space)});
  if (req.alpha != Complex(0.0)) {
    std::string atag = fmt_short(req.alpha.real());
    if (req.alpha.imag() != 0.0)
      atag += (req.alpha.imag() > 0 ? "+" : "") + fmt_short(req.alpha.imag()) +
              "i";
    curves.push_back({"phi1_alpha=" + atag,
                      [&](double q) {
                        return closed_form_hybrid1(q, req.eta, req.alpha, c);
                      },
                      hybrid_phi1(req.alpha, space, GuardPolicy::relaxed)});
  }
  curves.push_back({"phi2",
                    [&](double q) {
                      return closed_form_hybrid2(q, req.eta, c);
                    },
                    hybrid_phi2(space)});
  curves.push_back({"phi3_p=" + fmt_short(req.p),
                    [&](double q) {
                      return closed_form_hybrid3(q, req.eta, req.p, c);
                    },
                    hybrid_phi3(req.p, space)});

  for (auto& cv : curves) {
    out.push_back(make_curve(cv.name, "closed_form", req.range, cv.closed));
    if (req.oracle_overlay)
      out.push_back(make_curve(cv.name, "oracle", req.range, [&](double q) {
        WitnessOperator w = witness_bc_single_mode(q, req.eta, space, c);
        return cv.state.pure ? w.expectation(*cv.state.pure)
                             : w.expectation(cv.state.density());
      }));
  }
  return out;
}

std::vector<SweepResult> run_sweep(const SweepRequest& req) {
  if (req.scenario == "gaussian") return run_gaussian(req);
  if (req.scenario == "thermal") return run_thermal(req);
  if (req.scenario == "hybrid") return run_hybrid(req);
  if (req.scenario == "custom") {
    // single curve from the explicit coefficient vector on the ion-chain
    // flavor; intended for ad-hoc exploration
    req.validate();
    WitnessCoefficients c = coeffs_for(req);
    std::vector<SweepResult> out;
    out.push_back(make_curve("custom", "closed_form", req.range, [&](double q) {
      return closed_form_thermal(q, req.eta, req.deltas.front(), c);
    }));
    return out;
  }
  throw InvalidStateError("unknown scenario tag: " + req.scenario);
}

std::string to_csv(const std::vector<SweepResult>& results) {
  std::ostringstream os;
  os << "parameter,curve,value,method\n";
  for (const auto& r : results)
    for (size_t i = 0; i < r.parameters.size(); ++i)
      os << fmt(r.parameters[i]) << ',' << r.curve << ',' << fmt(r.values[i])
         << ',' << r.method << '\n';
  return os.str();
}

ordered_json to_json(const std::vector<SweepResult>& results,
                     const SweepRequest& req) {
  ordered_json root;
  root["schema"] = "sfwit-sweep/1";
  root["scenario"] = req.scenario;
  root["seed"] = req.seed;
  ordered_json rows = ordered_json::array();
  for (const auto& r : results)
    for (size_t i = 0; i < r.parameters.size(); ++i) {
      ordered_json row;
      row["parameter"] = r.parameters[i];
      row["curve"] = r.curve;
      row["value"] = r.values[i];
      row["method"] = r.method;
      rows.push_back(std::move(row));
    }
  root["rows"] = std::move(rows);
  return root;
}

void emit(const std::vector<SweepResult>& results, const SweepRequest& req) {
  std::string payload = req.format == OutputFormat::csv
                            ? to_csv(results)
                            : to_json(results, req).dump(2) + "\n";
  if (req.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(req.out_path, std::ios::binary);
  if (!f) throw InvalidStateError("cannot open output file: " + req.out_path);
  f << payload;
  if (!f) throw InvalidStateError("write failed: " + req.out_path);
}

int run_verify(const SweepRequest& req, const VerifyHooks& hooks) {
  VerifyOptions opt;
  opt.seed = req.seed;
  opt.n_max = req.n_max;
  std::vector<ComparisonReport> reports = verify_all(opt, hooks);
  ordered_json j = reports_to_json(reports);
  std::string payload = j.dump(2) + "\n";
  if (req.out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(req.out_path, std::ios::binary);
    if (!f) throw InvalidStateError("cannot open output file: " + req.out_path);
    f << payload;
    if (!f) throw InvalidStateError("write failed: " + req.out_path);
  }
  return verify_exit_code(reports);
}

void apply_config(SweepRequest& req, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidStateError("cannot open config file: " + path);
  ordered_json j = ordered_json::parse(f);
  if (j.contains("scenario")) req.scenario = j["scenario"].get<std::string>();
  if (j.contains("range")) {
    const auto& r = j["range"];
    if (r.is_string()) {
      std::string s = r.get<std::string>();
      size_t a = s.find(':'), b = s.rfind(':');
      if (a == std::string::npos || b == a)
        throw InvalidStateError("config range must be MIN:MAX:STEPS");
      req.range.lo = std::stod(s.substr(0, a));
      req.range.hi = std::stod(s.substr(a + 1, b - a - 1));
      req.range.steps = std::stoi(s.substr(b + 1));
    } else {
      req.range.lo = r.at("min").get<double>();
      req.range.hi = r.at("max").get<double>();
      req.range.steps = r.at("steps").get<int>();
    }
  }
  if (j.contains("y")) req.y = j["y"].get<double>();
  if (j.contains("delta")) {
    req.deltas.clear();
    if (j["delta"].is_array())
      for (const auto& d : j["delta"]) req.deltas.push_back(d.get<double>());
    else
      req.deltas.push_back(j["delta"].get<double>());
  }
  if (j.contains("eta")) req.eta = j["eta"].get<double>();
  if (j.contains("alpha_re") || j.contains("alpha_im"))
    req.alpha = Complex(j.value("alpha_re", req.alpha.real()),
                        j.value("alpha_im", req.alpha.imag()));
  if (j.contains("p")) req.p = j["p"].get<double>();
  if (j.contains("c")) {
    if (j["c"].is_string()) {
      if (j["c"].get<std::string>() != "auto")
        throw InvalidStateError("config c must be \"auto\" or [cx, cy, cz]");
      req.c.reset();
    } else {
      auto arr = j["c"].get<std::vector<double>>();
      if (arr.size() != 3)
        throw InvalidStateError("config c must have three entries");
      req.c = WitnessCoefficients(arr[0], arr[1], arr[2]);
    }
  }
  if (j.contains("nmax")) req.n_max = j["nmax"].get<int>();
  if (j.contains("out")) req.out_path = j["out"].get<std::string>();
  if (j.contains("format")) {
    std::string fstr = j["format"].get<std::string>();
    if (fstr == "csv")
      req.format = OutputFormat::csv;
    else if (fstr == "json")
      req.format = OutputFormat::json;
    else
      throw InvalidStateError("config format must be csv or json");
  }
  if (j.contains("seed")) req.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("oracle_overlay"))
    req.oracle_overlay = j["oracle_overlay"].get<bool>();
}

}  // namespace sfwit
