#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sfwit/oracle.hpp"
#include "sfwit/sweep.hpp"

namespace py = pybind11;
using namespace sfwit;

namespace {

WitnessCoefficients coeffs(const std::vector<double>& c) {
  if (c.size() != 3)
    throw InvalidStateError("coefficients must have three entries");
  return WitnessCoefficients(c[0], c[1], c[2]);
}

}  // namespace

PYBIND11_MODULE(sfwit, m) {
  m.doc() =
      "Structure-factor entanglement witnesses for hybrid spin-position "
      "systems";

  m.def(
      "pauli",
      [](const std::string& axis) {
        if (axis == "x") return pauli(PauliAxis::x);
        if (axis == "y") return pauli(PauliAxis::y);
        if (axis == "z") return pauli(PauliAxis::z);
        throw InvalidStateError("axis must be x, y or z");
      },
      py::arg("axis"));

  m.def(
      "canonical_state",
      [](const std::string& name) { return canonical_state(name).amplitudes(); },
      py::arg("name"),
      "Amplitudes of a named two-spin state in the (uu, ud, du, dd) basis");

  m.def(
      "concurrence",
      [](const MatXc& rho) {
        return concurrence(DensityMatrix(HilbertSpec({2, 2}), rho));
      },
      py::arg("rho"), "Wootters concurrence of a two-qubit density matrix");

  m.def(
      "displacement",
      [](Complex alpha, int n_max, bool relaxed) {
        return displacement(alpha, FockSpace(n_max),
                            relaxed ? GuardPolicy::relaxed
                                    : GuardPolicy::strict);
      },
      py::arg("alpha"), py::arg("n_max"), py::arg("relaxed") = false);

  m.def(
      "displacement_exp",
      [](Complex alpha, int n_max, bool relaxed) {
        return displacement_exp(alpha, FockSpace(n_max),
                                relaxed ? GuardPolicy::relaxed
                                        : GuardPolicy::strict);
      },
      py::arg("alpha"), py::arg("n_max"), py::arg("relaxed") = false);

  m.def(
      "coherent_amplitudes",
      [](Complex alpha, int n_max) {
        return coherent_amplitudes(alpha, FockSpace(n_max));
      },
      py::arg("alpha"), py::arg("n_max"));

  m.def(
      "thermal_diagonal",
      [](double delta, int n_max, double tail_tol) {
        MatXc rho = thermal_state(delta, FockSpace(n_max), tail_tol).rho();
        return VecXd(rho.diagonal().real());
      },
      py::arg("delta"), py::arg("n_max"), py::arg("tail_tol") = 1e-10);

  m.def("thermal_mean_occupation", &thermal_mean_occupation, py::arg("delta"));

  m.def(
      "char_fn_thermal",
      [](double delta, Complex alpha, int n_max) {
        return char_fn(thermal_state(delta, FockSpace(n_max)), alpha,
                       GuardPolicy::relaxed);
      },
      py::arg("delta"), py::arg("alpha"), py::arg("n_max") = 60);

  m.def(
      "closed_form_w",
      [](int state_id, double x, double y, const std::vector<double>& c) {
        return closed_form_w(state_id, GaussianScenario(x, y, coeffs(c)));
      },
      py::arg("state_id"), py::arg("x"), py::arg("y"),
      py::arg("c") = std::vector<double>{-1.0, -1.0, -1.0},
      "Closed-form double-well witness expectation");

  m.def(
      "closed_form_thermal",
      [](double qprime, double eta, double delta, const std::vector<double>& c) {
        return closed_form_thermal(qprime, eta, delta, coeffs(c));
      },
      py::arg("qprime"), py::arg("eta"), py::arg("delta"),
      py::arg("c") = std::vector<double>{1.0, 1.0, -1.0});

  m.def(
      "closed_form_hybrid",
      [](int line, double qprime, double eta, Complex alpha, double p,
         const std::vector<double>& c) {
        WitnessCoefficients wc = coeffs(c);
        if (line == 1) return closed_form_hybrid1(qprime, eta, alpha, wc);
        if (line == 2) return closed_form_hybrid2(qprime, eta, wc);
        if (line == 3) return closed_form_hybrid3(qprime, eta, p, wc);
        throw InvalidStateError("line must be 1, 2 or 3");
      },
      py::arg("line"), py::arg("qprime"), py::arg("eta") = 1.0,
      py::arg("alpha") = Complex(0.0), py::arg("p") = 0.75,
      py::arg("c") = std::vector<double>{1.0, 1.0, -1.0});

  m.def(
      "grid_oracle_w",
      [](int state_id, double x, double y, const std::vector<double>& c,
         int n_points) {
        return gaussian_grid_expectation(state_id, x, y, coeffs(c), n_points);
      },
      py::arg("state_id"), py::arg("x"), py::arg("y"),
      py::arg("c") = std::vector<double>{-1.0, -1.0, -1.0},
      py::arg("n_points") = 2048,
      "Brute-force grid evaluation of the double-well witness");

  m.def(
      "thermal_expectation",
      [](double qprime, double eta, double delta, int n_max,
         const std::vector<double>& c) {
        FockSpace sp(n_max);
        WitnessOperator w = witness_bc_single_mode(qprime, eta, sp, coeffs(c));
        DensityMatrix spin =
            DensityMatrix::from_pure(canonical_state(TwoSpinState::psi_plus));
        return w.expectation_product(spin,
                                     thermal_state(delta, sp).rho());
      },
      py::arg("qprime"), py::arg("eta"), py::arg("delta"),
      py::arg("n_max") = 60, py::arg("c") = std::vector<double>{1.0, 1.0, -1.0},
      "Full-operator witness expectation on the spin-triplet thermal state");

  m.def(
      "verify",
      [](std::uint64_t seed) {
        VerifyOptions opt;
        opt.seed = seed;
        std::vector<ComparisonReport> reports = verify_all(opt);
        return py::make_tuple(verify_exit_code(reports),
                              reports_to_json(reports).dump(2));
      },
      py::arg("seed") = 42,
      "Runs the verification battery; returns (exit_code, json_report)");
}
