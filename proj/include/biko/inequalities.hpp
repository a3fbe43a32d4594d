#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "biko/measure.hpp"
#include "biko/radial_trial.hpp"
#include "biko/spectral.hpp"

namespace biko {

/// Raised when a tested integral has no decaying contribution toward the
/// origin (borderline trials saturating the local integrability threshold).
class IntegrabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two sides of a tested inequality. C0 = ((N-2)/2)^2 always; C2 = C0 - 1.
/// Empirical constants (C1, C_eps) are recorded, never asserted against
/// external values.
struct InequalityReport {
  std::string name;
  std::string trial;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  bool passed = false;
  double C0 = 0.0;
  double C1 = 0.0;
  double C2 = 0.0;
  std::optional<double> eps;
  double tolerance = 1e-9;
};

/// Radial function with derivatives, the common currency of the radial
/// inequality suites.
struct RadialFn {
  std::string label;
  std::function<double(double)> u, u1, u2, u3, u4;
  static RadialFn from_trial(const RadialTrial& t);
  static RadialFn power(double gamma);  // r^gamma (borderline probes)
};

double hardy_C0(int dimension);             // ((N-2)/2)^2
double rellich_constant(int dimension);     // (N(N-4)/4)^2 = (C0-1)^2

/// Weighted Hardy inequality C0 |u/x|^2 <= |grad u|^2 + C1 |u|^2 (N >= 3).
InequalityReport hardy_report(const Measure& m, const RadialFn& u, double C1);
double hardy_minimal_C1(const Measure& m, const RadialFn& u);

/// Weighted Rellich inequality, gradient form (N >= 5):
/// (C0-1)^2 |u/x^2|^2 <= |Lu|^2 + 2(C0-1)C1/C0 |grad u|^2 + 2(C0-1)C1^2/C0 |u|^2.
InequalityReport rellich_report(const Measure& m, const RadialFn& u, double C1);
double rellich_minimal_C1(const Measure& m, const RadialFn& u);
/// eps-form: ((C0-1)^2 - eps) |u/x^2|^2 <= |Lu|^2 + ((C0-1)C1)^2/eps |u|^2.
std::vector<InequalityReport> rellich_eps_reports(const Measure& m, const RadialFn& u,
                                                  std::span<const double> eps_list);

/// Piecewise trial for the sharpness probe; built so the splice at
/// r = 1/n is C^1 (value and radial derivative both continuous).
struct RayleighProbe {
  double c = 0.0;
  double gamma = 0.0;
  double gamma1 = 0.0;
  int n = 0;
  double alpha_n = 0.0;
  double beta_n = 0.0;
  double numerator = 0.0;
  double denominator = 0.0;
  double lambda1 = 0.0;
};

/// Rayleigh quotient of the spliced trial against the Gaussian measure:
/// [int (L phi)^2 - c |x|^{-4} phi^2] / [int phi^2 + int |grad phi|^2].
/// Requires 1 - N/2 < gamma <= 2 - N/2, 2 - N/2 < gamma1 < 0, c > 0, N >= 5.
RayleighProbe rayleigh_lambda1(double c, int N, double gamma, double gamma1, int n);
double rayleigh_phi(const RayleighProbe& p, double r);
double rayleigh_phi_deriv(const RayleighProbe& p, double r);

/// |grad u|^2 <= eps |D^2 u|^2 + C_eps |u|^2; minimal C_eps recorded.
InequalityReport interpolation_report(const Measure& m, const RadialFn& u, double eps);
InequalityReport interpolation_report_spectral(const SpectralFunction& u, double eps);

/// max over the suite of |D^2 u| / (|Lu| + |u|).
double calderon_zygmund_constant(const Measure& m, std::span<const RadialFn> suite);
double calderon_zygmund_constant_spectral(std::span<const SpectralFunction> suite);

/// || |b| u || <= C (|grad u| + |u|); minimal C recorded.
InequalityReport drift_bound_report(const Measure& m, const RadialFn& u);
InequalityReport drift_bound_report_spectral(const SpectralFunction& u);

enum class HigherRellichEstimate {
  u_over_x4_H2,        // |u/x^2|^2 <= C ||u||_{H^2}^2                 (N >= 5)
  grad_over_x4,        // |grad u / x^2|^2 <= C (|grad Lu|^2 + ||u||_{H^2}^2)  (N >= 5)
  u_over_x6,           // |u/x^3|^2 <= C (|L grad u|^2 + ||u||_{H^2}^2)        (N >= 7)
  grad_over_x6,        // |grad u / x^3|^2 <= C (|Au|^2 + ||u||_{H^3}^2)        (N >= 7)
  hess_over_x4,        // |D^2 u / x^2|^2 <= C (|Au|^2 + ||u||_{H^3}^2)         (N >= 7)
};

InequalityReport higher_rellich_report(const Measure& m, const RadialFn& u,
                                       HigherRellichEstimate which);
/// All estimates admissible at m.dimension(); throws below N = 5.
std::vector<InequalityReport> higher_rellich_reports(const Measure& m, const RadialFn& u);

/// Rellich feasibility of a inverse-fourth-power potential coupling.
bool potential_coupling_feasible(double c, int dimension);

struct SuiteOptions {
  int suite_size = 10;
  std::uint64_t seed = 1;
  std::vector<double> eps_list = {1.0, 0.1, 0.01};
};

/// Composed inequality run on one measure: constant wiring, Hardy, Rellich
/// (+ eps forms), interpolation, Calderon-Zygmund, drift bound and the
/// higher estimates admissible at the measure's dimension.
std::vector<InequalityReport> verify_suite(const Measure& m, const SuiteOptions& opts = {});

}  // namespace biko
