#include "biko/inequalities.hpp"

#include <cmath>

#include "biko/quadrature.hpp"
#include "biko/util.hpp"

namespace biko {

RadialFn RadialFn::from_trial(const RadialTrial& t) {
  RadialFn f;
  f.label = t.label();
  f.u = [t](double r) { return t.deriv(0, r); };
  f.u1 = [t](double r) { return t.deriv(1, r); };
  f.u2 = [t](double r) { return t.deriv(2, r); };
  f.u3 = [t](double r) { return t.deriv(3, r); };
  f.u4 = [t](double r) { return t.deriv(4, r); };
  return f;
}

RadialFn RadialFn::power(double gamma) {
  RadialFn f;
  f.label = "r^" + format_double(gamma);
  f.u = [gamma](double r) { return std::pow(r, gamma); };
  f.u1 = [gamma](double r) { return gamma * std::pow(r, gamma - 1.0); };
  f.u2 = [gamma](double r) { return gamma * (gamma - 1.0) * std::pow(r, gamma - 2.0); };
  f.u3 = [gamma](double r) {
    return gamma * (gamma - 1.0) * (gamma - 2.0) * std::pow(r, gamma - 3.0);
  };
  f.u4 = [gamma](double r) {
    return gamma * (gamma - 1.0) * (gamma - 2.0) * (gamma - 3.0) * std::pow(r, gamma - 4.0);
  };
  return f;
}

double hardy_C0(int dimension) {
  const double v = 0.5 * (dimension - 2);
  return v * v;
}

double rellich_constant(int dimension) {
  const double v = 0.25 * dimension * (dimension - 4);
  return v * v;
}

namespace {

// Integrands appearing across the suite, as radial callables for
// Measure::radial_integral.

double Lu_radial(const Measure& m, const RadialFn& u, double r) {
  return u.u2(r) + (m.dimension() - 1) * u.u1(r) / r + m.phi1(r) * u.u1(r);
}

// (Lu)'(r)
double Lu_radial_d1(const Measure& m, const RadialFn& u, double r) {
  const double nm1 = m.dimension() - 1;
  return u.u3(r) + nm1 * (u.u2(r) / r - u.u1(r) / (r * r)) + m.phi2(r) * u.u1(r) +
         m.phi1(r) * u.u2(r);
}

// (Lu)''(r)
double Lu_radial_d2(const Measure& m, const RadialFn& u, double r) {
  const double nm1 = m.dimension() - 1;
  return u.u4(r) +
         nm1 * (u.u3(r) / r - 2.0 * u.u2(r) / (r * r) + 2.0 * u.u1(r) / (r * r * r)) +
         m.phi3(r) * u.u1(r) + 2.0 * m.phi2(r) * u.u2(r) + m.phi1(r) * u.u3(r);
}

double Au_radial(const Measure& m, const RadialFn& u, double r) {
  return Lu_radial_d2(m, u, r) + (m.dimension() - 1) * Lu_radial_d1(m, u, r) / r +
         m.phi1(r) * Lu_radial_d1(m, u, r);
}

// |L grad u|^2 at radius r: grad u = g(r) x with g = u'/r, and
// L(g x_i) = [g'' + (N+1) g'/r + phi' (g' + g/r)] x_i.
double Lgrad_sq(const Measure& m, const RadialFn& u, double r) {
  const double g = u.u1(r) / r;
  const double g1 = u.u2(r) / r - u.u1(r) / (r * r);
  const double g2 = u.u3(r) / r - 2.0 * u.u2(r) / (r * r) + 2.0 * u.u1(r) / (r * r * r);
  const double scalar = g2 + (m.dimension() + 1) * g1 / r + m.phi1(r) * (g1 + g / r);
  return scalar * scalar * r * r;
}

double hess_frobenius_sq(int n, const RadialFn& u, double r) {
  const double gr = u.u1(r) / r;
  return u.u2(r) * u.u2(r) + (n - 1) * gr * gr;
}

double third_frobenius_sq(int n, const RadialFn& u, double r) {
  const double b = (u.u2(r) - u.u1(r) / r) / r;
  return u.u3(r) * u.u3(r) + 3.0 * (n - 1) * b * b;
}

/// Throws when the integrand shows no decaying contribution per decade
/// toward the origin.
void require_integrable_near_zero(const Measure& m,
                                  const std::function<double(double)>& integrand,
                                  const std::string& what) {
  const int n = m.dimension();
  auto decade_mass = [&](int k) {
    const double lo = std::pow(10.0, -k - 1), hi = std::pow(10.0, -k);
    return integrate_panels(log_breaks(lo, hi, 4), 24, [&](double r) {
      return std::abs(integrand(r)) * m.radial_density(r) * std::pow(r, n - 1);
    });
  };
  const double outer = decade_mass(3);
  const double inner = decade_mass(9);
  if (outer > 0.0 && inner > 0.5 * outer)
    throw IntegrabilityError(what + ": no per-decade decay toward the origin");
}

InequalityReport make_report(std::string name, std::string trial, int dimension, double lhs,
                             double rhs, double C1, std::optional<double> eps = std::nullopt,
                             double tolerance = 1e-9) {
  InequalityReport rep;
  rep.name = std::move(name);
  rep.trial = std::move(trial);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.margin = rhs - lhs;
  rep.C0 = hardy_C0(dimension);
  rep.C1 = C1;
  rep.C2 = rep.C0 - 1.0;
  rep.eps = eps;
  rep.tolerance = tolerance;
  rep.passed = rep.margin >= -tolerance * std::max(1.0, std::abs(rhs));
  return rep;
}

}  // namespace

InequalityReport hardy_report(const Measure& m, const RadialFn& u, double C1) {
  if (m.dimension() < 3) throw std::invalid_argument("hardy_report: N >= 3 required");
  require_integrable_near_zero(
      m, [&](double r) { return u.u(r) * u.u(r) / (r * r); }, "hardy lhs");
  const double I_weight =
      m.radial_integral([&](double r) { return u.u(r) * u.u(r) / (r * r); });
  const double I_grad = m.radial_integral([&](double r) { return u.u1(r) * u.u1(r); });
  const double I0 = m.radial_integral([&](double r) { return u.u(r) * u.u(r); });
  const double C0 = hardy_C0(m.dimension());
  return make_report("hardy", u.label, m.dimension(), C0 * I_weight, I_grad + C1 * I0, C1);
}

double hardy_minimal_C1(const Measure& m, const RadialFn& u) {
  if (m.dimension() < 3) throw std::invalid_argument("hardy_minimal_C1: N >= 3 required");
  require_integrable_near_zero(
      m, [&](double r) { return u.u(r) * u.u(r) / (r * r); }, "hardy lhs");
  const double I_weight =
      m.radial_integral([&](double r) { return u.u(r) * u.u(r) / (r * r); });
  const double I_grad = m.radial_integral([&](double r) { return u.u1(r) * u.u1(r); });
  const double I0 = m.radial_integral([&](double r) { return u.u(r) * u.u(r); });
  return std::max(0.0, (hardy_C0(m.dimension()) * I_weight - I_grad) / I0);
}

namespace {

struct RellichIntegrals {
  double I4 = 0.0;  // int u^2 / r^4
  double IL = 0.0;  // int (Lu)^2
  double Ig = 0.0;  // int u'^2
  double I0 = 0.0;  // int u^2
};

RellichIntegrals rellich_integrals(const Measure& m, const RadialFn& u) {
  if (m.dimension() < 5) throw std::invalid_argument("rellich: N >= 5 required");
  require_integrable_near_zero(
      m, [&](double r) { return u.u(r) * u.u(r) / (r * r * r * r); }, "rellich lhs");
  RellichIntegrals I;
  I.I4 = m.radial_integral([&](double r) { return u.u(r) * u.u(r) / (r * r * r * r); });
  I.IL = m.radial_integral([&](double r) {
    const double v = Lu_radial(m, u, r);
    return v * v;
  });
  I.Ig = m.radial_integral([&](double r) { return u.u1(r) * u.u1(r); });
  I.I0 = m.radial_integral([&](double r) { return u.u(r) * u.u(r); });
  return I;
}

}  // namespace

InequalityReport rellich_report(const Measure& m, const RadialFn& u, double C1) {
  const auto I = rellich_integrals(m, u);
  const double C0 = hardy_C0(m.dimension());
  const double C2 = C0 - 1.0;
  const double lhs = C2 * C2 * I.I4;
  const double rhs = I.IL + (2.0 * C2 * C1 / C0) * I.Ig + (2.0 * C2 * C1 * C1 / C0) * I.I0;
  return make_report("rellich", u.label, m.dimension(), lhs, rhs, C1);
}

double rellich_minimal_C1(const Measure& m, const RadialFn& u) {
  const auto I = rellich_integrals(m, u);
  const double C0 = hardy_C0(m.dimension());
  const double C2 = C0 - 1.0;
  const double lhs = C2 * C2 * I.I4;
  if (I.IL >= lhs) return 0.0;
  // 2 C2/C0 (C1^2 I0 + C1 Ig) = lhs - IL
  const double scale = 2.0 * C2 / C0;
  const double rhsdef = (lhs - I.IL) / scale;
  return (-I.Ig + std::sqrt(I.Ig * I.Ig + 4.0 * I.I0 * rhsdef)) / (2.0 * I.I0);
}

std::vector<InequalityReport> rellich_eps_reports(const Measure& m, const RadialFn& u,
                                                  std::span<const double> eps_list) {
  const auto I = rellich_integrals(m, u);
  const double C0 = hardy_C0(m.dimension());
  const double C2 = C0 - 1.0;
  std::vector<InequalityReport> out;
  for (double eps : eps_list) {
    const double lhs = (C2 * C2 - eps) * I.I4;
    // minimal C1 with lhs <= IL + ((C2 C1)^2 / eps) I0
    const double deficit = lhs - I.IL;
    const double C1 = deficit <= 0.0 ? 0.0 : std::sqrt(deficit * eps / I.I0) / C2;
    const double rhs = I.IL + (C2 * C1) * (C2 * C1) / eps * I.I0;
    out.push_back(make_report("rellich_eps", u.label, m.dimension(), lhs, rhs, C1, eps));
  }
  return out;
}

namespace {

// Quintic smoothstep cutoff: 1 on [0,1], 0 beyond 2, C^2 across both joints.
double cutoff_theta(double r) {
  if (r <= 1.0) return 1.0;
  if (r >= 2.0) return 0.0;
  const double t = r - 1.0;
  return 1.0 - t * t * t * (10.0 - 15.0 * t + 6.0 * t * t);
}
double cutoff_theta_d1(double r) {
  if (r <= 1.0 || r >= 2.0) return 0.0;
  const double t = r - 1.0;
  return -30.0 * t * t * (1.0 - t) * (1.0 - t);
}
double cutoff_theta_d2(double r) {
  if (r <= 1.0 || r >= 2.0) return 0.0;
  const double t = r - 1.0;
  return -60.0 * t * (1.0 - t) * (1.0 - 2.0 * t);
}

}  // namespace

RayleighProbe rayleigh_lambda1(double c, int N, double gamma, double gamma1, int n) {
  if (N < 5) throw std::invalid_argument("rayleigh_lambda1: N >= 5 required");
  if (!(c > 0.0)) throw std::invalid_argument("rayleigh_lambda1: c > 0 required");
  if (!(gamma > 1.0 - 0.5 * N && gamma <= 2.0 - 0.5 * N))
    throw std::invalid_argument("rayleigh_lambda1: gamma in (1 - N/2, 2 - N/2] required");
  if (!(gamma1 > 2.0 - 0.5 * N && gamma1 < 0.0))
    throw std::invalid_argument("rayleigh_lambda1: gamma1 in (2 - N/2, 0) required");
  if (n < 1) throw std::invalid_argument("rayleigh_lambda1: n >= 1 required");

  RayleighProbe p;
  p.c = c;
  p.gamma = gamma;
  p.gamma1 = gamma1;
  p.n = n;
  // C^1 splice at r = 1/n: matching value and radial derivative forces
  // beta = (gamma/gamma1) n^{gamma1 - gamma} and alpha = n^{-gamma} - beta n^{-gamma1}.
  p.beta_n = (gamma / gamma1) * std::pow(static_cast<double>(n), gamma1 - gamma);
  p.alpha_n = std::pow(static_cast<double>(n), -gamma) -
              p.beta_n * std::pow(static_cast<double>(n), -gamma1);

  const Measure mu = gaussian_measure(N);
  const double rn = 1.0 / n;
  const double surface = sphere_surface(N);
  const auto weight = [&](double r) {
    return surface * mu.radial_density(r) * std::pow(r, N - 1);
  };

  const auto phi = [&](double r) { return rayleigh_phi(p, r); };
  const auto phi_d1 = [&](double r) { return rayleigh_phi_deriv(p, r); };
  const auto phi_d2 = [&](double r) {
    if (r < rn) return p.beta_n * gamma1 * (gamma1 - 1.0) * std::pow(r, gamma1 - 2.0);
    if (r < 1.0) return gamma * (gamma - 1.0) * std::pow(r, gamma - 2.0);
    if (r < 2.0)
      return gamma * (gamma - 1.0) * std::pow(r, gamma - 2.0) * cutoff_theta(r) +
             2.0 * gamma * std::pow(r, gamma - 1.0) * cutoff_theta_d1(r) +
             std::pow(r, gamma) * cutoff_theta_d2(r);
    return 0.0;
  };
  const auto Lphi = [&](double r) {
    return phi_d2(r) + (N - 1) * phi_d1(r) / r - r * phi_d1(r);
  };

  const auto breaks = merge_breaks({log_breaks(1e-12, rn, 3), log_breaks(rn, 1.0, 3),
                                    linear_breaks(1.0, 2.0, 0.05)});
  const auto integrate = [&](const std::function<double(double)>& f) {
    return integrate_panels(breaks, 32, f);
  };

  const double num_L = integrate([&](double r) {
    const double v = Lphi(r);
    return v * v * weight(r);
  });
  const double num_pot = integrate([&](double r) {
    const double v = phi(r);
    return c * v * v / (r * r * r * r) * weight(r);
  });
  const double den0 = integrate([&](double r) {
    const double v = phi(r);
    return v * v * weight(r);
  });
  const double den1 = integrate([&](double r) {
    const double v = phi_d1(r);
    return v * v * weight(r);
  });

  p.numerator = num_L - num_pot;
  p.denominator = den0 + den1;
  p.lambda1 = p.numerator / p.denominator;
  return p;
}

double rayleigh_phi(const RayleighProbe& p, double r) {
  if (r < 1.0 / p.n) return p.alpha_n + p.beta_n * std::pow(r, p.gamma1);
  if (r < 1.0) return std::pow(r, p.gamma);
  if (r < 2.0) return std::pow(r, p.gamma) * cutoff_theta(r);
  return 0.0;
}

double rayleigh_phi_deriv(const RayleighProbe& p, double r) {
  if (r < 1.0 / p.n) return p.beta_n * p.gamma1 * std::pow(r, p.gamma1 - 1.0);
  if (r < 1.0) return p.gamma * std::pow(r, p.gamma - 1.0);
  if (r < 2.0)
    return p.gamma * std::pow(r, p.gamma - 1.0) * cutoff_theta(r) +
           std::pow(r, p.gamma) * cutoff_theta_d1(r);
  return 0.0;
}

InequalityReport interpolation_report(const Measure& m, const RadialFn& u, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("interpolation_report: eps > 0 required");
  const int n = m.dimension();
  const double Ig = m.radial_integral([&](double r) { return u.u1(r) * u.u1(r); });
  const double Ih = m.radial_integral([&](double r) { return hess_frobenius_sq(n, u, r); });
  const double I0 = m.radial_integral([&](double r) { return u.u(r) * u.u(r); });
  const double C_eps = std::max(0.0, (Ig - eps * Ih) / I0);
  return make_report("interpolation", u.label, n, Ig, eps * Ih + C_eps * I0, C_eps, eps);
}

InequalityReport interpolation_report_spectral(const SpectralFunction& u, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("interpolation_report_spectral: eps > 0");
  const int n = u.dimension();
  double Ig = 0.0, Ih = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto di = u.derivative(i);
    Ig += inner_product_mu(di, di);
    for (int j = 0; j < n; ++j) {
      const auto dij = di.derivative(j);
      Ih += inner_product_mu(dij, dij);
    }
  }
  const double I0 = inner_product_mu(u, u);
  const double C_eps = I0 > 0.0 ? std::max(0.0, (Ig - eps * Ih) / I0) : 0.0;
  return make_report("interpolation", "spectral", n, Ig, eps * Ih + C_eps * I0, C_eps, eps);
}

double calderon_zygmund_constant(const Measure& m, std::span<const RadialFn> suite) {
  const int n = m.dimension();
  double worst = 0.0;
  for (const auto& u : suite) {
    const double Ih = m.radial_integral([&](double r) { return hess_frobenius_sq(n, u, r); });
    const double IL = m.radial_integral([&](double r) {
      const double v = Lu_radial(m, u, r);
      return v * v;
    });
    const double I0 = m.radial_integral([&](double r) { return u.u(r) * u.u(r); });
    const double denom = std::sqrt(IL) + std::sqrt(I0);
    if (denom > 0.0) worst = std::max(worst, std::sqrt(Ih) / denom);
  }
  return worst;
}

double calderon_zygmund_constant_spectral(std::span<const SpectralFunction> suite) {
  double worst = 0.0;
  for (const auto& u : suite) {
    const int n = u.dimension();
    double Ih = 0.0;
    for (int i = 0; i < n; ++i) {
      const auto di = u.derivative(i);
      for (int j = 0; j < n; ++j) {
        const auto dij = di.derivative(j);
        Ih += inner_product_mu(dij, dij);
      }
    }
    double IL = 0.0;
    const auto& set = u.index_set();
    for (std::size_t r = 0; r < u.size(); ++r) {
      const double k = static_cast<double>(set[r].order());
      IL += k * k * u[r] * u[r];
    }
    const double I0 = inner_product_mu(u, u);
    const double denom = std::sqrt(IL) + std::sqrt(I0);
    if (denom > 0.0) worst = std::max(worst, std::sqrt(Ih) / denom);
  }
  return worst;
}

InequalityReport drift_bound_report(const Measure& m, const RadialFn& u) {
  const double Ib = m.radial_integral([&](double r) {
    const double b = m.phi1(r);
    return b * b * u.u(r) * u.u(r);
  });
  const double Ig = m.radial_integral([&](double r) { return u.u1(r) * u.u1(r); });
  const double I0 = m.radial_integral([&](double r) { return u.u(r) * u.u(r); });
  const double denom = std::sqrt(Ig) + std::sqrt(I0);
  const double C = denom > 0.0 ? std::sqrt(Ib) / denom : 0.0;
  return make_report("drift_bound", u.label, m.dimension(), std::sqrt(Ib), C * denom, C);
}

InequalityReport drift_bound_report_spectral(const SpectralFunction& u) {
  const int n = u.dimension();
  double Ib = 0.0, Ig = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto xi_u = u.multiply_by_coordinate(i);
    Ib += inner_product_mu(xi_u, xi_u);
    const auto di = u.derivative(i);
    Ig += inner_product_mu(di, di);
  }
  const double I0 = inner_product_mu(u, u);
  const double denom = std::sqrt(Ig) + std::sqrt(I0);
  const double C = denom > 0.0 ? std::sqrt(Ib) / denom : 0.0;
  return make_report("drift_bound", "spectral", n, std::sqrt(Ib), C * denom, C);
}

InequalityReport higher_rellich_report(const Measure& m, const RadialFn& u,
                                       HigherRellichEstimate which) {
  const int n = m.dimension();
  const bool needs7 = which == HigherRellichEstimate::u_over_x6 ||
                      which == HigherRellichEstimate::grad_over_x6 ||
                      which == HigherRellichEstimate::hess_over_x4;
  if (n < 5) throw std::invalid_argument("higher_rellich_report: N >= 5 required");
  if (needs7 && n < 7)
    throw std::invalid_argument("higher_rellich_report: estimate requires N >= 7");

  const double I0 = m.radial_integral([&](double r) { return u.u(r) * u.u(r); });
  const double Ig = m.radial_integral([&](double r) { return u.u1(r) * u.u1(r); });
  const double Ih = m.radial_integral([&](double r) { return hess_frobenius_sq(n, u, r); });
  const double H2 = I0 + Ig + Ih;

  std::string name;
  double lhs = 0.0, rhs_base = 0.0;
  switch (which) {
    case HigherRellichEstimate::u_over_x4_H2:
      name = "higher_rellich:u/x^4<=H2";
      lhs = m.radial_integral(
          [&](double r) { return u.u(r) * u.u(r) / (r * r * r * r); });
      rhs_base = H2;
      break;
    case HigherRellichEstimate::grad_over_x4:
      name = "higher_rellich:grad/x^4";
      lhs = m.radial_integral(
          [&](double r) { return u.u1(r) * u.u1(r) / (r * r * r * r); });
      rhs_base = m.radial_integral([&](double r) {
                   const double v = Lu_radial_d1(m, u, r);
                   return v * v;
                 }) +
                 H2;
      break;
    case HigherRellichEstimate::u_over_x6:
      name = "higher_rellich:u/x^6";
      lhs = m.radial_integral(
          [&](double r) { return u.u(r) * u.u(r) / std::pow(r, 6.0); });
      rhs_base = m.radial_integral([&](double r) { return Lgrad_sq(m, u, r); }) + H2;
      break;
    case HigherRellichEstimate::grad_over_x6: {
      name = "higher_rellich:grad/x^6";
      lhs = m.radial_integral(
          [&](double r) { return u.u1(r) * u.u1(r) / std::pow(r, 6.0); });
      const double IA = m.radial_integral([&](double r) {
        const double v = Au_radial(m, u, r);
        return v * v;
      });
      const double H3 = H2 + m.radial_integral(
                                 [&](double r) { return third_frobenius_sq(n, u, r); });
      rhs_base = IA + H3;
      break;
    }
    case HigherRellichEstimate::hess_over_x4: {
      name = "higher_rellich:hess/x^4";
      lhs = m.radial_integral(
          [&](double r) { return hess_frobenius_sq(n, u, r) / (r * r * r * r); });
      const double IA = m.radial_integral([&](double r) {
        const double v = Au_radial(m, u, r);
        return v * v;
      });
      const double H3 = H2 + m.radial_integral(
                                 [&](double r) { return third_frobenius_sq(n, u, r); });
      rhs_base = IA + H3;
      break;
    }
  }
  const double C = rhs_base > 0.0 ? lhs / rhs_base : 0.0;
  auto rep = make_report(name, u.label, n, lhs, C * rhs_base, C);
  rep.passed = std::isfinite(C);
  rep.margin = 0.0;
  return rep;
}

std::vector<InequalityReport> higher_rellich_reports(const Measure& m, const RadialFn& u) {
  if (m.dimension() < 5)
    throw std::invalid_argument("higher_rellich_reports: N >= 5 required");
  std::vector<InequalityReport> out;
  out.push_back(higher_rellich_report(m, u, HigherRellichEstimate::u_over_x4_H2));
  out.push_back(higher_rellich_report(m, u, HigherRellichEstimate::grad_over_x4));
  if (m.dimension() >= 7) {
    out.push_back(higher_rellich_report(m, u, HigherRellichEstimate::u_over_x6));
    out.push_back(higher_rellich_report(m, u, HigherRellichEstimate::grad_over_x6));
    out.push_back(higher_rellich_report(m, u, HigherRellichEstimate::hess_over_x4));
  }
  return out;
}

bool potential_coupling_feasible(double c, int dimension) {
  return c <= rellich_constant(dimension);
}

std::vector<InequalityReport> verify_suite(const Measure& m, const SuiteOptions& opts) {
  const int n = m.dimension();
  std::vector<InequalityReport> out;

  // Constant wiring, asserted exactly.
  {
    InequalityReport wiring;
    wiring.name = "constants_wiring";
    wiring.trial = "arithmetic";
    wiring.C0 = hardy_C0(n);
    wiring.C2 = wiring.C0 - 1.0;
    wiring.lhs = rellich_constant(n);
    wiring.rhs = wiring.C2 * wiring.C2;
    wiring.margin = 0.0;
    wiring.tolerance = 0.0;
    wiring.passed = wiring.lhs == wiring.rhs;
    out.push_back(wiring);
  }

  const auto trials = make_radial_suite(opts.suite_size, opts.seed);
  std::vector<RadialFn> fns;
  fns.reserve(trials.size());
  for (const auto& t : trials) fns.push_back(RadialFn::from_trial(t));

  if (n >= 3) {
    double suite_C1 = 0.0;
    for (const auto& u : fns) suite_C1 = std::max(suite_C1, hardy_minimal_C1(m, u));
    for (const auto& u : fns) out.push_back(hardy_report(m, u, suite_C1));
  }
  if (n >= 5) {
    double suite_C1 = 0.0;
    for (const auto& u : fns) suite_C1 = std::max(suite_C1, rellich_minimal_C1(m, u));
    for (const auto& u : fns) {
      out.push_back(rellich_report(m, u, suite_C1));
      for (auto& rep : rellich_eps_reports(m, u, opts.eps_list)) out.push_back(std::move(rep));
    }
    for (const auto& u : fns)
      for (auto& rep : higher_rellich_reports(m, u)) out.push_back(std::move(rep));
  }
  for (const auto& u : fns)
    for (double eps : opts.eps_list) out.push_back(interpolation_report(m, u, eps));
  for (const auto& u : fns) out.push_back(drift_bound_report(m, u));
  {
    InequalityReport cz;
    cz.name = "calderon_zygmund";
    cz.trial = "suite max";
    cz.C0 = hardy_C0(n);
    cz.C2 = cz.C0 - 1.0;
    cz.C1 = calderon_zygmund_constant(m, fns);
    cz.lhs = cz.C1;
    cz.rhs = cz.C1;
    cz.margin = 0.0;
    cz.passed = std::isfinite(cz.C1);
    out.push_back(cz);
  }
  return out;
}

}  // namespace biko
