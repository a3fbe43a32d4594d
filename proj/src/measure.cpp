#include "biko/measure.hpp"

#include <cmath>
#include <stdexcept>

#include "biko/quadrature.hpp"
#include "biko/util.hpp"

namespace biko {

double radial_profile_integral(const std::function<double(double)>& phi, int dimension,
                               const std::function<double(double)>& f) {
  const auto integrand = [&](double r) {
    return f(r) * std::exp(phi(r)) * std::pow(r, dimension - 1);
  };
  // Log panels below r = 1 (integrable singularities), then decade by
  // decade outward until the contribution is negligible.
  double total = integrate_panels(log_breaks(1e-13, 1.0, 4), 32, integrand);
  double lo = 1.0;
  for (int decade = 0; decade < 16; ++decade) {
    const double hi = lo * 10.0;
    const double part = integrate_panels(log_breaks(lo, hi, 24), 32, integrand);
    total += part;
    if (std::abs(part) < 1e-14 * std::abs(total) + 1e-300) break;
    lo = hi;
  }
  return total;
}

Measure::Measure(int dimension, std::string family, RadialProfile profile,
                 std::string parameter_string)
    : dimension_(dimension),
      family_(std::move(family)),
      parameters_(std::move(parameter_string)),
      profile_(std::move(profile)) {
  if (dimension < 1) throw std::invalid_argument("Measure: dimension >= 1");
  normalization_ =
      sphere_surface(dimension_) *
      radial_profile_integral(profile_.phi, dimension_, [](double) { return 1.0; });
  if (!(normalization_ > 0.0) || !std::isfinite(normalization_))
    throw std::invalid_argument("Measure: density is not normalizable");
}

void Measure::check_origin(double r) const {
  if (profile_.singular_at_origin && r == 0.0)
    throw std::domain_error("Measure: derivative quantities are singular at the origin");
}

double Measure::radial_density(double r) const {
  return std::exp(profile_.phi(r)) / normalization_;
}

double Measure::density(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dimension_)
    throw std::invalid_argument("Measure::density: dimension mismatch");
  return radial_density(norm2(x));
}

std::vector<double> Measure::drift(std::span<const double> x) const {
  const double r = norm2(x);
  check_origin(r);
  const double g = profile_.g(r);
  std::vector<double> b(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) b[i] = g * x[i];
  return b;
}

double Measure::drift_jacobian(std::span<const double> x, int i, int j) const {
  const double r = norm2(x);
  check_origin(r);
  const double v = profile_.h(r) * x[i] * x[j];
  return i == j ? v + profile_.g(r) : v;
}

double Measure::drift_hessian(std::span<const double> x, int i, int j, int k) const {
  const double r = norm2(x);
  check_origin(r);
  double v = profile_.q(r) * x[i] * x[j] * x[k];
  if (i == j) v += profile_.h(r) * x[k];
  if (i == k) v += profile_.h(r) * x[j];
  if (j == k) v += profile_.h(r) * x[i];
  return v;
}

double Measure::laplacian_ratio_radial(double r) const {
  check_origin(r);
  const double g = profile_.g(r), h = profile_.h(r);
  // div b + |b|^2 with div b = h r^2 + N g and |b|^2 = g^2 r^2.
  return h * r * r + dimension_ * g + g * g * r * r;
}

double Measure::laplacian_ratio(std::span<const double> x) const {
  return laplacian_ratio_radial(norm2(x));
}

std::vector<double> Measure::laplacian_ratio_gradient(std::span<const double> x) const {
  const double r = norm2(x);
  check_origin(r);
  const int n = dimension_;
  const double g = profile_.g(r), h = profile_.h(r), q = profile_.q(r);
  // D_i(div b + |b|^2) = sum_j H_ijj + 2 sum_j b_j J_ij
  //                    = [q r^2 + (N+2) h] x_i + 2 g (h r^2 + g) x_i.
  const double radial = q * r * r + (n + 2) * h + 2.0 * g * (h * r * r + g);
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = radial * x[i];
  return out;
}

double Measure::potential_U_radial(double r) const {
  check_origin(r);
  const double g = profile_.g(r);
  return 0.25 * g * g * r * r - 0.5 * laplacian_ratio_radial(r);
}

double Measure::potential_U(std::span<const double> x) const {
  return potential_U_radial(norm2(x));
}

double Measure::radial_integral(const std::function<double(double)>& f) const {
  return sphere_surface(dimension_) *
         radial_profile_integral(profile_.phi, dimension_, f) / normalization_;
}

double Measure::tail_radius(double threshold) const {
  const double peak = [&] {
    double best = profile_.phi(1e-6);
    for (double r = 0.01; r <= 10.0; r *= 1.1) best = std::max(best, profile_.phi(r));
    return best;
  }();
  const double target = peak + std::log(threshold);
  double r = 1.0;
  while (profile_.phi(r) > target && r < 1e15) r *= 1.05;
  return r;
}

double compute_U(const Measure& m, std::span<const double> x) { return m.potential_U(x); }

Measure gaussian_measure(int dimension) {
  RadialProfile p;
  p.phi = [](double r) { return -0.5 * r * r; };
  p.g = [](double) { return -1.0; };
  p.h = [](double) { return 0.0; };
  p.q = [](double) { return 0.0; };
  p.singular_at_origin = false;
  return Measure(dimension, "gaussian", std::move(p));
}

namespace {

// c * r^e with the convention 0 * r^e = 0 even when r^e diverges.
double coeff_pow(double c, double r, double e) {
  return c == 0.0 ? 0.0 : c * std::pow(r, e);
}

}  // namespace

Measure power_measure(double m, int dimension) {
  if (!(m > 0.0)) throw std::invalid_argument("power_measure: m > 0 required");
  RadialProfile p;
  p.phi = [m](double r) { return -std::pow(r, m); };
  p.g = [m](double r) { return coeff_pow(-m, r, m - 2.0); };
  p.h = [m](double r) { return coeff_pow(-m * (m - 2.0), r, m - 4.0); };
  p.q = [m](double r) { return coeff_pow(-m * (m - 2.0) * (m - 4.0), r, m - 6.0); };
  p.singular_at_origin = (m < 6.0 && m != 2.0 && m != 4.0);
  return Measure(dimension, "power", std::move(p), "m=" + format_double(m));
}

namespace {

// Radial derivative combinations of log(1 + r^gamma).
struct LogTerm {
  double gamma;
  double G(double r) const { return 1.0 / (1.0 + std::pow(r, gamma)); }
  double g(double r) const { return coeff_pow(gamma, r, gamma - 2.0) * G(r); }
  double h(double r) const {
    const double Gv = G(r);
    return coeff_pow(gamma * (gamma - 2.0), r, gamma - 4.0) * Gv -
           coeff_pow(gamma * gamma, r, 2.0 * gamma - 4.0) * Gv * Gv;
  }
  double q(double r) const {
    const double Gv = G(r);
    return coeff_pow(gamma * (gamma - 2.0) * (gamma - 4.0), r, gamma - 6.0) * Gv -
           coeff_pow(3.0 * gamma * gamma * (gamma - 2.0), r, 2.0 * gamma - 6.0) * Gv * Gv +
           coeff_pow(2.0 * gamma * gamma * gamma, r, 3.0 * gamma - 6.0) * Gv * Gv * Gv;
  }
  bool singular() const { return gamma < 6.0 && gamma != 2.0 && gamma != 4.0; }
};

}  // namespace

Measure rational_measure(double alpha, double beta, int dimension) {
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw std::invalid_argument("rational_measure: alpha, beta > 0 required");
  if (!(beta > alpha + dimension))
    throw std::invalid_argument("rational_measure: beta > alpha + dimension required");
  const LogTerm ta{alpha}, tb{beta};
  RadialProfile p;
  p.phi = [alpha, beta](double r) {
    return std::log1p(std::pow(r, alpha)) - std::log1p(std::pow(r, beta));
  };
  p.g = [ta, tb](double r) { return ta.g(r) - tb.g(r); };
  p.h = [ta, tb](double r) { return ta.h(r) - tb.h(r); };
  p.q = [ta, tb](double r) { return ta.q(r) - tb.q(r); };
  p.singular_at_origin = ta.singular() || tb.singular();
  return Measure(dimension, "rational", std::move(p),
                 "alpha=" + format_double(alpha) + ",beta=" + format_double(beta));
}

Measure squared_power_measure(double c1, double c2, double m, int dimension) {
  if (!(m > 0.5)) throw std::invalid_argument("squared_power_measure: m > 1/2 required");
  if (!(c1 > 0.0) || !(c2 > 0.0))
    throw std::invalid_argument("squared_power_measure: c1, c2 > 0 required");
  RadialProfile p;
  p.phi = [c1, c2, m](double r) { return -std::pow(c1 + c2 * r * r, m); };
  p.g = [c1, c2, m](double r) {
    return -2.0 * c2 * m * std::pow(c1 + c2 * r * r, m - 1.0);
  };
  p.h = [c1, c2, m](double r) {
    return -4.0 * c2 * c2 * m * (m - 1.0) * std::pow(c1 + c2 * r * r, m - 2.0);
  };
  p.q = [c1, c2, m](double r) {
    return -8.0 * c2 * c2 * c2 * m * (m - 1.0) * (m - 2.0) * std::pow(c1 + c2 * r * r, m - 3.0);
  };
  p.singular_at_origin = false;
  return Measure(dimension, "squared_power", std::move(p),
                 "c1=" + format_double(c1) + ",c2=" + format_double(c2) +
                     ",m=" + format_double(m));
}

Measure make_measure(const MeasureSpec& spec) {
  if (spec.family == "gaussian") return gaussian_measure(spec.dimension);
  if (spec.family == "power") return power_measure(spec.m, spec.dimension);
  if (spec.family == "rational") return rational_measure(spec.alpha, spec.beta, spec.dimension);
  if (spec.family == "squared_power")
    return squared_power_measure(spec.c1, spec.c2, spec.m, spec.dimension);
  throw std::invalid_argument("make_measure: unknown family '" + spec.family + "'");
}

}  // namespace biko
