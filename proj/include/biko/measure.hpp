#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace biko {

/// Radial description of a density mu(x) = exp(phi(|x|)) / Z. The profile
/// supplies phi and the combinations of its derivatives that stay finite
/// where the raw ratios would be 0/0:
///   g(r) = phi'(r) / r
///   h(r) = (phi''(r) - phi'(r)/r) / r^2
///   q(r) = (phi'''(r) - 3 h(r) r) / r^3
/// For x != 0 the drift and its derivatives follow from these alone:
///   b_i            = g x_i
///   D_i b_j        = h x_i x_j + g delta_ij
///   D_ij b_k       = q x_i x_j x_k + h (delta_ij x_k + delta_ik x_j + delta_jk x_i)
///   div b          = h r^2 + N g
struct RadialProfile {
  std::function<double(double)> phi;
  std::function<double(double)> g;
  std::function<double(double)> h;
  std::function<double(double)> q;
  bool singular_at_origin = false;
};

/// Probability measure descriptor: density, drift b = grad(mu)/mu,
/// Laplacian ratio, drift Jacobian/Hessian and the Schrodinger potential
/// U = |b|^2/4 - (Laplacian mu / mu)/2. Immutable after construction; the
/// normalization constant is fixed by radial quadrature at build time.
class Measure {
 public:
  Measure(int dimension, std::string family, RadialProfile profile,
          std::string parameter_string = "");

  int dimension() const { return dimension_; }
  const std::string& family() const { return family_; }
  const std::string& parameters() const { return parameters_; }
  bool radial_profile() const { return true; }
  bool singular_at_origin() const { return profile_.singular_at_origin; }

  /// Normalization Z with density(x) = exp(phi(|x|)) / Z.
  double normalization() const { return normalization_; }

  double radial_density(double r) const;
  double density(std::span<const double> x) const;

  /// phi and radial derivatives (phi1 = phi', etc).
  double phi(double r) const { return profile_.phi(r); }
  double phi1(double r) const { return profile_.g(r) * r; }
  double phi2(double r) const { return profile_.h(r) * r * r + profile_.g(r); }
  double phi3(double r) const {
    return profile_.q(r) * r * r * r + 3.0 * profile_.h(r) * r;
  }
  double g(double r) const { return profile_.g(r); }
  double h(double r) const { return profile_.h(r); }
  double q(double r) const { return profile_.q(r); }

  std::vector<double> drift(std::span<const double> x) const;
  double drift_jacobian(std::span<const double> x, int i, int j) const;
  double drift_hessian(std::span<const double> x, int i, int j, int k) const;
  double laplacian_ratio(std::span<const double> x) const;
  /// D_i(laplacian_ratio) assembled from the Jacobian/Hessian identities.
  std::vector<double> laplacian_ratio_gradient(std::span<const double> x) const;

  double potential_U(std::span<const double> x) const;
  double potential_U_radial(double r) const;
  double laplacian_ratio_radial(double r) const;

  /// Integral of f(r) against the measure (radial integrand), decade-adaptive.
  double radial_integral(const std::function<double(double)>& f) const;
  /// Smallest radius with radial_density(r) <= threshold * max density.
  double tail_radius(double threshold) const;

 private:
  void check_origin(double r) const;

  int dimension_;
  std::string family_;
  std::string parameters_;
  RadialProfile profile_;
  double normalization_;
};

/// Registered families.
Measure gaussian_measure(int dimension);
Measure power_measure(double m, int dimension);
/// Requires beta > alpha + dimension (integrability of the tail).
Measure rational_measure(double alpha, double beta, int dimension);
/// Requires m > 1/2, c1, c2 > 0.
Measure squared_power_measure(double c1, double c2, double m, int dimension);

struct MeasureSpec {
  std::string family;
  int dimension = 1;
  double m = 4.0;
  double alpha = 2.0;
  double beta = 8.0;
  double c1 = 1.0;
  double c2 = 1.0;
};
Measure make_measure(const MeasureSpec& spec);

/// U(x) = |b(x)|^2/4 - (Laplacian mu / mu)(x)/2.
double compute_U(const Measure& m, std::span<const double> x);

/// Raw (unnormalized) radial integral of f(r) e^{phi(r)} r^{N-1}, decade
/// adaptive from r_min outward; used for normalization and by the audits.
double radial_profile_integral(const std::function<double(double)>& phi, int dimension,
                               const std::function<double(double)>& f);

}  // namespace biko
