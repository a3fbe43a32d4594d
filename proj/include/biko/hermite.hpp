#pragma once

#include <functional>
#include <span>
#include <vector>

namespace biko {

/// Probabilists' Hermite polynomial He_n(x) via the three-term recurrence
/// He_{n+1} = x He_n - n He_{n-1}, He_0 = 1, He_1 = x.
double hermite_eval(int n, double x);

/// Orthonormal basis value Hh_n(x) = He_n(x) / sqrt(n!), evaluated with the
/// normalized recurrence (stable up to high degree).
double hermite_orthonormal(int n, double x);

/// Fills out[0..n_max] with Hh_0(x)..Hh_{n_max}(x).
void hermite_orthonormal_all(int n_max, double x, std::span<double> out);

/// Tensor Gauss-Hermite rule for the standard Gaussian probability weight
/// (2*pi)^{-1/2} e^{-x^2/2} per axis. Nodes/weights are shared across axes.
class QuadratureRule {
 public:
  QuadratureRule(int dimension, int nodes_per_axis, std::vector<double> axis_nodes,
                 std::vector<double> axis_weights);

  int dimension() const { return dimension_; }
  int nodes_per_axis() const { return nodes_per_axis_; }
  const std::vector<double>& axis_nodes() const { return axis_nodes_; }
  const std::vector<double>& axis_weights() const { return axis_weights_; }
  std::size_t point_count() const;

  /// Visits every tensor point: f(point, weight).
  void for_each_point(const std::function<void(std::span<const double>, double)>& f) const;

 private:
  int dimension_;
  int nodes_per_axis_;
  std::vector<double> axis_nodes_;
  std::vector<double> axis_weights_;
};

/// Gauss-Hermite nodes/weights by Golub-Welsch (symmetric tridiagonal
/// eigenproblem), nodes symmetrized about 0. Caps: dimension <= 4 and
/// m^dimension <= 1e7 (tensor-grid blowup guard).
QuadratureRule quadrature_rule(int dimension, int m);

}  // namespace biko
