#pragma once

#include <functional>
#include <span>
#include <vector>

#include "biko/hermite.hpp"
#include "biko/multi_index.hpp"

namespace biko {

/// A function on R^N stored by its coefficients against the orthonormal
/// Hermite basis Hh_alpha = He_alpha / sqrt(alpha!) of L^2 under the
/// standard Gaussian. Coefficients are dense over the graded-lex index set
/// |alpha| <= max_degree, so the squared L^2_mu norm is the plain dot
/// product of the coefficient vector with itself.
class SpectralFunction {
 public:
  SpectralFunction(int dimension, int max_degree);

  int dimension() const { return set_->dimension(); }
  int max_degree() const { return set_->max_degree(); }
  const MultiIndexSet& index_set() const { return *set_; }
  std::size_t size() const { return coeffs_.size(); }

  double operator[](std::size_t rank) const { return coeffs_[rank]; }
  double& operator[](std::size_t rank) { return coeffs_[rank]; }
  double coefficient(const MultiIndex& alpha) const;
  void set_coefficient(const MultiIndex& alpha, double value);

  double norm() const;
  /// Mean against the Gaussian measure (the degree-zero coefficient).
  double mean() const { return coeffs_[0]; }

  /// Unit coefficient on Hh_alpha; max_degree defaults to |alpha|.
  static SpectralFunction basis(int dimension, const MultiIndex& alpha, int max_degree = -1);
  static SpectralFunction constant(int dimension, double value);

  /// d/dx_k: Hh_alpha -> sqrt(alpha_k) Hh_{alpha - e_k}; exact, degree drops by one.
  SpectralFunction derivative(int k) const;
  /// x_k * f: Hh_alpha -> sqrt(alpha_k+1) Hh_{alpha+e_k} + sqrt(alpha_k) Hh_{alpha-e_k}.
  SpectralFunction multiply_by_coordinate(int k) const;
  /// Copy with a different max_degree (coefficients outside are dropped/zero).
  SpectralFunction resized(int max_degree) const;

  SpectralFunction& operator+=(const SpectralFunction& o);
  SpectralFunction& operator*=(double s);

 private:
  const MultiIndexSet* set_;
  std::vector<double> coeffs_;
};

/// Coefficients of f by tensor Gauss-Hermite quadrature. Requires
/// rule.nodes_per_axis >= max_degree + 1 so the products f * Hh_alpha are
/// integrated exactly for polynomial f up to max_degree.
SpectralFunction project(const std::function<double(std::span<const double>)>& f, int dimension,
                         int max_degree, const QuadratureRule& rule);

double synthesize_at(const SpectralFunction& s, std::span<const double> x);
std::vector<double> synthesize(const SpectralFunction& s,
                               std::span<const std::vector<double>> points);

/// Weighted inner product <f, g>_mu = sum of coefficient products.
double inner_product_mu(const SpectralFunction& a, const SpectralFunction& b);

}  // namespace biko
