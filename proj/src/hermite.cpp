#include "biko/hermite.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace biko {

double hermite_eval(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite_eval: n >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0, cur = x;
  for (int k = 1; k < n; ++k) {
    double next = x * cur - k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double hermite_orthonormal(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite_orthonormal: n >= 0");
  if (n == 0) return 1.0;
  // Hh_{n+1} = (x Hh_n - sqrt(n) Hh_{n-1}) / sqrt(n+1)
  double prev = 1.0, cur = x;
  for (int k = 1; k < n; ++k) {
    double next = (x * cur - std::sqrt(static_cast<double>(k)) * prev) /
                  std::sqrt(static_cast<double>(k + 1));
    prev = cur;
    cur = next;
  }
  return cur;
}

void hermite_orthonormal_all(int n_max, double x, std::span<double> out) {
  if (n_max < 0 || out.size() < static_cast<std::size_t>(n_max + 1))
    throw std::invalid_argument("hermite_orthonormal_all: bad output span");
  out[0] = 1.0;
  if (n_max == 0) return;
  out[1] = x;
  for (int k = 1; k < n_max; ++k)
    out[k + 1] = (x * out[k] - std::sqrt(static_cast<double>(k)) * out[k - 1]) /
                 std::sqrt(static_cast<double>(k + 1));
}

QuadratureRule::QuadratureRule(int dimension, int nodes_per_axis, std::vector<double> axis_nodes,
                               std::vector<double> axis_weights)
    : dimension_(dimension),
      nodes_per_axis_(nodes_per_axis),
      axis_nodes_(std::move(axis_nodes)),
      axis_weights_(std::move(axis_weights)) {}

std::size_t QuadratureRule::point_count() const {
  std::size_t n = 1;
  for (int d = 0; d < dimension_; ++d) n *= axis_nodes_.size();
  return n;
}

void QuadratureRule::for_each_point(
    const std::function<void(std::span<const double>, double)>& f) const {
  const int m = nodes_per_axis_;
  std::vector<int> digit(dimension_, 0);
  std::vector<double> x(dimension_);
  const std::size_t total = point_count();
  for (std::size_t idx = 0; idx < total; ++idx) {
    double w = 1.0;
    for (int d = 0; d < dimension_; ++d) {
      x[d] = axis_nodes_[digit[d]];
      w *= axis_weights_[digit[d]];
    }
    f(x, w);
    for (int d = 0; d < dimension_; ++d) {
      if (++digit[d] < m) break;
      digit[d] = 0;
    }
  }
}

QuadratureRule quadrature_rule(int dimension, int m) {
  if (dimension < 1 || dimension > 4)
    throw std::invalid_argument("quadrature_rule: dimension must be in [1, 4]");
  if (m < 1) throw std::invalid_argument("quadrature_rule: m >= 1");
  double count = std::pow(static_cast<double>(m), dimension);
  if (count > 1e7) throw std::length_error("quadrature_rule: tensor grid exceeds 1e7 points");

  // Jacobi matrix of the probabilists' Hermite recurrence: zero diagonal,
  // off-diagonal sqrt(k).
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd sub(m > 1 ? m - 1 : 0);
  for (int k = 1; k < m; ++k) sub(k - 1) = std::sqrt(static_cast<double>(k));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("quadrature_rule: tridiagonal eigensolve failed");

  std::vector<double> nodes(m), weights(m);
  for (int i = 0; i < m; ++i) {
    nodes[i] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    weights[i] = v0 * v0;  // total weight integral is 1 (probability measure)
  }
  // Enforce exact symmetry about 0.
  for (int i = 0; i < m / 2; ++i) {
    const int j = m - 1 - i;
    const double node = 0.5 * (nodes[j] - nodes[i]);
    nodes[i] = -node;
    nodes[j] = node;
    const double w = 0.5 * (weights[i] + weights[j]);
    weights[i] = weights[j] = w;
  }
  if (m % 2 == 1) nodes[m / 2] = 0.0;

  return QuadratureRule(dimension, m, std::move(nodes), std::move(weights));
}

}  // namespace biko
