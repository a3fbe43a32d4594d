#pragma once

#include <functional>
#include <span>
#include <vector>

#include "biko/measure.hpp"
#include "biko/positivity.hpp"

namespace biko {

/// Flux-form discretization of L on a uniform 1-D grid over [-R, R] with
/// zero-flux boundaries:
///   (L_h u)_i = [mu_{i+1/2}(u_{i+1}-u_i) - mu_{i-1/2}(u_i-u_{i-1})] / (mu_i h^2).
/// Symmetric in the mu-weighted inner product by construction and kills
/// constants exactly.
class DiscreteOperator {
 public:
  DiscreteOperator(const Measure& m, double R, double h);

  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& weights() const { return mu_; }
  double h() const { return h_; }
  double R() const { return R_; }
  std::size_t size() const { return grid_.size(); }
  const std::string& family() const { return family_; }

  std::vector<double> apply(std::span<const double> u) const;
  /// mu-weighted inner product sum_i mu_i h u_i v_i.
  double inner(std::span<const double> u, std::span<const double> v) const;
  /// Discrete mean sum_i mu_i h u_i (mass of the grid measure ~ 1).
  double mean(std::span<const double> u) const;

  /// Symmetrized tridiagonal of -L_h (for the eigensolver).
  void symmetrized_tridiagonal(std::vector<double>& diag, std::vector<double>& off) const;

 private:
  std::vector<double> grid_;
  std::vector<double> mu_;        // normalized density at nodes
  std::vector<double> mu_half_;   // midpoints, mu_half_[i] between i and i+1
  double h_ = 0.0;
  double R_ = 0.0;
  std::string family_;
};

DiscreteOperator build_discrete_L(const Measure& m, double R, double h);

struct DiscreteSpectrum {
  std::vector<double> eigenvalues;                // of -L_h, ascending
  std::vector<std::vector<double>> eigenvectors;  // mu-orthonormal
};

/// k smallest eigenpairs of -L_h (k >= 2).
DiscreteSpectrum spectrum(const DiscreteOperator& op, int k);

/// Full eigendecomposition once, then e^{-t L_h^2} by coefficient damping.
class DiscreteEvolver {
 public:
  explicit DiscreteEvolver(const DiscreteOperator& op);
  std::vector<double> evolve_A(std::span<const double> f, double t) const;
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }
  const DiscreteOperator& op() const { return *op_; }

 private:
  const DiscreteOperator* op_;
  std::vector<double> eigenvalues_;
  std::vector<double> vectors_;  // column-major symmetrized eigenvectors
};

/// Discrete analogue of positivity_scan for fast-decay registered measures
/// (gaussian, power with m >= 2, squared_power).
PositivityScan general_positivity_scan(const Measure& m,
                                       const std::function<double(double)>& f, const Box& K,
                                       std::span<const double> time_grid, double R, double h);

}  // namespace biko
