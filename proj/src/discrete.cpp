#include "biko/discrete.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace biko {

DiscreteOperator::DiscreteOperator(const Measure& m, double R, double h)
    : h_(h), R_(R), family_(m.family()) {
  if (m.dimension() != 1)
    throw std::invalid_argument("DiscreteOperator: 1-D measures only");
  if (!(h > 0.0) || h > R / 100.0)
    throw std::invalid_argument("DiscreteOperator: resolution violation (need h <= R/100)");
  double peak = 0.0;
  for (double r = 0.0; r <= R; r += R / 512.0) peak = std::max(peak, m.radial_density(r));
  if (!(m.radial_density(R) < 1e-12 * peak))
    throw std::invalid_argument(
        "DiscreteOperator: extent violation (need mu(R) < 1e-12 * max mu)");

  const int half = static_cast<int>(std::round(R / h));
  const int count = 2 * half + 1;
  grid_.resize(count);
  mu_.resize(count);
  for (int i = 0; i < count; ++i) {
    grid_[i] = (i - half) * h;
    mu_[i] = m.radial_density(std::abs(grid_[i]));
  }
  mu_half_.resize(count - 1);
  for (int i = 0; i + 1 < count; ++i)
    mu_half_[i] = m.radial_density(std::abs(0.5 * (grid_[i] + grid_[i + 1])));
}

std::vector<double> DiscreteOperator::apply(std::span<const double> u) const {
  if (u.size() != grid_.size()) throw std::invalid_argument("DiscreteOperator::apply: size");
  const std::size_t n = grid_.size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double flux_right = i + 1 < n ? mu_half_[i] * (u[i + 1] - u[i]) : 0.0;
    const double flux_left = i > 0 ? mu_half_[i - 1] * (u[i] - u[i - 1]) : 0.0;
    out[i] = (flux_right - flux_left) / (mu_[i] * h_ * h_);
  }
  return out;
}

double DiscreteOperator::inner(std::span<const double> u, std::span<const double> v) const {
  double s = 0.0;
  for (std::size_t i = 0; i < grid_.size(); ++i) s += mu_[i] * h_ * u[i] * v[i];
  return s;
}

double DiscreteOperator::mean(std::span<const double> u) const {
  double s = 0.0;
  for (std::size_t i = 0; i < grid_.size(); ++i) s += mu_[i] * h_ * u[i];
  return s;
}

void DiscreteOperator::symmetrized_tridiagonal(std::vector<double>& diag,
                                               std::vector<double>& off) const {
  const std::size_t n = grid_.size();
  diag.assign(n, 0.0);
  off.assign(n - 1, 0.0);
  // -L_h conjugated by D^{1/2}, D = diag(mu): positive semidefinite
  // tridiagonal with the same spectrum.
  for (std::size_t i = 0; i < n; ++i) {
    double d = 0.0;
    if (i + 1 < n) d += mu_half_[i];
    if (i > 0) d += mu_half_[i - 1];
    diag[i] = d / (mu_[i] * h_ * h_);
  }
  for (std::size_t i = 0; i + 1 < n; ++i)
    off[i] = -mu_half_[i] / (std::sqrt(mu_[i] * mu_[i + 1]) * h_ * h_);
}

DiscreteOperator build_discrete_L(const Measure& m, double R, double h) {
  return DiscreteOperator(m, R, h);
}

namespace {

struct Decomposition {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  // symmetrized basis
};

Decomposition decompose(const DiscreteOperator& op) {
  std::vector<double> diag, off;
  op.symmetrized_tridiagonal(diag, off);
  Eigen::Map<const Eigen::VectorXd> d(diag.data(), diag.size());
  Eigen::Map<const Eigen::VectorXd> o(off.data(), off.size());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(d, o);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("discrete spectrum: eigensolver failed");
  return Decomposition{solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace

DiscreteSpectrum spectrum(const DiscreteOperator& op, int k) {
  if (k < 2) throw std::invalid_argument("spectrum: k >= 2 required");
  const auto dec = decompose(op);
  const std::size_t n = op.size();
  const int kk = std::min<int>(k, static_cast<int>(n));
  DiscreteSpectrum out;
  out.eigenvalues.assign(dec.values.data(), dec.values.data() + kk);
  out.eigenvectors.resize(kk);
  const auto& mu = op.weights();
  for (int j = 0; j < kk; ++j) {
    out.eigenvectors[j].resize(n);
    for (std::size_t i = 0; i < n; ++i)
      out.eigenvectors[j][i] = dec.vectors(i, j) / std::sqrt(mu[i] * op.h());
  }
  return out;
}

DiscreteEvolver::DiscreteEvolver(const DiscreteOperator& op) : op_(&op) {
  const auto dec = decompose(op);
  eigenvalues_.assign(dec.values.data(), dec.values.data() + dec.values.size());
  vectors_.assign(dec.vectors.data(), dec.vectors.data() + dec.vectors.size());
}

std::vector<double> DiscreteEvolver::evolve_A(std::span<const double> f, double t) const {
  if (t < 0.0) throw std::invalid_argument("DiscreteEvolver::evolve_A: negative time");
  const std::size_t n = op_->size();
  if (f.size() != n) throw std::invalid_argument("DiscreteEvolver::evolve_A: size");
  const auto& mu = op_->weights();
  Eigen::Map<const Eigen::MatrixXd> Q(vectors_.data(), n, n);
  Eigen::VectorXd v(n);
  for (std::size_t i = 0; i < n; ++i) v(i) = std::sqrt(mu[i]) * f[i];
  Eigen::VectorXd coeff = Q.transpose() * v;
  for (std::size_t j = 0; j < n; ++j) {
    const double lam = eigenvalues_[j];
    coeff(j) *= std::exp(-lam * lam * t);
  }
  Eigen::VectorXd w = Q * coeff;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = w(i) / std::sqrt(mu[i]);
  return out;
}

PositivityScan general_positivity_scan(const Measure& m,
                                       const std::function<double(double)>& f, const Box& K,
                                       std::span<const double> time_grid, double R, double h) {
  if (K.dimension() != 1) throw std::invalid_argument("general_positivity_scan: 1-D only");
  // For the power family, g(1) = -m, so g(1) <= -2 encodes m >= 2.
  const bool admissible = m.family() == "gaussian" || m.family() == "squared_power" ||
                          (m.family() == "power" && m.g(1.0) <= -2.0 + 1e-12);
  if (!admissible)
    throw std::invalid_argument(
        "general_positivity_scan: measure must decay like exp(-c |x|^a), a > 1 "
        "(gaussian, power m >= 2 or squared_power)");

  const DiscreteOperator op = build_discrete_L(m, R, h);
  const DiscreteEvolver evolver(op);
  const auto& grid = op.grid();
  const std::size_t n = grid.size();

  std::vector<double> datum(n, 0.0);
  double max_val = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (grid[i] >= K.lo[0] && grid[i] <= K.hi[0]) {
      datum[i] = f(grid[i]);
      if (datum[i] < 0.0)
        throw std::invalid_argument("general_positivity_scan: datum negative on K");
      max_val = std::max(max_val, datum[i]);
    }
  }
  if (!(max_val > 0.0))
    throw std::invalid_argument("general_positivity_scan: datum carries no positive mass");

  PositivityScan scan;
  scan.K = K;
  scan.datum = "chi_K * f (discrete)";
  scan.time_grid.assign(time_grid.begin(), time_grid.end());
  scan.asymptotic_floor = op.mean(datum);
  scan.minima.resize(time_grid.size());
  scan.argmin.resize(time_grid.size());

  for (std::size_t ti = 0; ti < time_grid.size(); ++ti) {
    const auto evolved = evolver.evolve_A(datum, time_grid[ti]);
    double best = std::numeric_limits<double>::infinity();
    double best_x = grid.front();
    for (std::size_t i = 0; i < n; ++i) {
      if (grid[i] < K.lo[0] || grid[i] > K.hi[0]) continue;
      if (evolved[i] < best) {
        best = evolved[i];
        best_x = grid[i];
      }
    }
    scan.minima[ti] = best;
    scan.argmin[ti] = {best_x};
  }

  std::size_t first_all_positive = scan.minima.size();
  for (std::size_t i = scan.minima.size(); i-- > 0;) {
    if (scan.minima[i] > 0.0)
      first_all_positive = i;
    else
      break;
  }
  if (first_all_positive < scan.minima.size())
    scan.t0 = scan.time_grid[first_all_positive];
  for (std::size_t i = 0; i < scan.minima.size(); ++i) {
    if (scan.minima[i] < 0.0 &&
        (!scan.negative_witness || scan.minima[i] < scan.negative_witness->value)) {
      scan.negative_witness =
          NegativeWitness{scan.time_grid[i], scan.argmin[i], scan.minima[i]};
    }
  }
  return scan;
}

}  // namespace biko
