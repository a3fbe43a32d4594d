#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "biko/spectral.hpp"

namespace biko {

/// Axis-aligned box (the compact sets K of the scans).
struct Box {
  std::vector<double> lo, hi;
  int dimension() const { return static_cast<int>(lo.size()); }
  static Box interval(double a, double b) { return Box{{a}, {b}}; }
};

struct NegativeWitness {
  double t = 0.0;
  std::vector<double> x;
  double value = 0.0;
};

/// Time-indexed minima of the evolved indicator datum over K, the first
/// grid time after which every sampled minimum stays positive, and the
/// mass floor the evolution converges to.
struct PositivityScan {
  Box K;
  std::string datum;
  std::vector<double> time_grid;
  std::vector<double> minima;
  std::vector<std::vector<double>> argmin;
  std::optional<double> t0;
  double asymptotic_floor = 0.0;  // int chi_K f dmu
  std::optional<NegativeWitness> negative_witness;
};

enum class EvolutionPath { spectral, kernel };

/// Projection of chi_K * f on the Hermite basis by panel quadrature over K
/// (the quadrature never crosses the indicator edges).
SpectralFunction project_on_box(const std::function<double(std::span<const double>)>& f,
                                const Box& K, int max_degree, int points_per_panel = 32);

/// Evolves chi_K f under e^{-tA} and records minima over a uniform sample
/// grid of K. Rejects data that are negative somewhere on K or carry no
/// positive mass. The kernel path re-applies k(t,x,.) by quadrature instead
/// of flowing coefficients (indicator-robust alternative).
PositivityScan positivity_scan(const std::function<double(std::span<const double>)>& f,
                               const Box& K, std::span<const double> time_grid,
                               int samples_per_axis = 201,
                               EvolutionPath path = EvolutionPath::spectral,
                               int max_degree = 40);

/// Scans e^{-tA} f over small times and a wide spatial window; returns the
/// most negative sample found, if any. A finding, not a failed contract.
std::optional<NegativeWitness> negativity_search(
    const std::function<double(std::span<const double>)>& f, const Box& support,
    std::span<const double> t_grid, std::span<const double> x_grid, int max_degree = 40);

/// Max over the family of the individual thresholds t0 (grid-valued); the
/// family is L^1_mu(K)-normalized before scanning. Empty family -> nullopt.
/// The uniform variant is meaningful here because the generator's spectral
/// gap is explicit (gap 1), so the zero eigenvalue is simple by construction.
std::optional<double> uniform_positivity_scan(
    const Box& K, std::span<const std::function<double(std::span<const double>)>> family,
    std::span<const double> time_grid, int samples_per_axis = 201, int max_degree = 40);

}  // namespace biko
