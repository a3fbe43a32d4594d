#pragma once

#include <functional>
#include <span>
#include <vector>

namespace biko {

/// Gauss-Legendre rule on [-1, 1], cached per point count.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussLegendre& gauss_legendre(int points);

/// Integrate f over consecutive intervals [breaks[i], breaks[i+1]] with a
/// fixed Gauss-Legendre rule per panel.
double integrate_panels(std::span<const double> breaks, int points_per_panel,
                        const std::function<double(double)>& f);

/// Breakpoints 10^k-spaced between a and b (a > 0), panels_per_decade each.
std::vector<double> log_breaks(double a, double b, int panels_per_decade);

/// Uniform breakpoints between a and b with panel width <= max_width.
std::vector<double> linear_breaks(double a, double b, double max_width);

/// Merge + sort + dedup breakpoint lists.
std::vector<double> merge_breaks(std::initializer_list<std::vector<double>> lists);

}  // namespace biko
