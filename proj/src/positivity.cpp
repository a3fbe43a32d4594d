#include "biko/positivity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "biko/kernels.hpp"
#include "biko/quadrature.hpp"
#include "biko/semigroup.hpp"
#include "biko/util.hpp"

namespace biko {

namespace {

void check_box(const Box& K) {
  if (K.lo.empty() || K.lo.size() != K.hi.size())
    throw std::invalid_argument("Box: lo/hi must be non-empty and matched");
  for (std::size_t i = 0; i < K.lo.size(); ++i)
    if (!(K.lo[i] < K.hi[i])) throw std::invalid_argument("Box: lo < hi required");
  if (K.lo.size() > 3) throw std::invalid_argument("Box: dimension <= 3 supported");
}

std::vector<std::vector<double>> sample_grid(const Box& K, int per_axis) {
  const int n = K.dimension();
  std::vector<std::vector<double>> pts;
  std::vector<int> digit(n, 0);
  std::size_t total = 1;
  for (int d = 0; d < n; ++d) total *= per_axis;
  pts.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    std::vector<double> x(n);
    for (int d = 0; d < n; ++d)
      x[d] = K.lo[d] + (K.hi[d] - K.lo[d]) * digit[d] / (per_axis - 1.0);
    pts.push_back(std::move(x));
    for (int d = 0; d < n; ++d) {
      if (++digit[d] < per_axis) break;
      digit[d] = 0;
    }
  }
  return pts;
}

void require_admissible(const std::function<double(std::span<const double>)>& f, const Box& K,
                        int per_axis) {
  double max_val = 0.0;
  for (const auto& x : sample_grid(K, per_axis)) {
    const double v = f(x);
    if (v < 0.0)
      throw std::invalid_argument("positivity: datum is negative on K");
    max_val = std::max(max_val, v);
  }
  if (!(max_val > 0.0))
    throw std::invalid_argument("positivity: datum carries no positive mass on K");
}

}  // namespace

SpectralFunction project_on_box(const std::function<double(std::span<const double>)>& f,
                                const Box& K, int max_degree, int points_per_panel) {
  check_box(K);
  const int n = K.dimension();
  SpectralFunction out(n, max_degree);
  const MultiIndexSet& set = out.index_set();

  // Per-axis Gauss-Legendre panels inside K, weighted by the Gaussian
  // density; tensorized.
  const GaussLegendre& rule = gauss_legendre(points_per_panel);
  struct AxisQuad {
    std::vector<double> nodes, weights;
  };
  std::vector<AxisQuad> axes(n);
  for (int d = 0; d < n; ++d) {
    const auto breaks = linear_breaks(K.lo[d], K.hi[d], 0.25);
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
      const double mid = 0.5 * (breaks[p] + breaks[p + 1]);
      const double half = 0.5 * (breaks[p + 1] - breaks[p]);
      for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        const double xq = mid + half * rule.nodes[q];
        axes[d].nodes.push_back(xq);
        axes[d].weights.push_back(half * rule.weights[q] *
                                  std::exp(-0.5 * xq * xq) / std::sqrt(2.0 * kPi));
      }
    }
  }

  std::vector<std::size_t> digit(n, 0);
  std::size_t total = 1;
  for (int d = 0; d < n; ++d) total *= axes[d].nodes.size();
  std::vector<double> x(n);
  std::vector<double> table(static_cast<std::size_t>(n) * (max_degree + 1));
  for (std::size_t i = 0; i < total; ++i) {
    double w = 1.0;
    for (int d = 0; d < n; ++d) {
      x[d] = axes[d].nodes[digit[d]];
      w *= axes[d].weights[digit[d]];
    }
    const double fv = f(x);
    if (fv != 0.0) {
      for (int d = 0; d < n; ++d)
        hermite_orthonormal_all(max_degree, x[d],
                                std::span<double>(table.data() + d * (max_degree + 1),
                                                  max_degree + 1));
      for (std::size_t r = 0; r < set.size(); ++r) {
        double basis = 1.0;
        for (int d = 0; d < n; ++d) basis *= table[d * (max_degree + 1) + set[r][d]];
        out[r] += w * fv * basis;
      }
    }
    for (int d = 0; d < n; ++d) {
      if (++digit[d] < axes[d].nodes.size()) break;
      digit[d] = 0;
    }
  }
  return out;
}

PositivityScan positivity_scan(const std::function<double(std::span<const double>)>& f,
                               const Box& K, std::span<const double> time_grid,
                               int samples_per_axis, EvolutionPath path, int max_degree) {
  check_box(K);
  require_admissible(f, K, std::min(samples_per_axis, 101));
  if (time_grid.empty()) throw std::invalid_argument("positivity_scan: empty time grid");

  PositivityScan scan;
  scan.K = K;
  scan.datum = "chi_K * f";
  scan.time_grid.assign(time_grid.begin(), time_grid.end());

  const SpectralFunction projected = project_on_box(f, K, max_degree);
  scan.asymptotic_floor = projected.mean();

  const auto pts = sample_grid(K, samples_per_axis);
  scan.minima.resize(time_grid.size());
  scan.argmin.resize(time_grid.size());

  std::vector<double> extra;  // indicator edges for the kernel path
  if (K.dimension() == 1) extra = {K.lo[0], K.hi[0]};
  if (path == EvolutionPath::kernel && K.dimension() != 1)
    throw std::invalid_argument("positivity_scan: kernel path is 1-D");

  parallel_for(time_grid.size(), [&](std::size_t ti) {
    const double t = time_grid[ti];
    double best = std::numeric_limits<double>::infinity();
    std::vector<double> best_x = pts.front();
    if (path == EvolutionPath::spectral) {
      const auto evolved = evolve_A(projected, t).state;
      for (const auto& x : pts) {
        const double v = synthesize_at(evolved, x);
        if (v < best) {
          best = v;
          best_x = x;
        }
      }
    } else {
      for (const auto& x : pts) {
        const double v = apply_biou_by_kernel(
            [&](double y) {
              const double ya[1] = {y};
              return (y >= K.lo[0] && y <= K.hi[0]) ? f(ya) : 0.0;
            },
            t, x[0], KernelMethod::spectral_sum, max_degree, 10.0, extra);
        if (v < best) {
          best = v;
          best_x = x;
        }
      }
    }
    scan.minima[ti] = best;
    scan.argmin[ti] = best_x;
  });

  // t0: first grid time with every later minimum (inclusive) positive.
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
      scan.negative_witness = NegativeWitness{scan.time_grid[i], scan.argmin[i], scan.minima[i]};
    }
  }
  return scan;
}

std::optional<NegativeWitness> negativity_search(
    const std::function<double(std::span<const double>)>& f, const Box& support,
    std::span<const double> t_grid, std::span<const double> x_grid, int max_degree) {
  check_box(support);
  require_admissible(f, support, 101);
  if (support.dimension() != 1)
    throw std::invalid_argument("negativity_search: 1-D only");

  const SpectralFunction projected = project_on_box(f, support, max_degree);
  std::optional<NegativeWitness> witness;
  for (double t : t_grid) {
    const auto evolved = evolve_A(projected, t).state;
    for (double x : x_grid) {
      const double xs[1] = {x};
      const double v = synthesize_at(evolved, xs);
      if (v < 0.0 && (!witness || v < witness->value))
        witness = NegativeWitness{t, {x}, v};
    }
  }
  return witness;
}

std::optional<double> uniform_positivity_scan(
    const Box& K, std::span<const std::function<double(std::span<const double>)>> family,
    std::span<const double> time_grid, int samples_per_axis, int max_degree) {
  if (family.empty()) return std::nullopt;
  std::optional<double> common_t0;
  for (const auto& f : family) {
    // L^1_mu(K) normalization: scale so the projected mean is 1.
    const SpectralFunction projected = project_on_box(f, K, max_degree);
    const double mass = projected.mean();
    if (!(mass > 0.0))
      throw std::invalid_argument("uniform_positivity_scan: family member carries no mass");
    auto scaled = [&f, mass](std::span<const double> x) { return f(x) / mass; };
    const auto scan =
        positivity_scan(scaled, K, time_grid, samples_per_axis, EvolutionPath::spectral,
                        max_degree);
    if (!scan.t0) return std::nullopt;
    if (!common_t0 || *scan.t0 > *common_t0) common_t0 = *scan.t0;
  }
  return common_t0;
}

}  // namespace biko
