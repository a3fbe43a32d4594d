#include "biko/hypotheses.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "biko/util.hpp"

namespace biko {

namespace {

std::vector<double> log_radii(double a, double b, int per_decade) {
  std::vector<double> out;
  const double la = std::log10(a), lb = std::log10(b);
  const int steps = std::max(2, static_cast<int>(std::ceil((lb - la) * per_decade)));
  out.reserve(steps + 1);
  for (int i = 0; i <= steps; ++i) out.push_back(std::pow(10.0, la + (lb - la) * i / steps));
  return out;
}

std::vector<std::vector<double>> sample_directions(int dimension, int random_count,
                                                   std::uint64_t seed) {
  std::vector<std::vector<double>> dirs;
  std::vector<double> axis(dimension, 0.0);
  axis[0] = 1.0;
  dirs.push_back(axis);
  if (dimension > 1) {
    std::vector<double> diag(dimension, 1.0 / std::sqrt(static_cast<double>(dimension)));
    dirs.push_back(diag);
  }
  Rng rng(seed);
  for (int k = 0; k < random_count; ++k) {
    std::vector<double> d(dimension);
    double n = 0.0;
    do {
      for (auto& v : d) v = rng.normal();
      n = norm2(d);
    } while (n < 1e-8);
    for (auto& v : d) v /= n;
    dirs.push_back(std::move(d));
  }
  return dirs;
}

std::string grid_spec_string(double a, double b, int per_decade) {
  return "log radii [" + format_double(a) + ", " + format_double(b) + "], " +
         std::to_string(per_decade) + "/decade";
}

}  // namespace

HypothesisEntry check_H1(const Measure& m, const AuditGrid& grid) {
  HypothesisEntry e;
  e.name = "H1";
  e.grid_spec = grid_spec_string(grid.r_min, grid.r_max, grid.per_decade);
  // Density bounded below on compacts: scan [r_min, 10].
  double min_density = std::numeric_limits<double>::infinity();
  double witness_r = grid.r_min;
  for (double r : log_radii(grid.r_min, 10.0, grid.per_decade)) {
    const double d = m.radial_density(r);
    if (d < min_density) {
      min_density = d;
      witness_r = r;
    }
  }
  // Local integrability of the drift: |b| must grow no faster than r^{-1}
  // toward the origin. Measured as the log-log slope across the two
  // smallest sampled decades.
  const double r0 = grid.r_min, r1 = grid.r_min * 100.0;
  const double b0 = std::abs(m.g(r0)) * r0, b1 = std::abs(m.g(r1)) * r1;
  double slope = 0.0;
  if (b0 > 0.0 && b1 > 0.0) slope = (std::log(b1) - std::log(b0)) / (std::log(r1) - std::log(r0));
  const bool density_ok = min_density > 0.0;
  const bool drift_ok = (b0 == 0.0) || slope > -1.0 + 1e-9;
  e.passed = density_ok && drift_ok;
  e.measured_bound = slope;
  if (!e.passed) {
    std::vector<double> w(m.dimension(), 0.0);
    w[0] = density_ok ? r0 : witness_r;
    e.witness = w;
  }
  return e;
}

std::vector<HypothesisEntry> check_H2(const Measure& m, double R0, double R_far,
                                      int per_decade) {
  if (!(R0 > 0.0) || !(R0 < 1.0))
    throw std::invalid_argument("check_H2: requires 0 < R0 < 1 (the log envelope degenerates at |x| = 1)");
  if (!(R_far > 1.0)) throw std::invalid_argument("check_H2: R_far > 1 required");

  std::vector<HypothesisEntry> out;

  // (ii): |x|^2 U <= 1/(4 log^2 |x|) on B_R0 \ {0}.
  {
    HypothesisEntry e;
    e.name = "H2(ii)";
    e.grid_spec = grid_spec_string(1e-6, R0, per_decade);
    double worst_ratio = -std::numeric_limits<double>::infinity();
    double worst_r = 1e-6;
    for (double r : log_radii(1e-6, R0, per_decade)) {
      const double lhs = r * r * m.potential_U_radial(r);
      const double envelope = 0.25 / (std::log(r) * std::log(r));
      const double ratio = lhs / envelope;  // envelope > 0 on (0,1)
      if (ratio > worst_ratio) {
        worst_ratio = ratio;
        worst_r = r;
      }
    }
    e.measured_bound = worst_ratio;
    e.passed = worst_ratio <= 1.0 + 1e-9;
    if (!e.passed) {
      std::vector<double> w(m.dimension(), 0.0);
      w[0] = worst_r;
      e.witness = w;
    }
    out.push_back(std::move(e));
  }

  // (iii): U bounded above outside B_R. On a finite grid the certificate is
  // a trend check: the sup must not be driven by the outermost decade.
  {
    HypothesisEntry e;
    e.name = "H2(iii)";
    e.grid_spec = grid_spec_string(1.0, R_far, per_decade);
    const auto radii = log_radii(1.0, R_far, per_decade);
    double sup = -std::numeric_limits<double>::infinity();
    for (double r : radii) sup = std::max(sup, m.potential_U_radial(r));
    // Linear fit of U against log r over the outermost decade.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (double r : radii) {
      if (r < R_far / 10.0) continue;
      const double x = std::log(r), y = m.potential_U_radial(r);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++count;
    }
    const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    e.measured_bound = sup;
    e.passed = slope <= 1e-6 * std::max(1.0, std::abs(sup));
    if (!e.passed) {
      std::vector<double> w(m.dimension(), 0.0);
      w[0] = R_far;
      e.witness = w;
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<HypothesisEntry> check_H3(const Measure& m, std::span<const double> eps_list,
                                      const AuditGrid& grid) {
  if (eps_list.empty()) throw std::invalid_argument("check_H3: eps_list must be non-empty");
  for (double e : eps_list)
    if (!(e > 0.0)) throw std::invalid_argument("check_H3: eps values must be positive");

  const int n = m.dimension();
  const auto radii = log_radii(grid.r_min, grid.r_max, grid.per_decade);
  const auto dirs = sample_directions(n, grid.random_directions, grid.seed);

  struct Sample {
    double r;
    double max_jac;
    double max_hess;
    double drift_norm;
    std::vector<double> x;
  };
  std::vector<Sample> samples;
  samples.reserve(radii.size() * dirs.size());
  std::vector<double> x(n);
  for (double r : radii) {
    for (const auto& u : dirs) {
      for (int i = 0; i < n; ++i) x[i] = r * u[i];
      Sample s;
      s.r = r;
      s.x = x;
      s.drift_norm = std::abs(m.g(r)) * r;
      s.max_jac = 0.0;
      s.max_hess = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          s.max_jac = std::max(s.max_jac, std::abs(m.drift_jacobian(x, i, j)));
          for (int k = 0; k < n; ++k)
            s.max_hess = std::max(s.max_hess, std::abs(m.drift_hessian(x, i, j, k)));
        }
      samples.push_back(std::move(s));
    }
  }

  auto run_clause = [&](const std::string& name, bool hessian, double power) {
    HypothesisEntry e;
    e.name = name;
    e.grid_spec = grid_spec_string(grid.r_min, grid.r_max, grid.per_decade) + ", " +
                  std::to_string(dirs.size()) + " directions";
    double worst_c = 0.0;
    bool finite = true;
    std::optional<std::vector<double>> witness;
    for (double eps : eps_list) {
      double c_eps = 0.0;
      for (const auto& s : samples) {
        const double bound_lhs = hessian ? s.max_hess : s.max_jac;
        const double slack = bound_lhs - eps / std::pow(s.r, power);
        if (slack <= 0.0) continue;
        if (s.drift_norm <= 0.0) {
          finite = false;
          witness = s.x;
          break;
        }
        c_eps = std::max(c_eps, slack / s.drift_norm);
      }
      if (!finite) break;
      worst_c = std::max(worst_c, c_eps);
    }
    e.passed = finite && std::isfinite(worst_c);
    e.measured_bound = worst_c;
    if (!e.passed) e.witness = witness;
    return e;
  };

  std::vector<HypothesisEntry> out;
  out.push_back(run_clause("H3(i)", false, 2.0));
  out.push_back(run_clause("H3(ii)", true, 3.0));
  return out;
}

HypothesisReport audit_measure(const Measure& m) {
  HypothesisReport report;
  AuditGrid grid;
  report.entries.push_back(check_H1(m, grid));
  for (auto& e : check_H2(m, 0.5, grid.r_max, grid.per_decade)) report.entries.push_back(std::move(e));
  const double eps_list[] = {1.0, 0.1, 0.01};
  for (auto& e : check_H3(m, eps_list, grid)) report.entries.push_back(std::move(e));
  return report;
}

}  // namespace biko
