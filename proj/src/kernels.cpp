#include "biko/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "biko/quadrature.hpp"
#include "biko/util.hpp"

namespace biko {

namespace {

double gaussian_density(std::span<const double> y) {
  double r2 = 0.0;
  for (double v : y) r2 += v * v;
  const int n = static_cast<int>(y.size());
  return std::pow(2.0 * kPi, -0.5 * n) * std::exp(-0.5 * r2);
}

void check_pair(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.empty())
    throw std::invalid_argument("kernel: x and y must share a positive dimension");
}

}  // namespace

double mehler_kernel(double t, std::span<const double> x, std::span<const double> y) {
  check_pair(x, y);
  if (!(t > 0.0)) throw std::invalid_argument("mehler_kernel: t > 0 required");
  const int n = static_cast<int>(x.size());
  const double v = -std::expm1(-2.0 * t);  // 1 - e^{-2t}
  const double decay = std::exp(-t);
  double q = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = y[i] - decay * x[i];
    q += d * d;
  }
  return std::pow(2.0 * kPi * v, -0.5 * n) * std::exp(-q / (2.0 * v));
}

double mehler_kernel_variant_4pi(double t, std::span<const double> x,
                                 std::span<const double> y) {
  check_pair(x, y);
  if (!(t > 0.0)) throw std::invalid_argument("mehler_kernel_variant_4pi: t > 0 required");
  const int n = static_cast<int>(x.size());
  const double v = -std::expm1(-2.0 * t);
  const double decay = std::exp(-t);
  double q = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = decay * x[i] - y[i];
    q += d * d;
  }
  return std::pow(4.0 * kPi * v, -0.5 * n) * std::exp(-q / (4.0 * v));
}

std::complex<double> complex_kernel(std::complex<double> z, std::span<const double> x,
                                    std::span<const double> y) {
  check_pair(x, y);
  if (z.real() < 0.0) throw std::invalid_argument("complex_kernel: Re z >= 0 required");
  const int n = static_cast<int>(x.size());
  const std::complex<double> w = 1.0 - std::exp(-2.0 * z);
  if (std::abs(w) < 1e-14)
    throw std::domain_error("complex_kernel: singular at z in i pi Z");
  const std::complex<double> decay = std::exp(-z);
  std::complex<double> q = 0.0;
  for (int i = 0; i < n; ++i) {
    const std::complex<double> d = y[i] - decay * x[i];
    q += d * d;
  }
  return std::pow(2.0 * kPi * w, -0.5 * n) * std::exp(-q / (2.0 * w));
}

namespace {

// Graded breakpoints for [a, b] whose endpoints may host near-singular
// spikes of width ~w0: geometric offsets from both ends, ratio 1.6.
std::vector<double> graded_segment(double a, double b, double w0) {
  std::vector<double> breaks;
  breaks.push_back(a);
  const double mid = 0.5 * (a + b);
  double off = w0;
  std::vector<double> right_side;
  while (a + off < mid) {
    breaks.push_back(a + off);
    off *= 1.6;
  }
  off = w0;
  while (b - off > mid) {
    right_side.push_back(b - off);
    off *= 1.6;
  }
  breaks.push_back(mid);
  for (auto it = right_side.rbegin(); it != right_side.rend(); ++it) breaks.push_back(*it);
  breaks.push_back(b);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  return breaks;
}

struct SubordinationPass {
  double integral = 0.0;        // int_0^{s_max} e^{-s^2/4t} g(s) ds
  double last_panel_peak = 0.0; // max |g| on the outermost pi-panel
};

SubordinationPass subordination_integral(double t, double eps, double s_max, int panel_points,
                                         const std::function<double(double)>& g) {
  SubordinationPass out;
  const double w0 = std::max(eps / 2.0, 1e-7);
  double a = 0.0;
  int k = 0;
  while (a < s_max) {
    const double b = std::min((k + 1) * kPi, s_max);
    const auto breaks = graded_segment(a, b, w0);
    const bool last = b >= s_max;
    out.integral += integrate_panels(breaks, panel_points, [&](double s) {
      const double v = g(s);
      if (last) out.last_panel_peak = std::max(out.last_panel_peak, std::abs(v));
      return std::exp(-s * s / (4.0 * t)) * v;
    });
    ++k;
    a = b;
  }
  return out;
}

}  // namespace

KernelValue biou_kernel_subordination(double t, std::span<const double> x,
                                      std::span<const double> y,
                                      const SubordinationOptions& opts) {
  check_pair(x, y);
  if (!(t > 0.0)) throw std::invalid_argument("biou_kernel_subordination: t > 0 required");
  if (!(opts.epsilon > 0.0))
    throw std::invalid_argument("biou_kernel_subordination: epsilon > 0 required");
  const double s_max =
      opts.s_max > 0.0 ? opts.s_max : std::max(8.0 * std::sqrt(t), 4.0 * kPi);
  if (s_max < 8.0 * std::sqrt(t))
    throw std::invalid_argument("biou_kernel_subordination: s_max >= 8 sqrt(t) required");

  const double prefactor = std::pow(4.0 * kPi * t, -0.5);
  const auto pass_for = [&](double eps) {
    return subordination_integral(t, eps, s_max, opts.panel_points, [&](double s) {
      return 2.0 * complex_kernel(std::complex<double>(eps, s), x, y).real();
    });
  };

  const SubordinationPass full = pass_for(opts.epsilon);
  const SubordinationPass half = pass_for(opts.epsilon / 2.0);

  const double i_full = prefactor * full.integral;
  const double i_half = prefactor * half.integral;
  const double refinement_gap = std::abs(i_half - i_full);
  if (refinement_gap > opts.tolerance)
    throw std::runtime_error("biou_kernel_subordination: eps-refinements disagree beyond tolerance");

  // Gaussian tail bound with the sampled amplitude on the last panel.
  const double tail = prefactor * std::max(full.last_panel_peak, half.last_panel_peak) *
                      std::sqrt(kPi * t) * std::erfc(s_max / (2.0 * std::sqrt(t)));

  KernelValue out;
  out.value = 2.0 * i_half - i_full;  // Richardson: error O(eps^2)
  out.method = "subordination";
  out.error_estimate = refinement_gap + tail;
  out.t = t;
  out.x.assign(x.begin(), x.end());
  out.y.assign(y.begin(), y.end());
  return out;
}

KernelValue biou_kernel_spectral(double t, std::span<const double> x, std::span<const double> y,
                                 int max_degree) {
  check_pair(x, y);
  if (!(t > 0.0)) throw std::invalid_argument("biou_kernel_spectral: t > 0 required");
  const int n = static_cast<int>(x.size());
  const MultiIndexSet& set = MultiIndexSet::get(n, max_degree + 1);

  std::vector<double> tx(static_cast<std::size_t>(n) * (max_degree + 2));
  std::vector<double> ty(tx.size());
  for (int axis = 0; axis < n; ++axis) {
    hermite_orthonormal_all(max_degree + 1, x[axis],
                            std::span<double>(tx.data() + axis * (max_degree + 2), max_degree + 2));
    hermite_orthonormal_all(max_degree + 1, y[axis],
                            std::span<double>(ty.data() + axis * (max_degree + 2), max_degree + 2));
  }
  const double mu_y = gaussian_density(y);

  double sum = 0.0;
  double shell_x2 = 0.0, shell_y2 = 0.0;  // omitted-shell masses
  for (std::size_t r = 0; r < set.size(); ++r) {
    const MultiIndex& alpha = set[r];
    double bx = 1.0, by = 1.0;
    for (int axis = 0; axis < n; ++axis) {
      bx *= tx[axis * (max_degree + 2) + alpha[axis]];
      by *= ty[axis * (max_degree + 2) + alpha[axis]];
    }
    const int k = alpha.order();
    if (k <= max_degree) {
      sum += std::exp(-t * static_cast<double>(k) * k) * bx * by;
    } else {
      shell_x2 += bx * bx;
      shell_y2 += by * by;
    }
  }

  const double d1 = static_cast<double>(max_degree + 1);
  KernelValue out;
  out.value = sum * mu_y;
  out.method = "spectral_sum";
  // First omitted shell bounds the tail; factor 2 covers the geometric rest.
  out.error_estimate =
      2.0 * std::exp(-t * d1 * d1) * std::sqrt(shell_x2 * shell_y2) * mu_y;
  out.t = t;
  out.x.assign(x.begin(), x.end());
  out.y.assign(y.begin(), y.end());
  out.truncation_degree = max_degree;
  return out;
}

double subordination_scalar(int n, double t) {
  if (n < 0 || !(t > 0.0)) throw std::invalid_argument("subordination_scalar: n >= 0, t > 0");
  const double s_max = std::max(10.0 * std::sqrt(t), 4.0 * kPi);
  // cos is entire: plain pi-panels, no grading needed.
  const auto breaks = linear_breaks(0.0, s_max, kPi);
  const double integral = integrate_panels(breaks, 32, [&](double s) {
    return std::exp(-s * s / (4.0 * t)) * std::cos(n * s);
  });
  return std::pow(4.0 * kPi * t, -0.5) * 2.0 * integral;
}

double apply_biou_by_kernel(const std::function<double(double)>& f, double t, double x,
                            KernelMethod method, int max_degree, double radius,
                            std::span<const double> extra_breaks) {
  if (!(t > 0.0)) throw std::invalid_argument("apply_biou_by_kernel: t > 0 required");
  std::vector<double> breaks = linear_breaks(-radius, radius, 0.25);
  if (!extra_breaks.empty()) {
    std::vector<double> extra(extra_breaks.begin(), extra_breaks.end());
    breaks = merge_breaks({breaks, extra});
  }
  const double xs[1] = {x};
  return integrate_panels(breaks, 16, [&](double yv) {
    const double ys[1] = {yv};
    double k = 0.0;
    if (method == KernelMethod::spectral_sum) {
      k = biou_kernel_spectral(t, xs, ys, max_degree).value;
    } else {
      k = biou_kernel_subordination(t, xs, ys).value;
    }
    return k * f(yv);
  });
}

double apply_mehler(const std::function<double(double)>& f, double t, double x, bool variant_4pi,
                    double radius) {
  const auto breaks = linear_breaks(-radius, radius, 0.25);
  const double xs[1] = {x};
  return integrate_panels(breaks, 16, [&](double yv) {
    const double ys[1] = {yv};
    const double k = variant_4pi ? mehler_kernel_variant_4pi(t, xs, ys) : mehler_kernel(t, xs, ys);
    return k * f(yv);
  });
}

}  // namespace biko
