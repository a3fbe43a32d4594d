#include "biko/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "biko/util.hpp"

namespace biko {

namespace {

GaussLegendre compute_gauss_legendre(int n) {
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton on P_n with the usual Chebyshev-like initial guess.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace

const GaussLegendre& gauss_legendre(int points) {
  if (points < 1) throw std::invalid_argument("gauss_legendre: points >= 1");
  static std::mutex mu;
  static std::map<int, GaussLegendre> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(points);
  if (it == cache.end()) it = cache.emplace(points, compute_gauss_legendre(points)).first;
  return it->second;
}

double integrate_panels(std::span<const double> breaks, int points_per_panel,
                        const std::function<double(double)>& f) {
  if (breaks.size() < 2) return 0.0;
  const GaussLegendre& rule = gauss_legendre(points_per_panel);
  double total = 0.0;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double a = breaks[p], b = breaks[p + 1];
    if (!(b > a)) continue;
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q)
      acc += rule.weights[q] * f(mid + half * rule.nodes[q]);
    total += half * acc;
  }
  return total;
}

std::vector<double> log_breaks(double a, double b, int panels_per_decade) {
  if (!(a > 0.0) || !(b > a)) throw std::invalid_argument("log_breaks: need 0 < a < b");
  std::vector<double> out;
  const double la = std::log10(a), lb = std::log10(b);
  const int panels = std::max(1, static_cast<int>(std::ceil((lb - la) * panels_per_decade)));
  out.reserve(panels + 1);
  for (int i = 0; i <= panels; ++i)
    out.push_back(std::pow(10.0, la + (lb - la) * i / panels));
  out.front() = a;
  out.back() = b;
  return out;
}

std::vector<double> linear_breaks(double a, double b, double max_width) {
  if (!(b > a) || !(max_width > 0.0)) throw std::invalid_argument("linear_breaks");
  const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / max_width)));
  std::vector<double> out;
  out.reserve(panels + 1);
  for (int i = 0; i <= panels; ++i) out.push_back(a + (b - a) * i / panels);
  return out;
}

std::vector<double> merge_breaks(std::initializer_list<std::vector<double>> lists) {
  std::vector<double> out;
  for (const auto& l : lists) out.insert(out.end(), l.begin(), l.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](double x, double y) { return std::abs(x - y) < 1e-15 * (1.0 + std::abs(x)); }),
            out.end());
  return out;
}

}  // namespace biko
