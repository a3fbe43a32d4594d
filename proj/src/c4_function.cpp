#include "biko/c4_function.hpp"

#include <cmath>
#include <stdexcept>

#include "biko/util.hpp"

namespace biko {

SpectralC4::SpectralC4(SpectralFunction f)
    : f_(std::move(f)),
      lap_(f_.dimension(), std::max(0, f_.max_degree() - 2)),
      bilap_(f_.dimension(), std::max(0, f_.max_degree() - 4)) {
  const int n = f_.dimension();
  grad_.reserve(n);
  for (int i = 0; i < n; ++i) grad_.push_back(f_.derivative(i));
  hess_.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) hess_.push_back(grad_[i].derivative(j));
  for (int i = 0; i < n; ++i) lap_ += hess_[static_cast<std::size_t>(i) * n + i];
  grad_lap_.reserve(n);
  for (int i = 0; i < n; ++i) grad_lap_.push_back(lap_.derivative(i));
  for (int i = 0; i < n; ++i) bilap_ += grad_lap_[i].derivative(i);
}

PointDerivatives SpectralC4::at(std::span<const double> x) const {
  const int n = dimension();
  PointDerivatives out;
  out.value = synthesize_at(f_, x);
  out.grad.resize(n);
  for (int i = 0; i < n; ++i) out.grad[i] = synthesize_at(grad_[i], x);
  out.hess.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.hess[static_cast<std::size_t>(i) * n + j] =
          synthesize_at(hess_[static_cast<std::size_t>(i) * n + j], x);
  out.lap = synthesize_at(lap_, x);
  out.grad_lap.resize(n);
  for (int i = 0; i < n; ++i) out.grad_lap[i] = synthesize_at(grad_lap_[i], x);
  out.bilap = synthesize_at(bilap_, x);
  return out;
}

FiniteDifferenceC4::FiniteDifferenceC4(std::function<double(std::span<const double>)> f,
                                       int dimension, double step_scale)
    : f_(std::move(f)), dim_(dimension), step_scale_(step_scale) {}

namespace {

// Order-4 central stencils.
double fd_d1(const std::function<double(double)>& g, double h) {
  return (g(-2.0 * h) - 8.0 * g(-h) + 8.0 * g(h) - g(2.0 * h)) / (12.0 * h);
}

double fd_d2(const std::function<double(double)>& g, double h) {
  return (-g(-2.0 * h) + 16.0 * g(-h) - 30.0 * g(0.0) + 16.0 * g(h) - g(2.0 * h)) /
         (12.0 * h * h);
}

}  // namespace

PointDerivatives FiniteDifferenceC4::at(std::span<const double> x) const {
  const int n = dim_;
  const double h = step_scale_ * (1.0 + norm2(x));
  std::vector<double> p(x.begin(), x.end());

  const auto value_at = [&](const std::vector<double>& pt) { return f_(pt); };

  const auto shift1 = [&](int i, double di) {
    std::vector<double> pt(p);
    pt[i] += di;
    return value_at(pt);
  };

  PointDerivatives out;
  out.value = value_at(p);
  out.grad.resize(n);
  out.hess.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    out.grad[i] = fd_d1([&](double d) { return shift1(i, d); }, h);
  for (int i = 0; i < n; ++i) {
    out.hess[static_cast<std::size_t>(i) * n + i] =
        fd_d2([&](double d) { return shift1(i, d); }, h);
    for (int j = i + 1; j < n; ++j) {
      // d2/dxi dxj as d1 in xi of d1 in xj.
      const auto inner = [&](double di) {
        std::vector<double> pt(p);
        pt[i] += di;
        return fd_d1(
            [&](double dj) {
              std::vector<double> pq(pt);
              pq[j] += dj;
              return value_at(pq);
            },
            h);
      };
      const double v = fd_d1(inner, h);
      out.hess[static_cast<std::size_t>(i) * n + j] = v;
      out.hess[static_cast<std::size_t>(j) * n + i] = v;
    }
  }
  out.lap = 0.0;
  for (int i = 0; i < n; ++i) out.lap += out.hess[static_cast<std::size_t>(i) * n + i];

  // Laplacian as a function of a shifted point, for grad_lap and bilap.
  const auto lap_at = [&](const std::vector<double>& pt) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
      acc += fd_d2(
          [&](double d) {
            std::vector<double> pq(pt);
            pq[i] += d;
            return value_at(pq);
          },
          h);
    return acc;
  };

  out.grad_lap.resize(n);
  for (int i = 0; i < n; ++i) {
    out.grad_lap[i] = fd_d1(
        [&](double d) {
          std::vector<double> pt(p);
          pt[i] += d;
          return lap_at(pt);
        },
        h);
  }
  out.bilap = 0.0;
  for (int i = 0; i < n; ++i)
    out.bilap += fd_d2(
        [&](double d) {
          std::vector<double> pt(p);
          pt[i] += d;
          return lap_at(pt);
        },
        h);
  return out;
}

RadialC4::RadialC4(int dimension, std::function<double(double)> u, std::function<double(double)> u1,
                   std::function<double(double)> u2, std::function<double(double)> u3,
                   std::function<double(double)> u4)
    : dim_(dimension),
      u_(std::move(u)),
      u1_(std::move(u1)),
      u2_(std::move(u2)),
      u3_(std::move(u3)),
      u4_(std::move(u4)) {}

PointDerivatives RadialC4::at(std::span<const double> x) const {
  const int n = dim_;
  const double r = norm2(x);
  if (r < 1e-12) throw std::domain_error("RadialC4: point too close to the origin");
  const double u1 = u1_(r), u2 = u2_(r), u3 = u3_(r), u4 = u4_(r);

  PointDerivatives out;
  out.value = u_(r);
  out.grad.resize(n);
  for (int i = 0; i < n; ++i) out.grad[i] = u1 * x[i] / r;
  const double hd = (u2 - u1 / r) / (r * r);  // (u'' - u'/r)/r^2
  out.hess.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double v = hd * x[i] * x[j];
      if (i == j) v += u1 / r;
      out.hess[static_cast<std::size_t>(i) * n + j] = v;
    }
  const double nm1 = n - 1;
  out.lap = u2 + nm1 * u1 / r;
  // v = lap(u) as a radial profile: v' and v''.
  const double v1 = u3 + nm1 * (u2 / r - u1 / (r * r));
  const double v2 = u4 + nm1 * (u3 / r - 2.0 * u2 / (r * r) + 2.0 * u1 / (r * r * r));
  out.grad_lap.resize(n);
  for (int i = 0; i < n; ++i) out.grad_lap[i] = v1 * x[i] / r;
  out.bilap = v2 + nm1 * v1 / r;
  return out;
}

}  // namespace biko
