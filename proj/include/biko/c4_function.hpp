#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "biko/spectral.hpp"

namespace biko {

/// Everything the fourth-order operator needs about a trial function at a
/// single point.
struct PointDerivatives {
  double value = 0.0;
  std::vector<double> grad;      // N
  std::vector<double> hess;      // N*N row-major
  double lap = 0.0;              // trace of hess
  std::vector<double> grad_lap;  // gradient of the Laplacian
  double bilap = 0.0;            // Laplacian of the Laplacian

  double hess_at(int i, int j) const { return hess[static_cast<std::size_t>(i) * grad.size() + j]; }
};

/// Function with four derivatives available pointwise.
class C4Function {
 public:
  virtual ~C4Function() = default;
  virtual int dimension() const = 0;
  virtual PointDerivatives at(std::span<const double> x) const = 0;
};

/// Exact polynomial calculus on a spectral representation: all derivative
/// fields are synthesized from precomputed coefficient shifts, so they are
/// exact up to rounding.
class SpectralC4 : public C4Function {
 public:
  explicit SpectralC4(SpectralFunction f);
  int dimension() const override { return f_.dimension(); }
  PointDerivatives at(std::span<const double> x) const override;
  const SpectralFunction& function() const { return f_; }

 private:
  SpectralFunction f_;
  std::vector<SpectralFunction> grad_;      // N
  std::vector<SpectralFunction> hess_;      // N*N (upper half mirrored)
  SpectralFunction lap_;
  std::vector<SpectralFunction> grad_lap_;  // N
  SpectralFunction bilap_;
};

/// Order-4 central finite differences around a value-only callable, step
/// h = scale * (1 + |x|). The general-measure cross-check oracle.
class FiniteDifferenceC4 : public C4Function {
 public:
  FiniteDifferenceC4(std::function<double(std::span<const double>)> f, int dimension,
                     double step_scale = 1e-3);
  int dimension() const override { return dim_; }
  PointDerivatives at(std::span<const double> x) const override;

 private:
  std::function<double(std::span<const double>)> f_;
  int dim_;
  double step_scale_;
};

/// Radial function u(|x|) given by its profile derivatives up to fourth
/// order; aggregates follow from the usual radial calculus. Only valid
/// away from the origin unless the profile is smooth and even.
class RadialC4 : public C4Function {
 public:
  RadialC4(int dimension, std::function<double(double)> u, std::function<double(double)> u1,
           std::function<double(double)> u2, std::function<double(double)> u3,
           std::function<double(double)> u4);
  int dimension() const override { return dim_; }
  PointDerivatives at(std::span<const double> x) const override;

 private:
  int dim_;
  std::function<double(double)> u_, u1_, u2_, u3_, u4_;
};

}  // namespace biko
