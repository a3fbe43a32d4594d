#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace biko {

/// Dense polynomial in r (ascending coefficients).
class Poly {
 public:
  Poly() : c_{0.0} {}
  explicit Poly(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(double v) { return Poly({v}); }
  static Poly monomial(int degree, double v = 1.0);

  double eval(double r) const;
  Poly derivative() const;
  Poly times_r() const;
  Poly operator+(const Poly& o) const;
  Poly operator*(double s) const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<double>& coeffs() const { return c_; }

 private:
  void trim();
  std::vector<double> c_;
};

/// Radial trial u(r) = p(r) e^{-a r^2}; closed under differentiation, so
/// radial derivatives to any order stay exact.
class RadialTrial {
 public:
  RadialTrial(Poly p, double a, std::string label);

  double value(double r) const;
  /// k-th radial derivative value (k <= 4 precomputed).
  double deriv(int k, double r) const;
  double a() const { return a_; }
  const std::string& label() const { return label_; }

 private:
  std::vector<Poly> polys_;  // p for u, u', u'', u''', u''''
  double a_;
  std::string label_;
};

/// Deterministic suite of smooth radial trials (bounded near 0, Gaussian
/// decay); `count` >= 4, extra entries are seeded random combinations.
std::vector<RadialTrial> make_radial_suite(int count, std::uint64_t seed);

}  // namespace biko
