#include "biko/radial_trial.hpp"

#include <cmath>
#include <stdexcept>

#include "biko/util.hpp"

namespace biko {

Poly Poly::monomial(int degree, double v) {
  std::vector<double> c(degree + 1, 0.0);
  c[degree] = v;
  return Poly(std::move(c));
}

double Poly::eval(double r) const {
  double acc = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * r + c_[i];
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<double> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = static_cast<double>(i) * c_[i];
  return Poly(std::move(d));
}

Poly Poly::times_r() const {
  std::vector<double> d(c_.size() + 1, 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i) d[i + 1] = c_[i];
  return Poly(std::move(d));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<double> d(std::max(c_.size(), o.c_.size()), 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i) d[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) d[i] += o.c_[i];
  return Poly(std::move(d));
}

Poly Poly::operator*(double s) const {
  std::vector<double> d(c_);
  for (double& v : d) v *= s;
  return Poly(std::move(d));
}

void Poly::trim() {
  while (c_.size() > 1 && c_.back() == 0.0) c_.pop_back();
  if (c_.empty()) c_.push_back(0.0);
}

RadialTrial::RadialTrial(Poly p, double a, std::string label)
    : a_(a), label_(std::move(label)) {
  if (!(a >= 0.0)) throw std::invalid_argument("RadialTrial: a >= 0 required");
  polys_.reserve(5);
  polys_.push_back(std::move(p));
  for (int k = 0; k < 4; ++k) {
    // (p e^{-a r^2})' = (p' - 2 a r p) e^{-a r^2}
    const Poly& prev = polys_.back();
    polys_.push_back(prev.derivative() + prev.times_r() * (-2.0 * a_));
  }
}

double RadialTrial::value(double r) const { return polys_[0].eval(r) * std::exp(-a_ * r * r); }

double RadialTrial::deriv(int k, double r) const {
  if (k < 0 || k > 4) throw std::invalid_argument("RadialTrial::deriv: k in [0, 4]");
  return polys_[k].eval(r) * std::exp(-a_ * r * r);
}

std::vector<RadialTrial> make_radial_suite(int count, std::uint64_t seed) {
  std::vector<RadialTrial> suite;
  suite.emplace_back(Poly::constant(1.0), 0.25, "exp(-r^2/4)");
  suite.emplace_back(Poly::monomial(2), 0.25, "r^2 exp(-r^2/4)");
  suite.emplace_back(Poly({1.0, 0.0, 1.0}), 0.5, "(1+r^2) exp(-r^2/2)");
  suite.emplace_back(Poly({1.0, 0.0, -2.0, 0.0, 1.0}), 0.4, "(1-r^2)^2 exp(-0.4 r^2)");
  Rng rng(seed);
  while (static_cast<int>(suite.size()) < count) {
    std::vector<double> coeffs(5, 0.0);
    for (std::size_t i = 0; i < coeffs.size(); i += 2) coeffs[i] = rng.uniform(-1.0, 1.0);
    coeffs[0] += 1.5;  // keep the trial bounded away from zero near 0
    const double a = rng.uniform(0.2, 0.8);
    suite.emplace_back(Poly(std::move(coeffs)), a,
                       "seeded#" + std::to_string(suite.size()));
  }
  suite.resize(count, suite.front());
  return suite;
}

}  // namespace biko
