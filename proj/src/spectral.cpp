#include "biko/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace biko {

SpectralFunction::SpectralFunction(int dimension, int max_degree)
    : set_(&MultiIndexSet::get(dimension, max_degree)), coeffs_(set_->size(), 0.0) {}

double SpectralFunction::coefficient(const MultiIndex& alpha) const {
  const std::size_t r = set_->find(alpha);
  return r == MultiIndexSet::npos ? 0.0 : coeffs_[r];
}

void SpectralFunction::set_coefficient(const MultiIndex& alpha, double value) {
  const std::size_t r = set_->find(alpha);
  if (r == MultiIndexSet::npos)
    throw std::invalid_argument("SpectralFunction: index order exceeds max_degree");
  coeffs_[r] = value;
}

double SpectralFunction::norm() const {
  double s = 0.0;
  for (double c : coeffs_) s += c * c;
  return std::sqrt(s);
}

SpectralFunction SpectralFunction::basis(int dimension, const MultiIndex& alpha, int max_degree) {
  if (alpha.dimension() != dimension)
    throw std::invalid_argument("SpectralFunction::basis: dimension mismatch");
  const int d = max_degree < 0 ? alpha.order() : max_degree;
  SpectralFunction s(dimension, d);
  s.set_coefficient(alpha, 1.0);
  return s;
}

SpectralFunction SpectralFunction::constant(int dimension, double value) {
  SpectralFunction s(dimension, 0);
  s[0] = value;
  return s;
}

SpectralFunction SpectralFunction::derivative(int k) const {
  if (k < 0 || k >= dimension()) throw std::invalid_argument("derivative: bad axis");
  SpectralFunction out(dimension(), std::max(0, max_degree() - 1));
  for (std::size_t r = 0; r < coeffs_.size(); ++r) {
    if (coeffs_[r] == 0.0) continue;
    const MultiIndex& alpha = (*set_)[r];
    if (alpha[k] == 0) continue;
    const std::size_t rr = out.index_set().find(alpha.lowered(k));
    out[rr] += std::sqrt(static_cast<double>(alpha[k])) * coeffs_[r];
  }
  return out;
}

SpectralFunction SpectralFunction::multiply_by_coordinate(int k) const {
  if (k < 0 || k >= dimension()) throw std::invalid_argument("multiply_by_coordinate: bad axis");
  SpectralFunction out(dimension(), max_degree() + 1);
  for (std::size_t r = 0; r < coeffs_.size(); ++r) {
    if (coeffs_[r] == 0.0) continue;
    const MultiIndex& alpha = (*set_)[r];
    const std::size_t up = out.index_set().find(alpha.raised(k));
    out[up] += std::sqrt(static_cast<double>(alpha[k] + 1)) * coeffs_[r];
    if (alpha[k] > 0) {
      const std::size_t down = out.index_set().find(alpha.lowered(k));
      out[down] += std::sqrt(static_cast<double>(alpha[k])) * coeffs_[r];
    }
  }
  return out;
}

SpectralFunction SpectralFunction::resized(int max_degree) const {
  SpectralFunction out(dimension(), max_degree);
  const std::size_t n = std::min(out.size(), coeffs_.size());
  for (std::size_t r = 0; r < n; ++r) out[r] = coeffs_[r];
  return out;
}

SpectralFunction& SpectralFunction::operator+=(const SpectralFunction& o) {
  if (o.dimension() != dimension() || o.max_degree() != max_degree())
    throw std::invalid_argument("SpectralFunction::operator+=: shape mismatch");
  for (std::size_t r = 0; r < coeffs_.size(); ++r) coeffs_[r] += o.coeffs_[r];
  return *this;
}

SpectralFunction& SpectralFunction::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

SpectralFunction project(const std::function<double(std::span<const double>)>& f, int dimension,
                         int max_degree, const QuadratureRule& rule) {
  if (rule.dimension() != dimension) throw std::invalid_argument("project: rule dimension mismatch");
  if (rule.nodes_per_axis() < max_degree + 1)
    throw std::invalid_argument("project: rule not exact enough (need nodes_per_axis >= max_degree + 1)");
  SpectralFunction out(dimension, max_degree);
  const MultiIndexSet& set = out.index_set();
  // Per-axis orthonormal Hermite values at the quadrature nodes.
  const int m = rule.nodes_per_axis();
  std::vector<double> table(static_cast<std::size_t>(m) * (max_degree + 1));
  for (int q = 0; q < m; ++q)
    hermite_orthonormal_all(max_degree, rule.axis_nodes()[q],
                            std::span<double>(table.data() + q * (max_degree + 1), max_degree + 1));

  std::vector<int> digit(dimension, 0);
  std::vector<double> x(dimension);
  const std::size_t total = rule.point_count();
  for (std::size_t idx = 0; idx < total; ++idx) {
    double w = 1.0;
    for (int d = 0; d < dimension; ++d) {
      x[d] = rule.axis_nodes()[digit[d]];
      w *= rule.axis_weights()[digit[d]];
    }
    const double fw = w * f(x);
    if (fw != 0.0) {
      for (std::size_t r = 0; r < set.size(); ++r) {
        const MultiIndex& alpha = set[r];
        double basis = 1.0;
        for (int d = 0; d < dimension; ++d)
          basis *= table[digit[d] * (max_degree + 1) + alpha[d]];
        out[r] += fw * basis;
      }
    }
    for (int d = 0; d < dimension; ++d) {
      if (++digit[d] < m) break;
      digit[d] = 0;
    }
  }
  return out;
}

double synthesize_at(const SpectralFunction& s, std::span<const double> x) {
  const int dim = s.dimension();
  if (static_cast<int>(x.size()) != dim)
    throw std::invalid_argument("synthesize_at: point dimension mismatch");
  const int d = s.max_degree();
  std::vector<double> table(static_cast<std::size_t>(dim) * (d + 1));
  for (int axis = 0; axis < dim; ++axis)
    hermite_orthonormal_all(d, x[axis], std::span<double>(table.data() + axis * (d + 1), d + 1));
  const MultiIndexSet& set = s.index_set();
  double acc = 0.0;
  for (std::size_t r = 0; r < set.size(); ++r) {
    const double c = s[r];
    if (c == 0.0) continue;
    const MultiIndex& alpha = set[r];
    double basis = 1.0;
    for (int axis = 0; axis < dim; ++axis) basis *= table[axis * (d + 1) + alpha[axis]];
    acc += c * basis;
  }
  return acc;
}

std::vector<double> synthesize(const SpectralFunction& s,
                               std::span<const std::vector<double>> points) {
  std::vector<double> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = synthesize_at(s, points[i]);
  return out;
}

double inner_product_mu(const SpectralFunction& a, const SpectralFunction& b) {
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("inner_product_mu: dimension mismatch");
  const SpectralFunction& lo = a.size() <= b.size() ? a : b;
  const SpectralFunction& hi = a.size() <= b.size() ? b : a;
  double s = 0.0;
  for (std::size_t r = 0; r < lo.size(); ++r) s += lo[r] * hi[r];
  return s;
}

}  // namespace biko
