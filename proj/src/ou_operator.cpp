#include "biko/ou_operator.hpp"

#include <cmath>
#include <stdexcept>

#include "biko/util.hpp"

namespace biko {

SpectralFunction apply_L_spectral(const SpectralFunction& s) {
  SpectralFunction out = s;
  const MultiIndexSet& set = s.index_set();
  for (std::size_t r = 0; r < s.size(); ++r) out[r] = -static_cast<double>(set[r].order()) * s[r];
  return out;
}

SpectralFunction apply_A_spectral(const SpectralFunction& s) {
  SpectralFunction out = s;
  const MultiIndexSet& set = s.index_set();
  for (std::size_t r = 0; r < s.size(); ++r) {
    const double k = static_cast<double>(set[r].order());
    out[r] = k * k * s[r];
  }
  return out;
}

double apply_L_pointwise(const Measure& m, const C4Function& f, std::span<const double> x) {
  if (f.dimension() != m.dimension() || static_cast<int>(x.size()) != m.dimension())
    throw std::invalid_argument("apply_L_pointwise: dimension mismatch");
  const PointDerivatives d = f.at(x);
  const auto b = m.drift(x);
  double acc = d.lap;
  for (std::size_t i = 0; i < b.size(); ++i) acc += b[i] * d.grad[i];
  return acc;
}

BiOperatorTerms apply_A_terms(const Measure& m, const C4Function& f, std::span<const double> x) {
  if (f.dimension() != m.dimension() || static_cast<int>(x.size()) != m.dimension())
    throw std::invalid_argument("apply_A_terms: dimension mismatch");
  const int n = m.dimension();
  const PointDerivatives d = f.at(x);
  const auto b = m.drift(x);
  const double lap_ratio = m.laplacian_ratio(x);
  const auto lap_ratio_grad = m.laplacian_ratio_gradient(x);

  double b_dot_grad = 0.0, b_norm2 = 0.0;
  for (int i = 0; i < n; ++i) {
    b_dot_grad += b[i] * d.grad[i];
    b_norm2 += b[i] * b[i];
  }

  BiOperatorTerms out;
  // 1: lap^2 u
  out.term[0] = d.bilap;
  // 2: 2 b . grad(lap u)
  {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += b[i] * d.grad_lap[i];
    out.term[1] = 2.0 * acc;
  }
  // D^2 mu / mu = J + b b^T where J is the drift Jacobian.
  // 3: 2 Tr[(D^2 mu / mu) D^2 u]
  {
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        acc += (m.drift_jacobian(x, i, j) + b[i] * b[j]) * d.hess_at(i, j);
    out.term[2] = 2.0 * acc;
  }
  // 4: -(D^2 u b) . b
  {
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) acc += d.hess_at(i, j) * b[j] * b[i];
    out.term[3] = -acc;
  }
  // 5: -((D^2 mu / mu) grad u) . b
  {
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        acc += (m.drift_jacobian(x, i, j) + b[i] * b[j]) * d.grad[j] * b[i];
    out.term[4] = -acc;
  }
  // 6: (grad(lap mu)/mu) . grad u, with grad(lap mu)/mu =
  //    grad(lap mu / mu) + (lap mu / mu) b.
  {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += (lap_ratio_grad[i] + lap_ratio * b[i]) * d.grad[i];
    out.term[5] = acc;
  }
  // 7: -(lap mu / mu) b . grad u
  out.term[6] = -lap_ratio * b_dot_grad;
  // 8: |b|^2 b . grad u
  out.term[7] = b_norm2 * b_dot_grad;
  return out;
}

double apply_A_pointwise(const Measure& m, const C4Function& f, std::span<const double> x) {
  return apply_A_terms(m, f, x).total();
}

double commutator_check(const Measure& m, const C4Function& f, std::span<const double> x, int k) {
  if (k < 0 || k >= m.dimension()) throw std::invalid_argument("commutator_check: bad axis");
  const int n = m.dimension();
  const PointDerivatives d = f.at(x);
  const auto b = m.drift(x);

  // L(D_k f) = D_k(lap f) + b . grad(D_k f)
  double l_dk = d.grad_lap[k];
  for (int i = 0; i < n; ++i) l_dk += b[i] * d.hess_at(i, k);

  // D_k(L f) = D_k(lap f) + sum_j (D_k b_j) D_j f + b_j D_kj f
  double dk_l = d.grad_lap[k];
  for (int j = 0; j < n; ++j)
    dk_l += m.drift_jacobian(x, k, j) * d.grad[j] + b[j] * d.hess_at(k, j);

  // grad(b_k) . grad f
  double corr = 0.0;
  for (int i = 0; i < n; ++i) corr += m.drift_jacobian(x, i, k) * d.grad[i];

  return std::abs(l_dk - dk_l + corr);
}

}  // namespace biko
