#include "biko/semigroup.hpp"

#include <cmath>
#include <stdexcept>

namespace biko {

SpectralFunction evolve_L(const SpectralFunction& s, double t) {
  if (t < 0.0) throw std::invalid_argument("evolve_L: negative time");
  SpectralFunction out = s;
  const MultiIndexSet& set = s.index_set();
  for (std::size_t r = 0; r < s.size(); ++r)
    out[r] = std::exp(-static_cast<double>(set[r].order()) * t) * s[r];
  return out;
}

EvolutionResult evolve_A(const SpectralFunction& s, double t) {
  if (t < 0.0) throw std::invalid_argument("evolve_A: negative time");
  SpectralFunction out = s;
  const MultiIndexSet& set = s.index_set();
  for (std::size_t r = 0; r < s.size(); ++r) {
    const double k = static_cast<double>(set[r].order());
    out[r] = std::exp(-k * k * t) * s[r];
  }
  return EvolutionResult{std::move(out), t, s.mean()};
}

SpectralFunction asymptotic_projection(const SpectralFunction& s) {
  return SpectralFunction::constant(s.dimension(), s.mean());
}

SpectralFunction resolvent_A(const SpectralFunction& s, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("resolvent_A: lambda > 0 required");
  SpectralFunction out = s;
  const MultiIndexSet& set = s.index_set();
  for (std::size_t r = 0; r < s.size(); ++r) {
    const double k = static_cast<double>(set[r].order());
    out[r] = s[r] / (lambda + k * k);
  }
  return out;
}

SpectralFunction ergodic_average(const SpectralFunction& s, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("ergodic_average: t > 0 required");
  SpectralFunction out = s;
  const MultiIndexSet& set = s.index_set();
  for (std::size_t r = 0; r < s.size(); ++r) {
    const double k2 = static_cast<double>(set[r].order()) * set[r].order();
    if (k2 > 0.0) out[r] = s[r] * (-std::expm1(-k2 * t)) / (t * k2);
  }
  return out;
}

}  // namespace biko
