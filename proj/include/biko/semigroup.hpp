#pragma once

#include "biko/spectral.hpp"

namespace biko {

/// State of e^{-tA} f at a fixed time; the mean against mu is conserved by
/// the flow and equals the degree-zero coefficient.
struct EvolutionResult {
  SpectralFunction state;
  double time = 0.0;
  double conserved_mean = 0.0;
};

/// e^{tL}: coefficient of Hh_alpha scaled by e^{-|alpha| t}.
SpectralFunction evolve_L(const SpectralFunction& s, double t);

/// e^{-tA}: coefficients scaled by e^{-|alpha|^2 t}.
EvolutionResult evolve_A(const SpectralFunction& s, double t);

/// Long-time limit: the constant function with value = mean of s.
SpectralFunction asymptotic_projection(const SpectralFunction& s);

/// R(lambda, -A): coefficients scaled by 1/(lambda + |alpha|^2), lambda > 0.
SpectralFunction resolvent_A(const SpectralFunction& s, double lambda);

/// t^{-1} int_0^t e^{-sA} f ds: mean unchanged, higher coefficients scaled
/// by (1 - e^{-|alpha|^2 t}) / (t |alpha|^2).
SpectralFunction ergodic_average(const SpectralFunction& s, double t);

}  // namespace biko
