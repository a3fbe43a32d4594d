#pragma once

#include <array>
#include <span>

#include "biko/c4_function.hpp"
#include "biko/measure.hpp"
#include "biko/spectral.hpp"

namespace biko {

/// L in the Gaussian case acts diagonally: coefficient of Hh_alpha is
/// scaled by -|alpha|. Never raises the degree.
SpectralFunction apply_L_spectral(const SpectralFunction& s);

/// A = L^2 in the Gaussian case: coefficients scaled by |alpha|^2.
SpectralFunction apply_A_spectral(const SpectralFunction& s);

/// L f (x) = lap f + b . grad f for a general measure.
double apply_L_pointwise(const Measure& m, const C4Function& f, std::span<const double> x);

/// The eight summands of the explicit fourth-order formula
///   A u = lap^2 u + 2 b . grad(lap u) + 2 Tr[(D^2 mu / mu) D^2 u]
///         - (D^2 u b) . b - ((D^2 mu / mu) grad u) . b
///         + (grad(lap mu)/mu) . grad u - (lap mu / mu) b . grad u
///         + |b|^2 b . grad u
/// kept separately inspectable; sign slips in the drift terms are the
/// dominant failure mode, so tests pin each one.
struct BiOperatorTerms {
  std::array<double, 8> term{};
  double total() const {
    double t = 0.0;
    for (double v : term) t += v;
    return t;
  }
};

BiOperatorTerms apply_A_terms(const Measure& m, const C4Function& f, std::span<const double> x);
double apply_A_pointwise(const Measure& m, const C4Function& f, std::span<const double> x);

/// |L(D_k f) - D_k(L f) + grad(b_k) . grad f| at x. Identically zero for
/// exact derivatives; bounded by 1e-7 for the finite-difference oracle.
double commutator_check(const Measure& m, const C4Function& f, std::span<const double> x, int k);

}  // namespace biko
