#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace biko {

inline constexpr double kPi = 3.14159265358979323846;

/// Surface measure of the unit sphere in R^N.
inline double sphere_surface(int dimension) {
  return 2.0 * std::pow(kPi, 0.5 * dimension) / std::tgamma(0.5 * dimension);
}

inline double norm2(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

/// Deterministic stream of pseudo-random doubles (splitmix64 core).
/// Used instead of <random> distributions so that seeded artifacts are
/// byte-identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Standard normal via Box-Muller (spare draw discarded, keeps the
  /// stream position independent of call parity).
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

  /// Random point with independent N(0,1) coordinates, rejected until
  /// |x| <= radius when a positive radius is given.
  std::vector<double> point_in_ball(int dimension, double radius) {
    std::vector<double> x(dimension);
    for (;;) {
      for (auto& v : x) v = normal();
      if (radius <= 0.0 || norm2(x) <= radius) return x;
    }
  }

 private:
  std::uint64_t state_;
};

/// Thread cap honoring the BIKO_THREADS environment variable.
int max_threads();

/// Index-parallel loop with deterministic result placement: body(i) must
/// write only to slot i of preallocated storage.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Fixed-format double -> string used by every CSV/JSON artifact writer
/// (17 significant digits, round-trip exact).
std::string format_double(double v);

}  // namespace biko
