#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "biko/measure.hpp"

namespace biko {

/// Grid-sampled certificate for one hypothesis clause. A failed entry
/// always carries a witness point.
struct HypothesisEntry {
  std::string name;
  bool passed = false;
  double measured_bound = 0.0;
  std::optional<std::vector<double>> witness;
  std::string grid_spec;
};

struct HypothesisReport {
  std::vector<HypothesisEntry> entries;
  bool all_passed() const {
    for (const auto& e : entries)
      if (!e.passed) return false;
    return true;
  }
};

/// Radial audit grid: log-spaced radii, sampled directions for the
/// tensor-valued bounds. The origin is always excluded.
struct AuditGrid {
  double r_min = 1e-6;
  double r_max = 1e3;
  int per_decade = 200;
  int random_directions = 2;
  std::uint64_t seed = 12345;
};

/// Positivity of the density on compacts plus local integrability of the
/// drift near the origin (measured log-log growth exponent of |b|).
HypothesisEntry check_H1(const Measure& m, const AuditGrid& grid = {});

/// (ii): |x|^2 U(x) <= 1/(4 |log|x||^2) on B_R0 (requires R0 < 1);
/// (iii): U bounded above outside B_R (trend certificate on [R, R_far]).
std::vector<HypothesisEntry> check_H2(const Measure& m, double R0, double R_far,
                                      int per_decade = 200);

/// (i):  |D_i b_j|  <= eps/|x|^2 + C_eps |b| with finite C_eps per eps;
/// (ii): |D_ij b_k| <= eps/|x|^3 + C_eps |b| with finite C_eps per eps.
std::vector<HypothesisEntry> check_H3(const Measure& m, std::span<const double> eps_list,
                                      const AuditGrid& grid = {});

/// Full audit with default grids; entries H1, H2(ii), H2(iii), H3(i), H3(ii).
HypothesisReport audit_measure(const Measure& m);

}  // namespace biko
