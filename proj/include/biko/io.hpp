#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "biko/hypotheses.hpp"
#include "biko/inequalities.hpp"
#include "biko/positivity.hpp"
#include "biko/spectral.hpp"

namespace biko {

inline constexpr int kSchemaVersion = 1;

/// {dimension, max_degree, entries: [[alpha...], coefficient]} in graded-lex
/// order (every index emitted, zeros included, for bit-stable artifacts).
nlohmann::json to_json(const SpectralFunction& s);
SpectralFunction spectral_from_json(const nlohmann::json& j);

nlohmann::json to_json(const HypothesisEntry& e);
nlohmann::json to_json(const HypothesisReport& r);
std::string hypothesis_table(const HypothesisReport& r);

nlohmann::json to_json(const InequalityReport& r);
nlohmann::json reports_to_json(const std::vector<InequalityReport>& reports);
std::string reports_to_csv(const std::vector<InequalityReport>& reports);

nlohmann::json to_json(const PositivityScan& s);
std::string scan_to_csv(const PositivityScan& s);

/// Strict parse: {family, dimension, params:{...}}; unknown keys rejected.
MeasureSpec measure_spec_from_json(const nlohmann::json& j);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace biko
