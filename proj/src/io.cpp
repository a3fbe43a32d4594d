#include "biko/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "biko/util.hpp"

namespace biko {

nlohmann::json to_json(const SpectralFunction& s) {
  nlohmann::json entries = nlohmann::json::array();
  const auto& set = s.index_set();
  for (std::size_t r = 0; r < s.size(); ++r)
    entries.push_back({set[r].entries(), s[r]});
  return {{"schema_version", kSchemaVersion},
          {"dimension", s.dimension()},
          {"max_degree", s.max_degree()},
          {"entries", entries}};
}

SpectralFunction spectral_from_json(const nlohmann::json& j) {
  SpectralFunction s(j.at("dimension").get<int>(), j.at("max_degree").get<int>());
  for (const auto& e : j.at("entries")) {
    const MultiIndex alpha(e.at(0).get<std::vector<int>>());
    s.set_coefficient(alpha, e.at(1).get<double>());
  }
  return s;
}

nlohmann::json to_json(const HypothesisEntry& e) {
  nlohmann::json j{{"name", e.name},
                   {"passed", e.passed},
                   {"measured_bound", e.measured_bound},
                   {"grid_spec", e.grid_spec}};
  if (e.witness)
    j["witness_point"] = *e.witness;
  else
    j["witness_point"] = nullptr;
  return j;
}

nlohmann::json to_json(const HypothesisReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) entries.push_back(to_json(e));
  return {{"schema_version", kSchemaVersion},
          {"all_passed", r.all_passed()},
          {"entries", entries}};
}

std::string hypothesis_table(const HypothesisReport& r) {
  std::ostringstream out;
  out << "hypothesis  status  measured_bound\n";
  for (const auto& e : r.entries) {
    out << e.name;
    for (std::size_t i = e.name.size(); i < 12; ++i) out << ' ';
    out << (e.passed ? "pass    " : "FAIL    ") << format_double(e.measured_bound);
    if (e.witness) {
      out << "  witness=(";
      for (std::size_t i = 0; i < e.witness->size(); ++i) {
        if (i) out << ',';
        out << format_double((*e.witness)[i]);
      }
      out << ')';
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const InequalityReport& r) {
  nlohmann::json j{{"name", r.name},     {"trial", r.trial},
                   {"lhs", r.lhs},       {"rhs", r.rhs},
                   {"margin", r.margin}, {"passed", r.passed},
                   {"C0", r.C0},         {"C1", r.C1},
                   {"C2", r.C2},         {"tolerance", r.tolerance}};
  if (r.eps) j["eps"] = *r.eps;
  return j;
}

nlohmann::json reports_to_json(const std::vector<InequalityReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return {{"schema_version", kSchemaVersion}, {"reports", arr}};
}

std::string reports_to_csv(const std::vector<InequalityReport>& reports) {
  std::ostringstream out;
  out << "name,trial,lhs,rhs,margin,passed,C0,C1,C2,eps\n";
  for (const auto& r : reports) {
    out << r.name << ',' << r.trial << ',' << format_double(r.lhs) << ','
        << format_double(r.rhs) << ',' << format_double(r.margin) << ','
        << (r.passed ? 1 : 0) << ',' << format_double(r.C0) << ',' << format_double(r.C1)
        << ',' << format_double(r.C2) << ',' << (r.eps ? format_double(*r.eps) : "") << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const PositivityScan& s) {
  nlohmann::json j{{"schema_version", kSchemaVersion},
                   {"datum", s.datum},
                   {"K_lo", s.K.lo},
                   {"K_hi", s.K.hi},
                   {"floor", s.asymptotic_floor}};
  if (s.t0)
    j["t0"] = *s.t0;
  else
    j["t0"] = nullptr;
  if (s.negative_witness)
    j["negative_witness"] = {{"t", s.negative_witness->t},
                             {"x", s.negative_witness->x},
                             {"value", s.negative_witness->value}};
  else
    j["negative_witness"] = nullptr;
  return j;
}

std::string scan_to_csv(const PositivityScan& s) {
  std::ostringstream out;
  out << "t,min_over_K,argmin\n";
  for (std::size_t i = 0; i < s.time_grid.size(); ++i) {
    out << format_double(s.time_grid[i]) << ',' << format_double(s.minima[i]) << ',';
    for (std::size_t d = 0; d < s.argmin[i].size(); ++d) {
      if (d) out << ' ';
      out << format_double(s.argmin[i][d]);
    }
    out << '\n';
  }
  return out.str();
}

MeasureSpec measure_spec_from_json(const nlohmann::json& j) {
  static const std::set<std::string> top_keys = {"family", "dimension", "params"};
  static const std::set<std::string> param_keys = {"m", "alpha", "beta", "c1", "c2"};
  for (const auto& [key, _] : j.items())
    if (!top_keys.count(key))
      throw std::invalid_argument("measure config: unknown key '" + key + "'");
  MeasureSpec spec;
  spec.family = j.at("family").get<std::string>();
  if (j.contains("dimension")) spec.dimension = j.at("dimension").get<int>();
  if (j.contains("params")) {
    for (const auto& [key, value] : j.at("params").items()) {
      if (!param_keys.count(key))
        throw std::invalid_argument("measure config: unknown param '" + key + "'");
      const double v = value.get<double>();
      if (key == "m") spec.m = v;
      if (key == "alpha") spec.alpha = v;
      if (key == "beta") spec.beta = v;
      if (key == "c1") spec.c1 = v;
      if (key == "c2") spec.c2 = v;
    }
  }
  return spec;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
}

}  // namespace biko
