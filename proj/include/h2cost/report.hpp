#pragma once

// Machine-readable reports: the full state table plus summary statistics,
// written as CSV or JSON with fixed formatting so identical inputs give
// byte-identical files.

#include <array>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "h2cost/analysis.hpp"
#include "h2cost/dataset.hpp"
#include "h2cost/ingest.hpp"
#include "h2cost/model.hpp"
#include "h2cost/scenario.hpp"
#include "h2cost/version.hpp"

namespace h2cost {

/// Lower-case hex SHA-256 of a byte string.
inline std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
    throw Error("sha256 failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

struct ReportMetadata {
  int dataset_vintage = 0;
  std::string scenario;
  int target_year = 0;
  std::string tool_version{kVersion};
  std::string dataset_sha256;
  std::string config_sha256;
};

struct CrossoverSummary {
  std::string technology;  ///< technology name or "average"
  std::optional<int> vs_smr;
  std::optional<int> vs_smr_ccs;
};

struct ReportSummary {
  std::map<Pathway, Average> averages;
  std::vector<std::string> frontier_states;  ///< electrolysis cost/carbon frontier
  double smr_ccs_average_lcoh = 0.0;
  std::map<Technology, std::optional<double>> breakeven_vs_smr_ccs;  ///< USD/kWh
  std::vector<CrossoverSummary> crossovers;  ///< empty for a constant grid
};

struct Report {
  ReportMetadata metadata;
  std::vector<StateResult> rows;  ///< sorted by (state, pathway)
  std::set<std::pair<std::string, Pathway>> frontier_rows;
  ReportSummary summary;
};

/// Crossover years of per-technology and technology-averaged electrolytic
/// carbon intensity against both SMR emission levels.
inline std::vector<CrossoverSummary> crossover_summary(const Dataset& dataset,
                                                       const std::vector<TechnologyParams>& registry,
                                                       const SmrParams& smr,
                                                       const GridTrajectory& trajectory) {
  const double smr_ci = smr_emissions(smr, false).carbon_intensity;
  const double ccs_ci = smr_emissions(smr, true).carbon_intensity;
  std::vector<CrossoverSummary> out;
  for (auto t : kTechnologies) {
    const auto& p = find_technology(registry, t);
    out.push_back({std::string(to_string(t)), crossover_year(dataset, p, trajectory, smr_ci),
                   crossover_year(dataset, p, trajectory, ccs_ci)});
  }
  out.push_back({"average", crossover_year(dataset, registry, trajectory, smr_ci),
                 crossover_year(dataset, registry, trajectory, ccs_ci)});
  return out;
}

/// Breakeven electricity price per projected technology against the
/// dataset-average SMR+CCS cost.
inline std::map<Technology, std::optional<double>> breakeven_summary(
    const std::vector<TechnologyParams>& registry, const Scenario& scenario, double target_lcoh) {
  std::map<Technology, std::optional<double>> out;
  for (auto t : kTechnologies) {
    const auto projected = project_params(find_technology(registry, t), scenario);
    out[t] = breakeven_electricity_price(projected, scenario.capacity_factor(), target_lcoh);
  }
  return out;
}

inline Report build_report(const Dataset& dataset, const Config& config, const Scenario& scenario,
                           std::string_view dataset_bytes, std::string_view config_bytes) {
  scenario.check(config.technologies, dataset.vintage_year);
  Report r;
  r.metadata.dataset_vintage = dataset.vintage_year;
  r.metadata.scenario = scenario.name();
  r.metadata.target_year = scenario.target_year();
  r.metadata.dataset_sha256 = sha256_hex(dataset_bytes);
  r.metadata.config_sha256 = sha256_hex(config_bytes);

  r.rows = state_table(dataset, config.technologies, config.smr, scenario);
  for (auto p : kPathways) r.summary.averages[p] = national_average(r.rows, p);

  const auto electro = electrolysis_rows(r.rows);
  const auto frontier = pareto_frontier(electro);
  for (const auto& f : frontier) r.frontier_rows.emplace(f.state, f.pathway);
  r.summary.frontier_states = states_of(frontier);

  r.summary.smr_ccs_average_lcoh = r.summary.averages.at(Pathway::SMR_CCS).lcoh;
  r.summary.breakeven_vs_smr_ccs =
      breakeven_summary(config.technologies, scenario, r.summary.smr_ccs_average_lcoh);
  if (std::holds_alternative<LinearToZero>(scenario.grid()))
    r.summary.crossovers =
        crossover_summary(dataset, config.technologies, config.smr, scenario.grid());
  return r;
}

namespace detail {

inline std::string fixed4(double v) {
  std::array<char, 64> buf{};
  const int n = std::snprintf(buf.data(), buf.size(), "%.4f", v);
  std::string s(buf.data(), static_cast<std::size_t>(n));
  if (s == "-0.0000") s = "0.0000";
  return s;
}

inline nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

inline nlohmann::json optional_json(const std::optional<int>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace detail

/// Per-state table, one row per (state, pathway), 4-decimal fixed floats.
/// Keyed by postal code so it can feed a choropleth directly.
inline void write_table_csv(const Report& r, std::ostream& out) {
  out << "state,pathway,lcoh_usd_per_kg,carbon_intensity_kg_per_kg,on_frontier\n";
  for (const auto& row : r.rows) {
    out << row.state << ',' << to_string(row.pathway) << ',' << detail::fixed4(row.lcoh) << ','
        << detail::fixed4(row.carbon_intensity) << ','
        << (r.frontier_rows.contains({row.state, row.pathway}) ? 1 : 0) << '\n';
  }
}

/// Metadata and summary as key,value lines.
inline void write_summary_csv(const Report& r, std::ostream& out) {
  const auto& m = r.metadata;
  out << "key,value\n";
  out << "tool_version," << m.tool_version << '\n';
  out << "dataset_vintage," << m.dataset_vintage << '\n';
  out << "scenario," << m.scenario << '\n';
  out << "target_year," << m.target_year << '\n';
  out << "dataset_sha256," << m.dataset_sha256 << '\n';
  out << "config_sha256," << m.config_sha256 << '\n';
  for (const auto& [p, a] : r.summary.averages) {
    out << "average_lcoh." << to_string(p) << ',' << detail::fixed4(a.lcoh) << '\n';
    out << "average_ci." << to_string(p) << ',' << detail::fixed4(a.carbon_intensity) << '\n';
  }
  std::string states;
  for (const auto& s : r.summary.frontier_states) states += (states.empty() ? "" : " ") + s;
  out << "frontier_states," << states << '\n';
  for (const auto& [t, price] : r.summary.breakeven_vs_smr_ccs)
    out << "breakeven_usd_per_kwh." << to_string(t) << ','
        << (price ? detail::fixed4(*price) : std::string("none")) << '\n';
  for (const auto& c : r.summary.crossovers) {
    out << "crossover_vs_smr." << c.technology << ','
        << (c.vs_smr ? std::to_string(*c.vs_smr) : std::string("none")) << '\n';
    out << "crossover_vs_smr_ccs." << c.technology << ','
        << (c.vs_smr_ccs ? std::to_string(*c.vs_smr_ccs) : std::string("none")) << '\n';
  }
}

inline nlohmann::json report_to_json(const Report& r) {
  using nlohmann::json;
  const auto& m = r.metadata;
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"state", row.state},
                    {"pathway", std::string(to_string(row.pathway))},
                    {"lcoh_usd_per_kg", row.lcoh},
                    {"carbon_intensity_kg_per_kg", row.carbon_intensity},
                    {"on_frontier", r.frontier_rows.contains({row.state, row.pathway})}});
  json averages = json::object();
  for (const auto& [p, a] : r.summary.averages)
    averages[std::string(to_string(p))] = {{"lcoh_usd_per_kg", a.lcoh},
                                           {"carbon_intensity_kg_per_kg", a.carbon_intensity},
                                           {"states", a.count}};
  json breakeven = json::object();
  for (const auto& [t, price] : r.summary.breakeven_vs_smr_ccs)
    breakeven[std::string(to_string(t))] = detail::optional_json(price);
  json crossovers = json::array();
  for (const auto& c : r.summary.crossovers)
    crossovers.push_back({{"technology", c.technology},
                          {"vs_smr", detail::optional_json(c.vs_smr)},
                          {"vs_smr_ccs", detail::optional_json(c.vs_smr_ccs)}});
  return {{"metadata",
           {{"tool_version", m.tool_version},
            {"dataset_vintage", m.dataset_vintage},
            {"scenario", m.scenario},
            {"target_year", m.target_year},
            {"dataset_sha256", m.dataset_sha256},
            {"config_sha256", m.config_sha256}}},
          {"rows", rows},
          {"summary",
           {{"averages", averages},
            {"frontier_states", r.summary.frontier_states},
            {"smr_ccs_average_lcoh_usd_per_kg", r.summary.smr_ccs_average_lcoh},
            {"breakeven_usd_per_kwh_vs_smr_ccs", breakeven},
            {"crossover_years", crossovers}}}};
}

inline void write_report_json(const Report& r, std::ostream& out) {
  out << report_to_json(r).dump(2) << '\n';
}

}  // namespace h2cost
