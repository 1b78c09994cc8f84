#pragma once

// Loading, validation and canonical serialization of state datasets (CSV)
// and model configuration (JSON).

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <type_traits>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "h2cost/dataset.hpp"
#include "h2cost/error.hpp"
#include "h2cost/model.hpp"

namespace h2cost {

// =============================================================================
// CSV state data
// =============================================================================

inline constexpr std::array<std::string_view, 51> kStateCodes{
    "AK", "AL", "AR", "AZ", "CA", "CO", "CT", "DC", "DE", "FL", "GA", "HI", "IA",
    "ID", "IL", "IN", "KS", "KY", "LA", "MA", "MD", "ME", "MI", "MN", "MO", "MS",
    "MT", "NC", "ND", "NE", "NH", "NJ", "NM", "NV", "NY", "OH", "OK", "OR", "PA",
    "RI", "SC", "SD", "TN", "TX", "UT", "VA", "VT", "WA", "WI", "WV", "WY"};

inline bool is_state_code(std::string_view s) {
  return std::binary_search(kStateCodes.begin(), kStateCodes.end(), s);
}

struct LoadOptions {
  /// Strict loads reject rows with blank required fields; lenient loads skip
  /// them and list the state in Dataset::skipped.
  bool strict = true;
  /// Vintage assigned when the file has no vintage_year column.
  int default_vintage = 2020;
};

namespace detail {

/// Splits one CSV record. Handles double-quoted fields with "" escapes.
inline std::vector<std::string> split_csv(std::string_view line, std::string_view where) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw SchemaError(std::string(where), "unterminated quoted field");
  fields.push_back(std::move(cur));
  return fields;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

template <typename T>
std::optional<T> parse_number(std::string_view s) {
  s = trim(s);
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

/// Shortest decimal text that reads back to the same double.
inline std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

inline std::string quote_csv(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace detail

inline constexpr std::array<std::string_view, 4> kRequiredColumns{
    "state", "electricity_usd_per_kwh", "gas_usd_per_mmbtu", "grid_ci_kg_per_kwh"};
inline constexpr std::array<std::string_view, 2> kOptionalColumns{"vintage_year", "source_note"};

/// Parses state profiles from CSV text. `source` names the input in errors.
inline Dataset parse_state_profiles(std::istream& in, const std::string& source,
                                    const LoadOptions& options = {}) {
  using detail::trim;
  std::string line;
  if (!std::getline(in, line)) throw SchemaError(source, "empty file, header row required");
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);

  std::map<std::string, std::size_t> column;
  {
    const auto header = detail::split_csv(line, source + ":1");
    for (std::size_t i = 0; i < header.size(); ++i) {
      const std::string name(trim(header[i]));
      const bool known =
          std::find(kRequiredColumns.begin(), kRequiredColumns.end(), name) !=
              kRequiredColumns.end() ||
          std::find(kOptionalColumns.begin(), kOptionalColumns.end(), name) !=
              kOptionalColumns.end();
      if (!known) {
        if (options.strict) throw SchemaError(source, "unknown column '" + name + "'");
        continue;
      }
      if (!column.emplace(name, i).second)
        throw SchemaError(source, "duplicate column '" + name + "'");
    }
    for (auto req : kRequiredColumns)
      if (!column.contains(std::string(req)))
        throw SchemaError(source, "missing column '" + std::string(req) + "'");
  }

  Dataset ds;
  ds.source_notes = source;
  std::set<std::string> seen;
  std::optional<int> vintage;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::string where = source + ":" + std::to_string(line_no);
    const auto fields = detail::split_csv(line, where);
    auto field = [&](std::string_view name) -> std::optional<std::string_view> {
      auto it = column.find(std::string(name));
      if (it == column.end()) return std::nullopt;
      if (it->second >= fields.size()) return std::string_view{};
      return trim(fields[it->second]);
    };

    StateEnergyProfile p;
    try {
      p.state = std::string(*field("state"));
      if (p.state.empty()) throw SchemaError(where, "blank state code");
      if (!is_state_code(p.state))
        throw ValidationError(p.state, "state", "not a US postal code (50 states + DC)");

      bool blank = false;
      auto number = [&](std::string_view name) -> double {
        const auto text = *field(name);
        if (text.empty()) {
          blank = true;
          return 0.0;
        }
        auto v = detail::parse_number<double>(text);
        if (!v)
          throw ValidationError(p.state, std::string(name),
                                "not a number: '" + std::string(text) + "'");
        return *v;
      };
      p.electricity_price = number("electricity_usd_per_kwh");
      p.gas_price = number("gas_usd_per_mmbtu");
      p.grid_carbon_intensity = number("grid_ci_kg_per_kwh");
      if (blank) {
        if (options.strict) throw ValidationError(p.state, "", "blank required field");
        ds.skipped.push_back(p.state);
        continue;
      }
      validate(p);

      p.vintage_year = options.default_vintage;
      if (auto v = field("vintage_year"); v && !v->empty()) {
        auto year = detail::parse_number<int>(*v);
        if (!year) throw ValidationError(p.state, "vintage_year", "not an integer year");
        p.vintage_year = *year;
      }
      if (vintage && *vintage != p.vintage_year)
        throw ValidationError(p.state, "vintage_year", "mixed vintages in one dataset");
      vintage = p.vintage_year;
      if (auto n = field("source_note")) p.source_note = std::string(*n);

      if (!seen.insert(p.state).second) throw ValidationError(p.state, "state", "duplicate state");
    } catch (const ValidationError& e) {
      throw ValidationError(where, e);
    }
    ds.profiles.push_back(std::move(p));
  }
  if (ds.profiles.empty()) throw ValidationError("dataset", "", source + " contains no state rows");
  ds.vintage_year = *vintage;
  return ds;
}

inline Dataset load_state_profiles(const std::string& path, const LoadOptions& options = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError(path, "cannot open file");
  return parse_state_profiles(in, path, options);
}

/// Canonical CSV: fixed column order, shortest round-trip numbers, input row
/// order. Loading the output reproduces the dataset field-for-field.
inline void write_state_profiles(const Dataset& ds, std::ostream& out) {
  out << "state,electricity_usd_per_kwh,gas_usd_per_mmbtu,grid_ci_kg_per_kwh,vintage_year,"
         "source_note\n";
  for (const auto& p : ds.profiles) {
    out << p.state << ',' << detail::format_double(p.electricity_price) << ','
        << detail::format_double(p.gas_price) << ','
        << detail::format_double(p.grid_carbon_intensity) << ',' << p.vintage_year << ','
        << detail::quote_csv(p.source_note) << '\n';
  }
}

// =============================================================================
// JSON configuration
// =============================================================================

struct Config {
  std::vector<TechnologyParams> technologies;
  SmrParams smr;
  std::vector<Scenario> scenarios;

  const Scenario& scenario(std::string_view name) const {
    for (const auto& s : scenarios)
      if (s.name() == name) return s;
    throw ValidationError("scenarios", std::string(name), "no such scenario");
  }
};

namespace detail {

using nlohmann::json;

inline void check_keys(const json& obj, std::string_view where,
                       std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw SchemaError(std::string(where), "expected a JSON object");
  for (const auto& [key, _] : obj.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw SchemaError(std::string(where), "unknown key '" + key + "'");
}

inline const json& require_key(const json& obj, std::string_view where, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(std::string(where), "missing key '" + key + "'");
  return *it;
}

inline double get_number(const json& obj, std::string_view where, const std::string& key) {
  const auto& v = require_key(obj, where, key);
  if (!v.is_number()) throw SchemaError(std::string(where), "'" + key + "' must be a number");
  return v.get<double>();
}

inline int get_int(const json& obj, std::string_view where, const std::string& key) {
  const auto& v = require_key(obj, where, key);
  if (!v.is_number_integer()) throw SchemaError(std::string(where), "'" + key + "' must be an integer");
  return v.get<int>();
}

inline std::string get_string(const json& obj, std::string_view where, const std::string& key) {
  const auto& v = require_key(obj, where, key);
  if (!v.is_string()) throw SchemaError(std::string(where), "'" + key + "' must be a string");
  return v.get<std::string>();
}

inline Technology technology_key(const std::string& key, std::string_view where) {
  auto t = parse_technology(key);
  if (!t) throw SchemaError(std::string(where), "unknown technology '" + key + "'");
  return *t;
}

inline TechnologyParams parse_technology_params(Technology t, const json& j) {
  const std::string where = "technologies." + std::string(to_string(t));
  check_keys(j, where,
             {"learning_rate_aps", "learning_rate_nze", "cumulative_production_mw", "capacity_kw",
              "lifetime_khr", "efficiency_kwh_per_kg", "unit_system_cost_usd_per_kw",
              "unit_om_cost_usd_per_yr", "discount_rate"});
  TechnologyParams p;
  p.name = t;
  p.learning_rate_aps = get_number(j, where, "learning_rate_aps");
  p.learning_rate_nze = get_number(j, where, "learning_rate_nze");
  p.cumulative_production_base = get_number(j, where, "cumulative_production_mw");
  p.capacity = get_number(j, where, "capacity_kw");
  p.lifetime = get_number(j, where, "lifetime_khr");
  p.efficiency = get_number(j, where, "efficiency_kwh_per_kg");
  p.unit_system_cost = get_number(j, where, "unit_system_cost_usd_per_kw");
  p.unit_om_cost = get_number(j, where, "unit_om_cost_usd_per_yr");
  p.discount_rate = get_number(j, where, "discount_rate");
  validate(p);
  return p;
}

inline SmrParams parse_smr(const json& j) {
  check_keys(j, "smr",
             {"base_cost_usd_per_kg", "gas_sensitivity", "electricity_sensitivity",
              "ccs_adder_usd_per_kg", "leakage_rate", "emissions_anchors"});
  SmrParams p;
  p.base_cost = get_number(j, "smr", "base_cost_usd_per_kg");
  p.gas_sensitivity = get_number(j, "smr", "gas_sensitivity");
  p.electricity_sensitivity = get_number(j, "smr", "electricity_sensitivity");
  p.ccs_adder = get_number(j, "smr", "ccs_adder_usd_per_kg");
  p.leakage_rate = get_number(j, "smr", "leakage_rate");
  const auto& anchors = require_key(j, "smr", "emissions_anchors");
  if (!anchors.is_array()) throw SchemaError("smr", "'emissions_anchors' must be an array");
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    const std::string where = "smr.emissions_anchors[" + std::to_string(i) + "]";
    check_keys(anchors[i], where, {"leakage", "without_ccs", "with_ccs"});
    p.emissions_anchors.push_back({get_number(anchors[i], where, "leakage"),
                                   get_number(anchors[i], where, "without_ccs"),
                                   get_number(anchors[i], where, "with_ccs")});
  }
  validate(p);
  return p;
}

inline Scenario parse_scenario(const json& j, std::size_t index) {
  std::string where = "scenarios[" + std::to_string(index) + "]";
  check_keys(j, where,
             {"name", "target_year", "learning_case", "cumulative_production_mw",
              "electricity_price", "capacity_factor", "grid", "overrides"});
  const auto name = get_string(j, where, "name");
  where = "scenarios." + name;

  const auto case_text = get_string(j, where, "learning_case");
  const auto learning = parse_learning_case(case_text);
  if (!learning) throw SchemaError(where, "learning_case must be APS or NZE");

  std::map<Technology, double> cumulative;
  if (auto it = j.find("cumulative_production_mw"); it != j.end()) {
    check_keys(*it, where + ".cumulative_production_mw", {"Alkaline", "PEM", "SOEC"});
    for (const auto& [key, value] : it->items()) {
      if (!value.is_number())
        throw SchemaError(where + ".cumulative_production_mw", "'" + key + "' must be a number");
      cumulative[technology_key(key, where)] = value.get<double>();
    }
  }

  ElectricityPriceRule rule = AsDataset{};
  if (auto it = j.find("electricity_price"); it != j.end()) {
    const std::string w = where + ".electricity_price";
    check_keys(*it, w, {"rule", "value"});
    const auto kind = get_string(*it, w, "rule");
    if (kind == "as_dataset") {
      if (it->contains("value")) throw SchemaError(w, "'as_dataset' takes no value");
    } else if (kind == "fixed") {
      rule = FixedPrice{get_number(*it, w, "value")};
    } else if (kind == "multiplier") {
      rule = PriceMultiplier{get_number(*it, w, "value")};
    } else {
      throw SchemaError(w, "rule must be as_dataset, fixed or multiplier");
    }
  }

  GridTrajectory grid = ConstantGrid{};
  if (auto it = j.find("grid"); it != j.end()) {
    const std::string w = where + ".grid";
    check_keys(*it, w, {"trajectory", "zero_year"});
    const auto kind = get_string(*it, w, "trajectory");
    if (kind == "constant") {
      if (it->contains("zero_year")) throw SchemaError(w, "'constant' takes no zero_year");
    } else if (kind == "linear_to_zero") {
      grid = LinearToZero{get_int(*it, w, "zero_year")};
    } else {
      throw SchemaError(w, "trajectory must be constant or linear_to_zero");
    }
  }

  std::map<Technology, TechnologyOverride> overrides;
  if (auto it = j.find("overrides"); it != j.end()) {
    check_keys(*it, where + ".overrides", {"Alkaline", "PEM", "SOEC"});
    for (const auto& [key, value] : it->items()) {
      const std::string w = where + ".overrides." + key;
      check_keys(value, w, {"lifetime_khr", "unit_om_cost_usd_per_yr"});
      TechnologyOverride o;
      if (value.contains("lifetime_khr")) o.lifetime = get_number(value, w, "lifetime_khr");
      if (value.contains("unit_om_cost_usd_per_yr"))
        o.unit_om_cost = get_number(value, w, "unit_om_cost_usd_per_yr");
      overrides[technology_key(key, w)] = o;
    }
  }

  const double cf = j.contains("capacity_factor") ? get_number(j, where, "capacity_factor") : 1.0;
  return Scenario(name, get_int(j, where, "target_year"), *learning, std::move(cumulative), rule,
                  cf, grid, std::move(overrides));
}

}  // namespace detail

/// Builds a Config from parsed JSON. Absent sections take the built-in
/// defaults. A technology listed under `technologies` replaces that
/// technology's defaults as a whole; unlisted technologies keep theirs.
inline Config parse_config(const nlohmann::json& j) {
  using detail::json;
  Config cfg{default_registry(), default_smr_params(), default_scenarios()};
  if (j.is_null()) return cfg;
  detail::check_keys(j, "config", {"technologies", "smr", "scenarios"});

  if (auto it = j.find("technologies"); it != j.end()) {
    detail::check_keys(*it, "technologies", {"Alkaline", "PEM", "SOEC"});
    for (const auto& [key, value] : it->items()) {
      const auto t = detail::technology_key(key, "technologies");
      auto& slot = *std::find_if(cfg.technologies.begin(), cfg.technologies.end(),
                                 [t](const auto& p) { return p.name == t; });
      slot = detail::parse_technology_params(t, value);
    }
  }
  if (auto it = j.find("smr"); it != j.end()) cfg.smr = detail::parse_smr(*it);
  if (auto it = j.find("scenarios"); it != j.end()) {
    if (!it->is_array()) throw SchemaError("scenarios", "expected an array");
    cfg.scenarios.clear();
    std::set<std::string> names;
    for (std::size_t i = 0; i < it->size(); ++i) {
      auto s = detail::parse_scenario((*it)[i], i);
      if (!names.insert(s.name()).second)
        throw ValidationError("scenarios", s.name(), "duplicate scenario name");
      cfg.scenarios.push_back(std::move(s));
    }
  }
  for (const auto& s : cfg.scenarios) s.check(cfg.technologies, std::nullopt);
  return cfg;
}

inline Config parse_config(std::string_view text, const std::string& source = "config") {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos)
    return parse_config(nlohmann::json());
  try {
    return parse_config(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(source, std::string("invalid JSON: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Config load_config(const std::string& path) {
  const auto text = read_file(path);
  try {
    return parse_config(text, path);
  } catch (const SchemaError& e) {
    if (e.where() == path) throw;
    throw SchemaError(path, e.what());
  }
}

/// Canonical JSON form of a full configuration (every section explicit).
inline nlohmann::json config_to_json(const Config& cfg) {
  using nlohmann::json;
  json techs = json::object();
  for (const auto& p : cfg.technologies) {
    techs[std::string(to_string(p.name))] = {
        {"learning_rate_aps", p.learning_rate_aps},
        {"learning_rate_nze", p.learning_rate_nze},
        {"cumulative_production_mw", p.cumulative_production_base},
        {"capacity_kw", p.capacity},
        {"lifetime_khr", p.lifetime},
        {"efficiency_kwh_per_kg", p.efficiency},
        {"unit_system_cost_usd_per_kw", p.unit_system_cost},
        {"unit_om_cost_usd_per_yr", p.unit_om_cost},
        {"discount_rate", p.discount_rate},
    };
  }
  json anchors = json::array();
  for (const auto& a : cfg.smr.emissions_anchors)
    anchors.push_back({{"leakage", a.leakage}, {"without_ccs", a.without_ccs}, {"with_ccs", a.with_ccs}});
  json smr = {{"base_cost_usd_per_kg", cfg.smr.base_cost},
              {"gas_sensitivity", cfg.smr.gas_sensitivity},
              {"electricity_sensitivity", cfg.smr.electricity_sensitivity},
              {"ccs_adder_usd_per_kg", cfg.smr.ccs_adder},
              {"leakage_rate", cfg.smr.leakage_rate},
              {"emissions_anchors", anchors}};

  json scenarios = json::array();
  for (const auto& s : cfg.scenarios) {
    json sj = {{"name", s.name()},
               {"target_year", s.target_year()},
               {"learning_case", std::string(to_string(s.learning_case()))},
               {"capacity_factor", s.capacity_factor()}};
    json cum = json::object();
    for (const auto& [t, mw] : s.cumulative_targets()) cum[std::string(to_string(t))] = mw;
    sj["cumulative_production_mw"] = cum;
    std::visit(
        [&](const auto& r) {
          using R = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<R, AsDataset>)
            sj["electricity_price"] = {{"rule", "as_dataset"}};
          else if constexpr (std::is_same_v<R, FixedPrice>)
            sj["electricity_price"] = {{"rule", "fixed"}, {"value", r.usd_per_kwh}};
          else
            sj["electricity_price"] = {{"rule", "multiplier"}, {"value", r.factor}};
        },
        s.price_rule());
    if (const auto* z = std::get_if<LinearToZero>(&s.grid()))
      sj["grid"] = {{"trajectory", "linear_to_zero"}, {"zero_year", z->zero_year}};
    else
      sj["grid"] = {{"trajectory", "constant"}};
    if (!s.overrides().empty()) {
      json ov = json::object();
      for (const auto& [t, o] : s.overrides()) {
        json oj = json::object();
        if (o.lifetime) oj["lifetime_khr"] = *o.lifetime;
        if (o.unit_om_cost) oj["unit_om_cost_usd_per_yr"] = *o.unit_om_cost;
        ov[std::string(to_string(t))] = oj;
      }
      sj["overrides"] = ov;
    }
    scenarios.push_back(sj);
  }
  return {{"technologies", techs}, {"smr", smr}, {"scenarios", scenarios}};
}

inline std::string dump_config(const Config& cfg) { return config_to_json(cfg).dump(2) + "\n"; }

}  // namespace h2cost
