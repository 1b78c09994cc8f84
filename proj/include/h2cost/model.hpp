#pragma once

// Domain types shared by every module: technology parameters, per-state
// energy data, SMR surrogate settings and projection scenarios.

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "h2cost/error.hpp"

namespace h2cost {

inline constexpr double kHoursPerYear = 8760.0;

// =============================================================================
// Enumerations
// =============================================================================

enum class Technology { Alkaline, PEM, SOEC };

inline constexpr std::array<Technology, 3> kTechnologies{Technology::Alkaline, Technology::PEM,
                                                         Technology::SOEC};

/// Production route reported in result tables. The first three mirror
/// Technology; the SMR routes are the fossil comparators.
enum class Pathway { Alkaline, PEM, SOEC, SMR, SMR_CCS };

inline constexpr std::array<Pathway, 5> kPathways{Pathway::Alkaline, Pathway::PEM, Pathway::SOEC,
                                                  Pathway::SMR, Pathway::SMR_CCS};

enum class LearningCase { APS, NZE };

constexpr std::string_view to_string(Technology t) noexcept {
  switch (t) {
    case Technology::Alkaline: return "Alkaline";
    case Technology::PEM: return "PEM";
    case Technology::SOEC: return "SOEC";
  }
  return "?";
}

constexpr std::string_view to_string(Pathway p) noexcept {
  switch (p) {
    case Pathway::Alkaline: return "Alkaline";
    case Pathway::PEM: return "PEM";
    case Pathway::SOEC: return "SOEC";
    case Pathway::SMR: return "SMR";
    case Pathway::SMR_CCS: return "SMR+CCS";
  }
  return "?";
}

constexpr std::string_view to_string(LearningCase c) noexcept {
  return c == LearningCase::APS ? "APS" : "NZE";
}

inline std::optional<Technology> parse_technology(std::string_view s) {
  for (auto t : kTechnologies)
    if (to_string(t) == s) return t;
  return std::nullopt;
}

inline std::optional<Pathway> parse_pathway(std::string_view s) {
  for (auto p : kPathways)
    if (to_string(p) == s) return p;
  return std::nullopt;
}

inline std::optional<LearningCase> parse_learning_case(std::string_view s) {
  if (s == "APS") return LearningCase::APS;
  if (s == "NZE") return LearningCase::NZE;
  return std::nullopt;
}

constexpr Pathway pathway_of(Technology t) noexcept {
  switch (t) {
    case Technology::Alkaline: return Pathway::Alkaline;
    case Technology::PEM: return Pathway::PEM;
    case Technology::SOEC: return Pathway::SOEC;
  }
  return Pathway::Alkaline;
}

constexpr bool is_electrolysis(Pathway p) noexcept {
  return p == Pathway::Alkaline || p == Pathway::PEM || p == Pathway::SOEC;
}

// =============================================================================
// Technology parameters
// =============================================================================

/// Economic and physical description of one electrolyser technology.
struct TechnologyParams {
  Technology name = Technology::Alkaline;
  double learning_rate_aps = 0.0;           ///< fraction per capacity doubling
  double learning_rate_nze = 0.0;           ///< fraction per capacity doubling
  double cumulative_production_base = 0.0;  ///< installed capacity at base year, MW
  double capacity = 0.0;                    ///< plant size, kW
  double lifetime = 0.0;                    ///< stack life, thousands of operating hours
  double efficiency = 0.0;                  ///< specific consumption, kWh/kg-H2
  double unit_system_cost = 0.0;            ///< USD/kW
  double unit_om_cost = 0.0;                ///< USD/yr
  double discount_rate = 0.0;               ///< fraction per year

  double learning_rate(LearningCase c) const noexcept {
    return c == LearningCase::APS ? learning_rate_aps : learning_rate_nze;
  }

  friend bool operator==(const TechnologyParams&, const TechnologyParams&) = default;
};

namespace detail {

inline bool finite(double v) noexcept { return std::isfinite(v); }

inline void require(bool ok, std::string_view subject, std::string_view field,
                    std::string_view what) {
  if (!ok) throw ValidationError(std::string(subject), std::string(field), std::string(what));
}

}  // namespace detail

/// Throws ValidationError naming the technology and field on the first
/// violated invariant. Zero discount rate, zero O&M and zero unit cost are
/// admitted so limiting cases stay expressible.
inline void validate(const TechnologyParams& p) {
  using detail::finite;
  using detail::require;
  const auto who = to_string(p.name);
  auto unit_interval = [&](double v, std::string_view field) {
    require(finite(v) && v >= 0.0 && v < 1.0, who, field, "must lie in [0, 1)");
  };
  auto positive = [&](double v, std::string_view field) {
    require(finite(v) && v > 0.0, who, field, "must be > 0");
  };
  auto non_negative = [&](double v, std::string_view field) {
    require(finite(v) && v >= 0.0, who, field, "must be >= 0");
  };
  unit_interval(p.learning_rate_aps, "learning_rate_aps");
  unit_interval(p.learning_rate_nze, "learning_rate_nze");
  unit_interval(p.discount_rate, "discount_rate");
  positive(p.cumulative_production_base, "cumulative_production_base");
  positive(p.capacity, "capacity");
  positive(p.lifetime, "lifetime");
  positive(p.efficiency, "efficiency");
  non_negative(p.unit_system_cost, "unit_system_cost");
  non_negative(p.unit_om_cost, "unit_om_cost");
}

/// Built-in registry: IRENA / IEA / company figures for the three
/// electrolyser families.
inline std::vector<TechnologyParams> default_registry() {
  return {
      {Technology::Alkaline, 0.145, 0.140, 20'000.0, 10'000.0, 60.0, 56.0, 750.0, 1'800.0, 0.07},
      {Technology::PEM, 0.140, 0.135, 90.0, 10'000.0, 75.0, 51.0, 1'200.0, 1'500.0, 0.07},
      {Technology::SOEC, 0.105, 0.100, 2.0, 1'000.0, 40.0, 44.0, 2'500.0, 20'000.0, 0.07},
  };
}

/// Looks up a technology in a registry; throws ValidationError if absent.
inline const TechnologyParams& find_technology(const std::vector<TechnologyParams>& registry,
                                               Technology t) {
  for (const auto& p : registry)
    if (p.name == t) return p;
  throw ValidationError(std::string(to_string(t)), "", "technology missing from registry");
}
inline TechnologyParams find_technology(std::vector<TechnologyParams>&& registry, Technology t) {
  return find_technology(registry, t);
}

// =============================================================================
// State data
// =============================================================================

struct StateEnergyProfile {
  std::string state;                   ///< two-letter postal code (DC included)
  double electricity_price = 0.0;      ///< industrial, USD/kWh
  double gas_price = 0.0;              ///< industrial, USD/MMBtu
  double grid_carbon_intensity = 0.0;  ///< kg CO2e/kWh
  int vintage_year = 0;
  std::string source_note;

  friend bool operator==(const StateEnergyProfile&, const StateEnergyProfile&) = default;
};

inline void validate(const StateEnergyProfile& s) {
  using detail::finite;
  using detail::require;
  require(finite(s.electricity_price) && s.electricity_price > 0.0, s.state,
          "electricity_usd_per_kwh", "must be > 0");
  require(finite(s.gas_price) && s.gas_price > 0.0, s.state, "gas_usd_per_mmbtu", "must be > 0");
  require(finite(s.grid_carbon_intensity) && s.grid_carbon_intensity >= 0.0, s.state,
          "grid_ci_kg_per_kwh", "must be >= 0");
}

// =============================================================================
// Results
// =============================================================================

/// Discounted lifetime totals behind one levelized cost.
struct LcohBreakdown {
  double capital_cost = 0.0;         ///< USD
  double om_cost = 0.0;              ///< USD, discounted
  double electricity_cost = 0.0;     ///< USD, discounted
  double hydrogen_production = 0.0;  ///< kg-H2, discounted
  double lcoh = 0.0;                 ///< USD/kg-H2

  double total_cost() const noexcept { return capital_cost + om_cost + electricity_cost; }
};

struct EmissionsResult {
  double carbon_intensity = 0.0;  ///< kg CO2e/kg-H2
  Pathway pathway = Pathway::Alkaline;
  std::optional<std::string> state;
};

// =============================================================================
// SMR surrogate
// =============================================================================

/// Life-cycle SMR emissions at one upstream methane leakage rate.
struct EmissionsAnchor {
  double leakage = 0.0;      ///< fraction of produced gas
  double without_ccs = 0.0;  ///< kg CO2e/kg-H2
  double with_ccs = 0.0;     ///< kg CO2e/kg-H2, 90% CO2 capture

  friend bool operator==(const EmissionsAnchor&, const EmissionsAnchor&) = default;
};

/// Affine cost surrogate plus leakage-indexed emissions table. The cost
/// coefficients stand in for a full plant model that is only ever driven by
/// the two energy prices.
struct SmrParams {
  double base_cost = 0.0;                ///< USD/kg-H2
  double gas_sensitivity = 0.0;          ///< USD/kg-H2 per USD/MMBtu
  double electricity_sensitivity = 0.0;  ///< USD/kg-H2 per USD/kWh
  double ccs_adder = 0.0;                ///< USD/kg-H2
  std::vector<EmissionsAnchor> emissions_anchors;
  double leakage_rate = 0.0;

  friend bool operator==(const SmrParams&, const SmrParams&) = default;
};

inline void validate(const SmrParams& p) {
  using detail::finite;
  using detail::require;
  require(finite(p.base_cost), "smr", "base_cost", "must be finite");
  require(finite(p.gas_sensitivity) && p.gas_sensitivity >= 0.0, "smr", "gas_sensitivity",
          "must be >= 0");
  require(finite(p.electricity_sensitivity) && p.electricity_sensitivity >= 0.0, "smr",
          "electricity_sensitivity", "must be >= 0");
  require(finite(p.ccs_adder) && p.ccs_adder >= 0.0, "smr", "ccs_adder", "must be >= 0");
  require(finite(p.leakage_rate) && p.leakage_rate >= 0.0 && p.leakage_rate < 1.0, "smr",
          "leakage_rate", "must lie in [0, 1)");
  require(p.emissions_anchors.size() >= 2, "smr", "emissions_anchors",
          "at least two anchors required");
  for (std::size_t i = 0; i < p.emissions_anchors.size(); ++i) {
    const auto& a = p.emissions_anchors[i];
    require(finite(a.leakage) && finite(a.without_ccs) && finite(a.with_ccs), "smr",
            "emissions_anchors", "values must be finite");
    require(a.without_ccs >= 0.0 && a.with_ccs >= 0.0, "smr", "emissions_anchors",
            "emissions must be >= 0");
    if (i > 0)
      require(a.leakage > p.emissions_anchors[i - 1].leakage, "smr", "emissions_anchors",
              "leakage values must be strictly increasing");
  }
}

/// Shipped surrogate defaults. base_cost is calibrated so the unweighted mean
/// SMR cost over the reference 2020 dataset is 1.0 USD/kg. The 0.015 -> 0.080
/// segment is pinned so a 3.0% leakage interpolates to 12.9 / 5.3 kg/kg; the
/// methane increment is identical in both columns because capture removes CO2
/// only.
inline SmrParams default_smr_params() {
  return SmrParams{
      .base_cost = 0.1523,
      .gas_sensitivity = 0.16,
      .electricity_sensitivity = 0.03,
      .ccs_adder = 0.4,
      .emissions_anchors = {{0.002, 10.5, 2.9},
                            {0.015, 11.6, 4.0},
                            {0.080, 17.233333333333334, 9.633333333333333}},
      .leakage_rate = 0.030,
  };
}

// =============================================================================
// Scenarios
// =============================================================================

struct AsDataset {
  friend bool operator==(const AsDataset&, const AsDataset&) = default;
};
struct FixedPrice {
  double usd_per_kwh = 0.0;
  friend bool operator==(const FixedPrice&, const FixedPrice&) = default;
};
struct PriceMultiplier {
  double factor = 1.0;
  friend bool operator==(const PriceMultiplier&, const PriceMultiplier&) = default;
};
using ElectricityPriceRule = std::variant<AsDataset, FixedPrice, PriceMultiplier>;

struct ConstantGrid {
  friend bool operator==(const ConstantGrid&, const ConstantGrid&) = default;
};
struct LinearToZero {
  int zero_year = 0;
  friend bool operator==(const LinearToZero&, const LinearToZero&) = default;
};
using GridTrajectory = std::variant<ConstantGrid, LinearToZero>;

/// Optional per-technology replacements applied on projection.
struct TechnologyOverride {
  std::optional<double> lifetime;      ///< thousands of operating hours
  std::optional<double> unit_om_cost;  ///< USD/yr
  friend bool operator==(const TechnologyOverride&, const TechnologyOverride&) = default;
};

/// A named projection: which year, how much capacity has been built, how
/// electricity is priced and how the grid decarbonizes. Immutable once built;
/// the constructor rejects anything that violates an invariant checkable
/// without the registry or dataset (see check()).
class Scenario {
 public:
  Scenario(std::string name, int target_year, LearningCase learning_case,
           std::map<Technology, double> cumulative_production_target,
           ElectricityPriceRule price_rule, double capacity_factor, GridTrajectory grid,
           std::map<Technology, TechnologyOverride> overrides = {})
      : name_(std::move(name)),
        target_year_(target_year),
        learning_case_(learning_case),
        cumulative_target_(std::move(cumulative_production_target)),
        price_rule_(price_rule),
        capacity_factor_(capacity_factor),
        grid_(grid),
        overrides_(std::move(overrides)) {
    using detail::finite;
    using detail::require;
    require(!name_.empty(), "scenario", "name", "must not be empty");
    require(finite(capacity_factor_) && capacity_factor_ > 0.0 && capacity_factor_ <= 1.0, name_,
            "capacity_factor", "must lie in (0, 1]");
    for (const auto& [tech, mw] : cumulative_target_)
      require(finite(mw) && mw > 0.0, name_, "cumulative_production_mw." + std::string(to_string(tech)),
              "must be > 0");
    if (const auto* f = std::get_if<FixedPrice>(&price_rule_))
      require(finite(f->usd_per_kwh) && f->usd_per_kwh >= 0.0, name_, "electricity_price.value",
              "must be >= 0");
    if (const auto* m = std::get_if<PriceMultiplier>(&price_rule_))
      require(finite(m->factor) && m->factor >= 0.0, name_, "electricity_price.value",
              "must be >= 0");
    if (const auto* z = std::get_if<LinearToZero>(&grid_))
      require(z->zero_year > 0, name_, "grid.zero_year", "must be a calendar year");
    for (const auto& [tech, o] : overrides_) {
      const auto field = "overrides." + std::string(to_string(tech));
      if (o.lifetime)
        require(finite(*o.lifetime) && *o.lifetime > 0.0, name_, field + ".lifetime_khr",
                "must be > 0");
      if (o.unit_om_cost)
        require(finite(*o.unit_om_cost) && *o.unit_om_cost >= 0.0, name_,
                field + ".unit_om_cost_usd_per_yr", "must be >= 0");
    }
  }

  const std::string& name() const noexcept { return name_; }
  int target_year() const noexcept { return target_year_; }
  LearningCase learning_case() const noexcept { return learning_case_; }
  const ElectricityPriceRule& price_rule() const noexcept { return price_rule_; }
  double capacity_factor() const noexcept { return capacity_factor_; }
  const GridTrajectory& grid() const noexcept { return grid_; }
  const std::map<Technology, double>& cumulative_targets() const noexcept {
    return cumulative_target_;
  }
  const std::map<Technology, TechnologyOverride>& overrides() const noexcept { return overrides_; }

  /// Installed capacity at target_year; technologies without an explicit
  /// target stay at their base (no learning).
  double cumulative_target(const TechnologyParams& p) const {
    auto it = cumulative_target_.find(p.name);
    return it == cumulative_target_.end() ? p.cumulative_production_base : it->second;
  }

  std::optional<TechnologyOverride> override_for(Technology t) const {
    auto it = overrides_.find(t);
    if (it == overrides_.end()) return std::nullopt;
    return it->second;
  }

  /// Cross-checks against a registry and dataset base year.
  void check(const std::vector<TechnologyParams>& registry, std::optional<int> base_year) const {
    using detail::require;
    for (const auto& p : registry)
      require(cumulative_target(p) >= p.cumulative_production_base, name_,
              "cumulative_production_mw." + std::string(to_string(p.name)),
              "below the technology's base cumulative production");
    if (base_year) {
      require(target_year_ >= *base_year, name_, "target_year", "precedes the dataset base year");
      if (const auto* z = std::get_if<LinearToZero>(&grid_))
        require(z->zero_year > *base_year, name_, "grid.zero_year",
                "must be after the dataset base year");
    }
  }

  friend bool operator==(const Scenario&, const Scenario&) = default;

 private:
  std::string name_;
  int target_year_;
  LearningCase learning_case_;
  std::map<Technology, double> cumulative_target_;
  ElectricityPriceRule price_rule_;
  double capacity_factor_;
  GridTrajectory grid_;
  std::map<Technology, TechnologyOverride> overrides_;
};

/// Scenario set used when a config omits the `scenarios` section.
inline std::vector<Scenario> default_scenarios() {
  return {Scenario("base-2020", 2020, LearningCase::APS, {}, AsDataset{}, 1.0, ConstantGrid{})};
}

}  // namespace h2cost
