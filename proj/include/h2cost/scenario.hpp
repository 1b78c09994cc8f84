#pragma once

// Projection of technology parameters and grid intensity through time, plus
// the breakeven and crossover questions built on top of them.

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <variant>

#include "h2cost/dataset.hpp"
#include "h2cost/electrolysis.hpp"
#include "h2cost/finance.hpp"
#include "h2cost/model.hpp"

namespace h2cost {

/// Parameters as they stand in the scenario's target year: unit system cost
/// moved down the learning curve, then any lifetime / O&M override applied.
inline TechnologyParams project_params(const TechnologyParams& params, const Scenario& scenario) {
  TechnologyParams out = params;
  out.unit_system_cost =
      wright_capital_cost(params.unit_system_cost, params.learning_rate(scenario.learning_case()),
                          params.cumulative_production_base, scenario.cumulative_target(params));
  if (auto o = scenario.override_for(params.name)) {
    if (o->lifetime) out.lifetime = *o->lifetime;
    if (o->unit_om_cost) out.unit_om_cost = *o->unit_om_cost;
  }
  return out;
}

inline double effective_electricity_price(const StateEnergyProfile& profile,
                                          const ElectricityPriceRule& rule) {
  struct Visitor {
    double price;
    double operator()(const AsDataset&) const { return price; }
    double operator()(const FixedPrice& f) const { return f.usd_per_kwh; }
    double operator()(const PriceMultiplier& m) const { return m.factor * price; }
  };
  return std::visit(Visitor{profile.electricity_price}, rule);
}

/// Fraction of the base-year grid intensity left in `query_year`.
inline double grid_scale_at(const GridTrajectory& trajectory, int base_year, int query_year) {
  if (query_year < base_year)
    throw DomainError("query year " + std::to_string(query_year) + " precedes base year " +
                      std::to_string(base_year));
  if (std::holds_alternative<ConstantGrid>(trajectory)) return 1.0;
  const int zero_year = std::get<LinearToZero>(trajectory).zero_year;
  if (zero_year <= base_year)
    throw DomainError("decarbonization year " + std::to_string(zero_year) +
                      " must be after base year " + std::to_string(base_year));
  if (query_year >= zero_year) return 0.0;
  return static_cast<double>(zero_year - query_year) / static_cast<double>(zero_year - base_year);
}

inline double grid_ci_at(double base_ci, const GridTrajectory& trajectory, int base_year,
                         int query_year) {
  return base_ci * grid_scale_at(trajectory, base_year, query_year);
}

/// Electricity price at which the technology's LCOH equals `target_lcoh`.
/// LCOH is affine in price with slope equal to the specific consumption, so
/// the root is closed-form. Returns nullopt when even free electricity
/// cannot reach the target.
inline std::optional<double> breakeven_electricity_price(const TechnologyParams& params,
                                                         double capacity_factor,
                                                         double target_lcoh) {
  const double floor = lcoh(params, 0.0, capacity_factor).lcoh;
  if (!(target_lcoh >= floor)) return std::nullopt;
  return (target_lcoh - floor) / params.efficiency;
}

/// Unweighted mean over states and over the given technologies of the
/// electrolytic carbon intensity, expressed as a multiple of the grid scale
/// factor (CI(year) = this * grid_scale_at(year)).
inline double mean_base_electrolysis_ci(const Dataset& dataset,
                                        std::span<const TechnologyParams> techs) {
  if (dataset.profiles.empty() || techs.empty())
    throw DomainError("crossover: empty dataset or technology set");
  double mean_grid = 0.0;
  for (const auto& p : dataset.profiles) mean_grid += p.grid_carbon_intensity;
  mean_grid /= static_cast<double>(dataset.profiles.size());
  double mean_eff = 0.0;
  for (const auto& t : techs) mean_eff += t.efficiency;
  mean_eff /= static_cast<double>(techs.size());
  return mean_grid * mean_eff;
}

/// First integer year at or after the dataset vintage in which the average
/// electrolytic carbon intensity (over states, and over `techs` when several
/// are given) is strictly below `smr_ci_target`. nullopt if that never
/// happens, e.g. a constant grid that starts above the target.
inline std::optional<int> crossover_year(const Dataset& dataset,
                                         std::span<const TechnologyParams> techs,
                                         const GridTrajectory& trajectory, double smr_ci_target) {
  const int base = dataset.vintage_year;
  const double start = mean_base_electrolysis_ci(dataset, techs);
  auto below = [&](int year) { return start * grid_scale_at(trajectory, base, year) < smr_ci_target; };
  if (below(base)) return base;
  if (std::holds_alternative<ConstantGrid>(trajectory) || !(smr_ci_target > 0.0))
    return std::nullopt;
  const int zero_year = std::get<LinearToZero>(trajectory).zero_year;
  // start * (z - y) / (z - b) < target  <=>  y > z - target * (z - b) / start
  const double bound = zero_year - smr_ci_target * (zero_year - base) / start;
  int year = std::max(base + 1, static_cast<int>(std::floor(bound)) + 1);
  // Guard the floor against rounding at the boundary.
  while (year > base + 1 && below(year - 1)) --year;
  while (!below(year)) ++year;
  return year;
}

inline std::optional<int> crossover_year(const Dataset& dataset, const TechnologyParams& tech,
                                         const GridTrajectory& trajectory, double smr_ci_target) {
  return crossover_year(dataset, std::span<const TechnologyParams>(&tech, 1), trajectory,
                        smr_ci_target);
}

}  // namespace h2cost
