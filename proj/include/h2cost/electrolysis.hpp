#pragma once

// Levelized cost and carbon intensity of electrolytic hydrogen for one
// technology at one electricity price and grid intensity.

#include <optional>
#include <string>

#include "h2cost/finance.hpp"
#include "h2cost/model.hpp"

namespace h2cost {

/// Annuity over the technology's life at the given capacity factor.
inline AnnuityFactor annuity_for(const TechnologyParams& params, double capacity_factor) {
  return pvifa(params.discount_rate, lifetime_hours_to_years(params.lifetime, capacity_factor));
}

/// Up-front plant cost, USD.
inline double capital_cost(const TechnologyParams& params) {
  return params.unit_system_cost * params.capacity;
}

/// Discounted lifetime fixed O&M, USD.
inline double om_cost(const TechnologyParams& params, const AnnuityFactor& annuity) {
  return params.unit_om_cost * annuity.value;
}

/// Discounted lifetime electricity purchases, USD. Power is only bought
/// while the plant runs.
inline double electricity_cost(double price, const TechnologyParams& params,
                               const AnnuityFactor& annuity, double capacity_factor) {
  return price * params.capacity * kHoursPerYear * capacity_factor * annuity.value;
}

/// Discounted lifetime hydrogen output, kg.
inline double hydrogen_production(const TechnologyParams& params, const AnnuityFactor& annuity,
                                  double capacity_factor) {
  return params.capacity * kHoursPerYear * capacity_factor * annuity.value / params.efficiency;
}

inline LcohBreakdown lcoh(const TechnologyParams& params, double price, double capacity_factor) {
  if (!(price >= 0.0)) throw DomainError("electricity price must be >= 0");
  const auto annuity = annuity_for(params, capacity_factor);
  LcohBreakdown b;
  b.capital_cost = capital_cost(params);
  b.om_cost = om_cost(params, annuity);
  b.electricity_cost = electricity_cost(price, params, annuity, capacity_factor);
  b.hydrogen_production = hydrogen_production(params, annuity, capacity_factor);
  b.lcoh = b.total_cost() / b.hydrogen_production;
  return b;
}

/// Grid intensity times specific energy consumption.
inline EmissionsResult carbon_intensity(double grid_ci, const TechnologyParams& params,
                                        std::optional<std::string> state = std::nullopt) {
  if (!(grid_ci >= 0.0)) throw DomainError("grid carbon intensity must be >= 0");
  return {grid_ci * params.efficiency, pathway_of(params.name), std::move(state)};
}

}  // namespace h2cost
