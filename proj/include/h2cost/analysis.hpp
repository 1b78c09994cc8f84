#pragma once

// Cross-state, cross-pathway analytics: result tables, averages, rankings and
// the cost/carbon Pareto frontier.

#include <algorithm>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "h2cost/dataset.hpp"
#include "h2cost/electrolysis.hpp"
#include "h2cost/model.hpp"
#include "h2cost/scenario.hpp"
#include "h2cost/smr.hpp"

namespace h2cost {

struct StateResult {
  std::string state;
  Pathway pathway = Pathway::Alkaline;
  double lcoh = 0.0;              ///< USD/kg-H2
  double carbon_intensity = 0.0;  ///< kg CO2e/kg-H2

  friend bool operator==(const StateResult&, const StateResult&) = default;
};

enum class Metric { Lcoh, CarbonIntensity };

inline double metric_value(const StateResult& r, Metric m) noexcept {
  return m == Metric::Lcoh ? r.lcoh : r.carbon_intensity;
}

/// One row per (state, pathway), ordered by state then pathway. Electrolysis
/// rows use the scenario's projected parameters, price rule, capacity factor
/// and grid trajectory evaluated at the target year; SMR rows use the
/// dataset prices directly.
inline std::vector<StateResult> state_table(const Dataset& dataset,
                                            const std::vector<TechnologyParams>& registry,
                                            const SmrParams& smr, const Scenario& scenario) {
  std::vector<TechnologyParams> projected;
  projected.reserve(kTechnologies.size());
  for (auto t : kTechnologies) {
    const auto& base = find_technology(registry, t);
    try {
      projected.push_back(project_params(base, scenario));
    } catch (const DomainError& e) {
      throw DomainError("technology " + std::string(to_string(t)) + ": " + e.what());
    }
  }
  const double smr_ci = smr_emissions(smr, false).carbon_intensity;
  const double smr_ccs_ci = smr_emissions(smr, true).carbon_intensity;

  std::vector<const StateEnergyProfile*> order;
  for (const auto& p : dataset.profiles) order.push_back(&p);
  std::sort(order.begin(), order.end(),
            [](const auto* a, const auto* b) { return a->state < b->state; });

  std::vector<StateResult> rows;
  rows.reserve(order.size() * kPathways.size());
  const double cf = scenario.capacity_factor();
  for (const auto* profile : order) {
    const double price = effective_electricity_price(*profile, scenario.price_rule());
    for (const auto& params : projected) {
      try {
        const double grid = grid_ci_at(profile->grid_carbon_intensity, scenario.grid(),
                                       dataset.vintage_year, scenario.target_year());
        rows.push_back({profile->state, pathway_of(params.name), lcoh(params, price, cf).lcoh,
                        carbon_intensity(grid, params).carbon_intensity});
      } catch (const DomainError& e) {
        throw DomainError("state " + profile->state + ", technology " +
                          std::string(to_string(params.name)) + ": " + e.what());
      }
    }
    rows.push_back({profile->state, Pathway::SMR, smr_lcoh(smr, *profile, false), smr_ci});
    rows.push_back({profile->state, Pathway::SMR_CCS, smr_lcoh(smr, *profile, true), smr_ccs_ci});
  }
  return rows;
}

struct Average {
  double lcoh = 0.0;
  double carbon_intensity = 0.0;
  std::size_t count = 0;
};

/// Unweighted mean over the rows of one pathway.
inline Average national_average(std::span<const StateResult> results, Pathway pathway) {
  Average a;
  for (const auto& r : results) {
    if (r.pathway != pathway) continue;
    a.lcoh += r.lcoh;
    a.carbon_intensity += r.carbon_intensity;
    ++a.count;
  }
  if (a.count == 0)
    throw DomainError("no results for pathway " + std::string(to_string(pathway)));
  a.lcoh /= static_cast<double>(a.count);
  a.carbon_intensity /= static_cast<double>(a.count);
  return a;
}

/// `a` dominates `b` when it is no worse in both cost and carbon and
/// strictly better in at least one.
inline bool dominates(const StateResult& a, const StateResult& b) noexcept {
  return a.lcoh <= b.lcoh && a.carbon_intensity <= b.carbon_intensity &&
         (a.lcoh < b.lcoh || a.carbon_intensity < b.carbon_intensity);
}

/// Non-dominated subset minimizing both LCOH and carbon intensity, returned
/// in ascending LCOH order. Identical points are all kept. O(n log n).
inline std::vector<StateResult> pareto_frontier(std::span<const StateResult> results) {
  std::vector<const StateResult*> sorted;
  sorted.reserve(results.size());
  for (const auto& r : results) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) {
    return std::tie(a->lcoh, a->carbon_intensity) < std::tie(b->lcoh, b->carbon_intensity);
  });

  std::vector<StateResult> frontier;
  bool have_best = false;
  double best_ci = 0.0;  // lowest CI among strictly cheaper points
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j]->lcoh == sorted[i]->lcoh) ++j;
    const double group_min = sorted[i]->carbon_intensity;
    if (!have_best || group_min < best_ci) {
      for (std::size_t k = i; k < j && sorted[k]->carbon_intensity == group_min; ++k)
        frontier.push_back(*sorted[k]);
      best_ci = group_min;
      have_best = true;
    }
    i = j;
  }
  return frontier;
}

/// Rows of one pathway sorted ascending by metric; ties go to the lower
/// state code.
inline std::vector<StateResult> rank_states(std::span<const StateResult> results, Metric metric,
                                            Pathway pathway) {
  std::vector<StateResult> out;
  for (const auto& r : results)
    if (r.pathway == pathway) out.push_back(r);
  std::stable_sort(out.begin(), out.end(), [metric](const auto& a, const auto& b) {
    const double va = metric_value(a, metric), vb = metric_value(b, metric);
    if (va != vb) return va < vb;
    return a.state < b.state;
  });
  return out;
}

/// Number of states whose carbon intensity on `pathway` is strictly below
/// the threshold.
inline std::size_t count_below(std::span<const StateResult> results, Pathway pathway,
                               double threshold_ci) {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [&](const auto& r) {
    return r.pathway == pathway && r.carbon_intensity < threshold_ci;
  }));
}

/// Rows restricted to the electrolysis pathways.
inline std::vector<StateResult> electrolysis_rows(std::span<const StateResult> results) {
  std::vector<StateResult> out;
  for (const auto& r : results)
    if (is_electrolysis(r.pathway)) out.push_back(r);
  return out;
}

/// Sorted, de-duplicated state codes appearing in a result set.
inline std::vector<std::string> states_of(std::span<const StateResult> results) {
  std::vector<std::string> out;
  for (const auto& r : results) out.push_back(r.state);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace h2cost
