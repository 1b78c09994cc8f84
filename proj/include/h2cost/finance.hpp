#pragma once

// Time-value-of-money and learning-curve primitives.

#include <cmath>
#include <string>

#include "h2cost/error.hpp"
#include "h2cost/model.hpp"

namespace h2cost {

/// Present value of one unit paid at the end of each year for `years` years.
struct AnnuityFactor {
  double value = 0.0;  ///< discounted years
  double rate = 0.0;   ///< fraction per year
  double years = 0.0;
};

/// (1 - (1 + r)^-n) / r, with the analytic limit n at r = 0.
/// Evaluated through expm1/log1p so small rates do not cancel.
inline AnnuityFactor pvifa(double discount_rate, double lifetime_years) {
  if (!(discount_rate >= 0.0) || !std::isfinite(discount_rate))
    throw DomainError("pvifa: discount rate must be >= 0, got " + std::to_string(discount_rate));
  if (!(lifetime_years > 0.0) || !std::isfinite(lifetime_years))
    throw DomainError("pvifa: lifetime must be > 0 years, got " + std::to_string(lifetime_years));
  if (discount_rate == 0.0) return {lifetime_years, 0.0, lifetime_years};
  const double value = -std::expm1(-lifetime_years * std::log1p(discount_rate)) / discount_rate;
  return {value, discount_rate, lifetime_years};
}

/// Calendar years needed to accumulate the rated operating hours when the
/// plant runs a `capacity_factor` share of the year.
inline double lifetime_hours_to_years(double lifetime_thousand_hours, double capacity_factor) {
  if (!(lifetime_thousand_hours > 0.0))
    throw DomainError("lifetime must be > 0 thousand hours");
  if (!(capacity_factor > 0.0 && capacity_factor <= 1.0))
    throw DomainError("capacity factor must lie in (0, 1], got " + std::to_string(capacity_factor));
  return 1000.0 * lifetime_thousand_hours / (kHoursPerYear * capacity_factor);
}

/// Wright's law: unit cost falls by `learning_rate` with every doubling of
/// cumulative installed capacity.
inline double wright_capital_cost(double base_unit_cost, double learning_rate,
                                  double cumulative_base, double cumulative_target) {
  if (!(base_unit_cost >= 0.0)) throw DomainError("unit cost must be >= 0");
  if (!(learning_rate >= 0.0 && learning_rate < 1.0))
    throw DomainError("learning rate must lie in [0, 1)");
  if (!(cumulative_base > 0.0)) throw DomainError("base cumulative production must be > 0");
  if (!(cumulative_target >= cumulative_base))
    throw DomainError("cumulative production cannot decrease (target " +
                      std::to_string(cumulative_target) + " MW < base " +
                      std::to_string(cumulative_base) + " MW)");
  if (cumulative_target == cumulative_base || learning_rate == 0.0) return base_unit_cost;
  const double doublings = std::log2(cumulative_target / cumulative_base);
  return base_unit_cost * std::pow(1.0 - learning_rate, doublings);
}

}  // namespace h2cost
