#pragma once

// Steam-methane reforming comparator: affine cost surrogate driven by the two
// energy prices, and leakage-interpolated life-cycle emissions.

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "h2cost/error.hpp"
#include "h2cost/model.hpp"

namespace h2cost {

/// Piecewise-linear lookup on strictly increasing knots. No extrapolation;
/// a query that hits a knot returns that knot's value bit-for-bit.
inline double interpolate(std::span<const double> xs, std::span<const double> ys, double x) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw DomainError("interpolate: need at least two matching knots");
  if (!(x >= xs.front() && x <= xs.back()))
    throw DomainError("interpolate: " + std::to_string(x) + " outside [" +
                      std::to_string(xs.front()) + ", " + std::to_string(xs.back()) + "]");
  const auto it = std::lower_bound(xs.begin(), xs.end(), x);
  const auto hi = static_cast<std::size_t>(it - xs.begin());
  if (*it == x) return ys[hi];
  const std::size_t lo = hi - 1;
  return ys[lo] + (ys[hi] - ys[lo]) * ((x - xs[lo]) / (xs[hi] - xs[lo]));
}

inline double smr_lcoh(const SmrParams& params, const StateEnergyProfile& profile, bool with_ccs) {
  return params.base_cost + params.gas_sensitivity * profile.gas_price +
         params.electricity_sensitivity * profile.electricity_price +
         (with_ccs ? params.ccs_adder : 0.0);
}

/// Life-cycle emissions at params.leakage_rate. Throws DomainError when the
/// rate falls outside the anchor table.
inline EmissionsResult smr_emissions(const SmrParams& params, bool with_ccs) {
  std::vector<double> xs, ys;
  xs.reserve(params.emissions_anchors.size());
  ys.reserve(params.emissions_anchors.size());
  for (const auto& a : params.emissions_anchors) {
    xs.push_back(a.leakage);
    ys.push_back(with_ccs ? a.with_ccs : a.without_ccs);
  }
  try {
    return {interpolate(xs, ys, params.leakage_rate), with_ccs ? Pathway::SMR_CCS : Pathway::SMR,
            std::nullopt};
  } catch (const DomainError& e) {
    throw DomainError("SMR leakage rate outside the emissions anchor table (" +
                      std::string(e.what()) + ")");
  }
}

}  // namespace h2cost
