#pragma once

#include <string>
#include <vector>

#include "h2cost/model.hpp"

namespace h2cost {

/// One vintage of per-state energy data. Loaders guarantee at least one
/// profile, unique state codes and a single vintage.
struct Dataset {
  std::vector<StateEnergyProfile> profiles;
  int vintage_year = 0;
  std::string source_notes;
  /// Rows dropped by a lenient load because required fields were blank.
  std::vector<std::string> skipped;

  const StateEnergyProfile* find(std::string_view state) const {
    for (const auto& p : profiles)
      if (p.state == state) return &p;
    return nullptr;
  }
};

}  // namespace h2cost
