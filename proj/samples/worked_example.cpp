// Worked example: the three electrolysers at 0.10 USD/kWh and a
// 0.2 kg CO2e/kWh grid, then the same plants after learning to 2050.

#include <cstdio>

#include "h2cost/h2cost.hpp"

int main() {
  using namespace h2cost;
  std::printf("%-9s %8s %12s %10s\n", "tech", "PVIFA", "LCOH $/kg", "CI kg/kg");
  for (const auto& p : default_registry()) {
    const auto a = annuity_for(p, 1.0);
    const auto b = lcoh(p, 0.10, 1.0);
    const auto ci = carbon_intensity(0.2, p);
    std::printf("%-9s %8.3f %12.2f %10.1f\n", std::string(to_string(p.name)).c_str(), a.value,
                b.lcoh, ci.carbon_intensity);
  }

  // Same capacity for everyone by 2050, O&M negligible, stacks last twice as long.
  std::map<Technology, double> built{{Technology::Alkaline, 3.6e6},
                                     {Technology::PEM, 3.6e6},
                                     {Technology::SOEC, 3.6e6}};
  std::map<Technology, TechnologyOverride> longer;
  for (const auto& p : default_registry()) longer[p.name] = {p.lifetime * 2.0, 0.0};
  const Scenario y2050("2050", 2050, LearningCase::APS, built, FixedPrice{0.02}, 1.0,
                       ConstantGrid{}, longer);

  std::printf("\n2050 at 2 c/kWh\n");
  for (const auto& p : default_registry()) {
    const auto q = project_params(p, y2050);
    std::printf("%-9s %8.0f $/kW %8.2f $/kg\n", std::string(to_string(p.name)).c_str(),
                q.unit_system_cost, lcoh(q, 0.02, 1.0).lcoh);
  }
}
