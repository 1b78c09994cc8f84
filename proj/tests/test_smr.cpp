#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "h2cost/smr.hpp"

using namespace h2cost;

namespace {

StateEnergyProfile profile(double elec, double gas)
{
  return {"TX", elec, gas, 0.4, 2020, ""};
}

}  // namespace

TEST(SmrCost, CcsAdderIsConstant)
{
  const auto p = default_smr_params();
  for (double gas : {1.0, 2.17, 5.5, 24.1})
    for (double elec : {0.047, 0.1, 0.227}) {
      const auto s = profile(elec, gas);
      EXPECT_NEAR(smr_lcoh(p, s, true) - smr_lcoh(p, s, false), 0.4, 1e-12);
    }
}

TEST(SmrCost, InterceptAtZeroPrices)
{
  auto p = default_smr_params();
  StateEnergyProfile s = profile(0.0, 0.0);
  EXPECT_EQ(smr_lcoh(p, s, false), p.base_cost);
  EXPECT_EQ(smr_lcoh(p, s, true), p.base_cost + p.ccs_adder);
}

TEST(SmrCost, AffineSensitivitiesByFiniteDifference)
{
  const auto p = default_smr_params();
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> gas(1.0, 20.0), elec(0.03, 0.3);
  for (int i = 0; i < 200; ++i) {
    const double g = gas(rng), e = elec(rng), dg = 0.5, de = 0.25;
    const double dgas = (smr_lcoh(p, profile(e, g + dg), false) - smr_lcoh(p, profile(e, g), false)) / dg;
    const double delec = (smr_lcoh(p, profile(e + de, g), false) - smr_lcoh(p, profile(e, g), false)) / de;
    EXPECT_NEAR(dgas, p.gas_sensitivity, 1e-12 * 20);
    EXPECT_NEAR(delec, p.electricity_sensitivity, 1e-12 * 20);
  }
}

TEST(SmrCost, InterceptCannotChangeRanking)
{
  auto p = default_smr_params();
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> gas(1.0, 20.0), elec(0.03, 0.3);
  std::vector<StateEnergyProfile> states;
  for (int i = 0; i < 50; ++i) states.push_back(profile(elec(rng), gas(rng)));
  auto variable = [&](const StateEnergyProfile& s) {
    return p.gas_sensitivity * s.gas_price + p.electricity_sensitivity * s.electricity_price;
  };
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = 0; j < states.size(); ++j)
      EXPECT_EQ(smr_lcoh(p, states[i], false) < smr_lcoh(p, states[j], false),
                variable(states[i]) < variable(states[j]));
}

TEST(SmrEmissions, ThreePercentLeakage)
{
  const auto p = default_smr_params();
  EXPECT_EQ(smr_emissions(p, false).carbon_intensity, 12.9);
  EXPECT_EQ(smr_emissions(p, true).carbon_intensity, 5.3);
  EXPECT_EQ(smr_emissions(p, true).pathway, Pathway::SMR_CCS);
}

TEST(SmrEmissions, AnchorsAreFixedPoints)
{
  auto p = default_smr_params();
  for (const auto& a : p.emissions_anchors) {
    p.leakage_rate = a.leakage;
    EXPECT_EQ(smr_emissions(p, false).carbon_intensity, a.without_ccs);
    EXPECT_EQ(smr_emissions(p, true).carbon_intensity, a.with_ccs);
  }
}

TEST(SmrEmissions, NoExtrapolation)
{
  auto p = default_smr_params();
  p.leakage_rate = 0.001;
  EXPECT_THROW(smr_emissions(p, false), DomainError);
  p.leakage_rate = 0.09;
  EXPECT_THROW(smr_emissions(p, true), DomainError);
}

TEST(SmrEmissions, MonotoneAndCaptureNeverWorse)
{
  auto p = default_smr_params();
  double prev_without = -1.0, prev_with = -1.0;
  for (int i = 0; i <= 780; ++i) {
    p.leakage_rate = 0.002 + i * 0.0001;
    if (p.leakage_rate > 0.08) p.leakage_rate = 0.08;
    const double without = smr_emissions(p, false).carbon_intensity;
    const double with = smr_emissions(p, true).carbon_intensity;
    EXPECT_GE(without, prev_without);
    EXPECT_GE(with, prev_with);
    EXPECT_LE(with, without);
    prev_without = without;
    prev_with = with;
  }
}

TEST(Interpolate, PiecewiseLinear)
{
  const std::vector<double> xs{0.0, 1.0, 3.0}, ys{0.0, 10.0, 30.0};
  EXPECT_DOUBLE_EQ(interpolate(xs, ys, 0.5), 5.0);
  EXPECT_DOUBLE_EQ(interpolate(xs, ys, 2.0), 20.0);
  EXPECT_EQ(interpolate(xs, ys, 3.0), 30.0);
  EXPECT_THROW(interpolate(xs, ys, 3.5), DomainError);
  EXPECT_THROW(interpolate(std::vector<double>{1.0}, std::vector<double>{1.0}, 1.0), DomainError);
}
