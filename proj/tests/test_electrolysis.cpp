#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "h2cost/electrolysis.hpp"

using namespace h2cost;

namespace {

const TechnologyParams kAlk = find_technology(default_registry(), Technology::Alkaline);
const TechnologyParams kPem = find_technology(default_registry(), Technology::PEM);
const TechnologyParams kSoec = find_technology(default_registry(), Technology::SOEC);

// Expected values below come from a 30-digit mpmath evaluation of the same
// closed forms, independent of this code.
constexpr double kAlkAnnuity = 5.29812518876962;
constexpr double kSoecAnnuity = 3.79682601797225;

AnnuityFactor fixed_annuity(double value) { return {value, 0.07, 0.0}; }

}  // namespace

TEST(CapitalCost, PlantCost)
{
  EXPECT_EQ(capital_cost(kAlk), 7'500'000.0);
  EXPECT_EQ(capital_cost(kSoec), 2'500'000.0);
  auto free = kAlk;
  free.unit_system_cost = 0.0;
  EXPECT_EQ(capital_cost(free), 0.0);
}

TEST(OmCost, DiscountedFixedOm)
{
  EXPECT_NEAR(om_cost(kSoec, fixed_annuity(3.797)), 75'940.0, 1e-6);
  EXPECT_NEAR(om_cost(kAlk, fixed_annuity(5.298)), 9'536.4, 1e-6);
  EXPECT_NEAR(om_cost(kAlk, annuity_for(kAlk, 1.0)), 9'536.62533978532, 1e-6);
  auto none = kAlk;
  none.unit_om_cost = 0.0;
  EXPECT_EQ(om_cost(none, fixed_annuity(5.298)), 0.0);
}

TEST(ElectricityCost, DiscountedPurchases)
{
  EXPECT_NEAR(electricity_cost(0.1, kAlk, fixed_annuity(5.298), 1.0), 46'410'480.0, 1e-4);
  EXPECT_NEAR(electricity_cost(0.1, kSoec, fixed_annuity(3.797), 1.0), 3'326'172.0, 1e-5);
  EXPECT_EQ(electricity_cost(0.0, kPem, fixed_annuity(6.0), 1.0), 0.0);
  EXPECT_NEAR(electricity_cost(0.1, kAlk, annuity_for(kAlk, 1.0), 1.0), 46'411'576.6536219, 1e-4);
}

TEST(HydrogenProduction, DiscountedOutput)
{
  EXPECT_NEAR(hydrogen_production(kAlk, fixed_annuity(5.298), 1.0), 8'287'585.714, 1e-3);
  EXPECT_NEAR(hydrogen_production(kSoec, fixed_annuity(3.797), 1.0), 755'948.18, 1e-2);
  const auto a = fixed_annuity(5.0);
  EXPECT_DOUBLE_EQ(hydrogen_production(kPem, a, 0.5), 0.5 * hydrogen_production(kPem, a, 1.0));
}

TEST(Lcoh, TableWorkedExample)
{
  EXPECT_NEAR(lcoh(kAlk, 0.1, 1.0).lcoh, 6.50609731739465, 1e-11);
  EXPECT_NEAR(lcoh(kPem, 0.1, 1.0).lcoh, 6.21310803237064, 1e-11);
  EXPECT_NEAR(lcoh(kSoec, 0.1, 1.0).lcoh, 7.80771314688485, 1e-11);
  EXPECT_EQ(std::lround(lcoh(kAlk, 0.1, 1.0).lcoh), 7);
  EXPECT_EQ(std::lround(lcoh(kPem, 0.1, 1.0).lcoh), 6);
  EXPECT_EQ(std::lround(lcoh(kSoec, 0.1, 1.0).lcoh), 8);

  const auto b = lcoh(kAlk, 0.1, 1.0);
  EXPECT_NEAR(b.hydrogen_production, 8'287'781.54528962, 1e-6);
  EXPECT_NEAR(annuity_for(kAlk, 1.0).value, kAlkAnnuity, 1e-12);
  EXPECT_NEAR(annuity_for(kSoec, 1.0).value, kSoecAnnuity, 1e-12);
}

TEST(Lcoh, ZeroElectricityDecomposition)
{
  for (const auto& p : default_registry()) {
    const auto b = lcoh(p, 0.0, 1.0);
    EXPECT_EQ(b.electricity_cost, 0.0);
    EXPECT_DOUBLE_EQ(b.lcoh, (b.capital_cost + b.om_cost) / b.hydrogen_production);
  }
}

TEST(Lcoh, PropagatesDomainErrors)
{
  EXPECT_THROW(lcoh(kAlk, 0.05, 0.0), DomainError);
  EXPECT_THROW(lcoh(kAlk, -0.01, 1.0), DomainError);
}

namespace {

TechnologyParams random_params(std::mt19937_64& rng)
{
  std::uniform_real_distribution<double> u(0.0, 1.0);
  TechnologyParams p;
  p.name = Technology::PEM;
  p.capacity = 100.0 + 1e5 * u(rng);
  p.lifetime = 5.0 + 150.0 * u(rng);
  p.efficiency = 35.0 + 30.0 * u(rng);
  p.unit_system_cost = 5000.0 * u(rng);
  p.unit_om_cost = 1e5 * u(rng);
  p.discount_rate = 0.15 * u(rng);
  p.learning_rate_aps = p.learning_rate_nze = 0.1;
  p.cumulative_production_base = 1.0;
  return p;
}

}  // namespace

TEST(LcohProperties, AffineInPriceWithEfficiencySlope)
{
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> price(0.0, 0.5), cf(0.05, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_params(rng);
    const double c = cf(rng), e = price(rng);
    const double expected = lcoh(p, 0.0, c).lcoh + p.efficiency * e;
    EXPECT_LE(std::abs(lcoh(p, e, c).lcoh - expected), 1e-12 * expected);
  }
}

TEST(LcohProperties, BreakdownConservation)
{
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> price(0.0, 0.5), cf(0.05, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const auto b = lcoh(random_params(rng), price(rng), cf(rng));
    EXPECT_GE(b.capital_cost, 0.0);
    EXPECT_GE(b.om_cost, 0.0);
    EXPECT_GE(b.electricity_cost, 0.0);
    EXPECT_LE(std::abs(b.lcoh * b.hydrogen_production - b.total_cost()), 1e-12 * b.total_cost());
  }
}

TEST(LcohProperties, CapacityFactorInvariantWithoutDiscountingOrOm)
{
  for (auto p : default_registry()) {
    p.discount_rate = 0.0;
    p.unit_om_cost = 0.0;
    const double full = lcoh(p, 0.05, 1.0).lcoh;
    for (double cf : {0.1, 0.33, 0.5, 0.9})
      EXPECT_LE(std::abs(lcoh(p, 0.05, cf).lcoh - full), 1e-9 * full);
  }
}

TEST(LcohProperties, DecreasingInLifetime)
{
  for (auto p : default_registry()) {
    double previous = lcoh(p, 0.1, 1.0).lcoh;
    for (int i = 0; i < 20; ++i) {
      p.lifetime *= 1.1;
      const double current = lcoh(p, 0.1, 1.0).lcoh;
      EXPECT_LT(current, previous);
      previous = current;
    }
  }
}

TEST(CarbonIntensity, GridTimesConsumption)
{
  EXPECT_NEAR(carbon_intensity(0.2, kAlk).carbon_intensity, 11.2, 1e-12);
  EXPECT_NEAR(carbon_intensity(0.2, kPem).carbon_intensity, 10.2, 1e-12);
  EXPECT_NEAR(carbon_intensity(0.2, kSoec).carbon_intensity, 8.8, 1e-12);
  EXPECT_EQ(std::lround(carbon_intensity(0.2, kAlk).carbon_intensity), 11);
  EXPECT_EQ(std::lround(carbon_intensity(0.2, kSoec).carbon_intensity), 9);
  EXPECT_EQ(carbon_intensity(0.0, kPem).carbon_intensity, 0.0);
  EXPECT_EQ(carbon_intensity(0.2, kSoec).pathway, Pathway::SOEC);
  EXPECT_EQ(carbon_intensity(0.2, kSoec, "WA").state, "WA");
  EXPECT_THROW(carbon_intensity(-0.1, kPem), DomainError);
}

TEST(CarbonIntensity, LinearInGridAndEfficiency)
{
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> g(0.0, 1.0), k(0.5, 3.0);
  for (int i = 0; i < 200; ++i) {
    auto p = kPem;
    const double grid = g(rng), scale = k(rng);
    const double base = carbon_intensity(grid, p).carbon_intensity;
    EXPECT_NEAR(carbon_intensity(grid * scale, p).carbon_intensity, base * scale, 1e-12 * base * scale + 1e-15);
    p.efficiency *= scale;
    EXPECT_NEAR(carbon_intensity(grid, p).carbon_intensity, base * scale, 1e-12 * base * scale + 1e-15);
  }
}
