#include <cmath>

#include <gtest/gtest.h>

#include "finite_difference.hpp"
#include "radix/errors.hpp"
#include "radix/variational.hpp"
#include "reference_table.hpp"

using namespace radix;

TEST(Expectation, ReferenceRowsAtPrintedLambda) {
  EXPECT_NEAR(expectation_energy(0.9750, 0.5), -0.148084, 5e-6);
  EXPECT_NEAR(expectation_energy(1.7374, 1.0), -0.0101583, 5e-7);
}

TEST(Expectation, HulthenTargetGivesTrialEnergy) {
  for (double lambda : {0.4, 1.3}) {
    EXPECT_NEAR(expectation_energy(lambda, RadialPotential::hulthen(lambda)), hulthen_energy(lambda), 1e-15);
  }
}

TEST(Expectation, MatchesFiniteDifferenceRayleighQuotient) {
  for (double lambda : {0.5, 1.0}) {
    for (double alpha : {0.2, 0.5}) {
      const HulthenTrial trial{lambda};
      auto psi = [&](double r) { return trial.phi(r); };
      auto v = [&](double r) { return yukawa_eval(alpha, r); };
      const double fd = fixtures::rayleigh_quotient(psi, v, 70.0 / (2.0 - lambda), 400000);
      EXPECT_NEAR(expectation_energy(lambda, alpha), fd, 1e-6) << "lambda=" << lambda << " alpha=" << alpha;
    }
  }
}

TEST(Minimize, ReferenceLambdas) {
  const auto r01 = minimize_lambda(0.1);
  EXPECT_NEAR(r01.lambda_star, 0.2296, 5e-4);
  const auto r02 = minimize_lambda(0.2);
  EXPECT_NEAR(r02.lambda_star, 0.4358, 5e-4);
  EXPECT_NEAR(r02.E_1, -0.326808, 5e-6);
  const auto r115 = minimize_lambda(1.15);
  EXPECT_NEAR(r115.lambda_star, 1.9473, 5e-4);
  EXPECT_NEAR(r115.E_1, -0.000412961, 5e-9);
}

TEST(Minimize, ResultIsConsistent) {
  const auto res = minimize_lambda(0.5);
  EXPECT_NEAR(res.E_1, res.E_lambda + res.delta_1, 1e-15);
  EXPECT_DOUBLE_EQ(res.E_lambda, hulthen_energy(res.lambda_star));
  EXPECT_GT(res.evaluations, 3);
  EXPECT_FALSE(res.near_threshold);
  // local minimum to probe resolution
  for (double step : {-1e-4, 1e-4}) EXPECT_GE(expectation_energy(res.lambda_star + step, 0.5), res.E_1 - 1e-13);
}

TEST(Minimize, StaysAboveTrueGroundState) {
  // the shooting reference for alpha = 0.5 is -0.148117
  EXPECT_GT(minimize_lambda(0.5).E_1, -0.148117);
}

TEST(Minimize, CoulombLimit) {
  const auto res = minimize_lambda(1e-3, LambdaBounds{1e-4, 1.99});
  EXPECT_LT(res.lambda_star, 0.01);
  EXPECT_NEAR(res.E_1, -0.5, 2e-3);
}

TEST(Minimize, FlagsMonotoneObjective) {
  // for a weak target the best lambda lies far below this window
  EXPECT_THROW(minimize_lambda(0.1, LambdaBounds{1.0, 1.9}), NoInteriorMinimumError);
}

TEST(Minimize, RejectsBadBounds) {
  EXPECT_THROW(minimize_lambda(0.5, LambdaBounds{1.0, 0.5}), DomainError);
  EXPECT_THROW(minimize_lambda(0.5, LambdaBounds{0.1, 2.0}), DomainError);
}

TEST(Minimize, NearThresholdFlag) {
  EXPECT_TRUE(evaluate_lambda(RadialPotential::yukawa(1.2), 1.97).near_threshold);
  EXPECT_FALSE(evaluate_lambda(RadialPotential::yukawa(1.0), 1.7374).near_threshold);
}
