#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include "finite_difference.hpp"
#include "radix/errors.hpp"
#include "radix/iteration.hpp"

using namespace radix;

namespace {

double sup_deviation_from_one(const GridFunction& f) {
  double out = 0.0;
  for (double v : f.values()) out = std::max(out, std::abs(v - 1.0));
  return out;
}

}  // namespace

TEST(Iteration, HulthenTargetIsFixedPoint) {
  const double lambda = 0.8;
  IterationConfig cfg;
  cfg.max_order = 5;
  cfg.tol_delta = 0.0;  // run every order
  const auto report = iterate(RadialPotential::hulthen(lambda), TrialSystem{HulthenTrial{lambda}}, cfg);
  ASSERT_EQ(report.states.size(), 6u);
  for (const auto& s : report.states) {
    EXPECT_EQ(s.delta, 0.0);
    EXPECT_LT(sup_deviation_from_one(s.f), 1e-12);
  }
}

TEST(Iteration, HulthenTargetConvergesAtFirstOrder) {
  const auto report = iterate(RadialPotential::hulthen(1.1), TrialSystem{HulthenTrial{1.1}}, IterationConfig{});
  EXPECT_TRUE(report.converged);
  EXPECT_EQ(report.stop_reason, StopReason::delta_tol);
  EXPECT_EQ(report.states.size(), 2u);
}

TEST(Iteration, FirstOrderMatchesReferenceRow) {
  const HulthenTrial trial{0.5327};
  const RadialGrid grid = build_grid(trial.lambda());
  const PotentialDifference u{RadialPotential::yukawa(0.25), TrialSystem{trial}};
  const double delta_1 = delta_step(trial, u, GridFunction::constant(grid, 1.0), grid);
  EXPECT_NEAR(delta_1, -0.021796, 5e-7);
}

TEST(Iteration, IterateIsOneAtOrigin) {
  SolverConfig cfg;
  cfg.iteration.max_order = 4;
  cfg.iteration.tol_delta = 0.0;
  const auto sol = solve_ground_state(0.5, cfg);
  for (const auto& s : sol.report.states) {
    EXPECT_EQ(s.f.values()[0], 1.0);
    EXPECT_EQ(s.f(0.0), 1.0);
  }
}

TEST(Iteration, FirstOrderEqualsVariationalEnergy) {
  const auto sol = solve_ground_state(0.7);
  EXPECT_NEAR(sol.report.states[1].energy, sol.variational.E_1, 1e-13);
}

TEST(Iteration, SecondOrderReferenceRows) {
  SolverConfig cfg;
  cfg.iteration.max_order = 2;
  const auto half = solve_ground_state(0.5, cfg);
  EXPECT_NEAR(half.report.states[1].energy, -0.148084, 5e-6);
  EXPECT_NEAR(half.report.states[2].energy, -0.148117, 5e-6);
  EXPECT_EQ(half.report.stop_reason, StopReason::max_order);
  const auto nine = solve_ground_state(0.9, cfg);
  EXPECT_NEAR(nine.report.states[2].energy, -0.0243128, 2e-6);
}

TEST(Iteration, WeakPerturbationBarelyMovesIterate) {
  const HulthenTrial trial{0.4358};
  const RadialGrid grid = build_grid(trial.lambda());
  const PotentialDifference u{RadialPotential::yukawa(0.2), TrialSystem{trial}};
  const GridFunction one = GridFunction::constant(grid, 1.0);
  const double d1 = delta_step(trial, u, one, grid);
  const GridFunction f1 = f_step(trial, u, d1, one, grid);
  EXPECT_EQ(f1.values()[0], 1.0);
  const double d2 = delta_step(trial, u, f1, grid);
  EXPECT_LT(std::abs(d2 - d1), 5e-6);
}

TEST(Iteration, StaleCorrectionViolatesGreenPrecondition) {
  const HulthenTrial trial{1.0};
  const RadialGrid grid = build_grid(1.0);
  const PotentialDifference u{RadialPotential::yukawa(0.5), TrialSystem{trial}};
  const GridFunction one = GridFunction::constant(grid, 1.0);
  const double d1 = delta_step(trial, u, one, grid);
  EXPECT_THROW(f_step(trial, u, d1 + 1e-3, one, grid), PreconditionError);
}

TEST(Iteration, DegenerateIterateDetected) {
  const HulthenTrial trial{1.0};
  const RadialGrid grid = build_grid(1.0);
  const auto nodes = grid.nodes();
  // f = r - c with [f] = 0
  const double c = weighted_bracket(trial, [](double r) { return r; }, grid) /
                   weighted_bracket(trial, [](double) { return 1.0; }, grid);
  std::vector<double> values, slopes;
  for (double r : nodes) {
    values.push_back(r - c);
    slopes.push_back(1.0);
  }
  const GridFunction f(grid, values, slopes);
  const PotentialDifference u{RadialPotential::yukawa(0.5), TrialSystem{trial}};
  EXPECT_THROW(delta_step(trial, u, f, grid), DegenerateIterateError);
}

TEST(Iteration, ShiftLeavesCorrectionsUnchanged) {
  const double c = 0.3;
  const HulthenTrial trial{0.975};
  IterationConfig cfg;
  cfg.max_order = 3;
  cfg.tol_delta = 0.0;
  const auto plain = iterate(RadialPotential::yukawa(0.5), TrialSystem{trial}, cfg);
  const auto shifted = iterate(RadialPotential::yukawa(0.5).shifted(c), TrialSystem{trial, c}, cfg);
  ASSERT_EQ(plain.states.size(), shifted.states.size());
  for (std::size_t n = 0; n < plain.states.size(); ++n) {
    EXPECT_NEAR(plain.states[n].delta, shifted.states[n].delta, 1e-12);
    EXPECT_NEAR(shifted.states[n].energy - plain.states[n].energy, c, 1e-12);
    const auto a = plain.states[n].f.values();
    const auto b = shifted.states[n].f.values();
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-12);
  }
}

TEST(Iteration, SecondOrderImprovesEigenfunction) {
  SolverConfig cfg;
  cfg.iteration.max_order = 2;
  const auto sol = solve_ground_state(0.5, cfg);
  const HulthenTrial trial{sol.variational.lambda_star};
  const GridFunction& f2 = sol.report.states[2].f;
  auto v = [](double r) { return yukawa_eval(0.5, r); };

  auto residual_norm = [&](const fixtures::Fn& psi, double E) {
    const auto nodes = f2.grid().nodes();
    double num = 0.0, den = 0.0;
    for (std::size_t i = 1; i + 1 < nodes.size(); ++i) {
      const double a = nodes[i], b = nodes[i + 1];
      const double r = 0.5 * (a + b);
      const double res = fixtures::hamiltonian_residual(psi, v, E, r, 1e-3 * (b - a));
      num += res * res * r * r * (b - a);
      den += psi(r) * psi(r) * r * r * (b - a);
    }
    return std::sqrt(num / den);
  };
  const double before = residual_norm([&](double r) { return trial.phi(r); }, sol.report.states[1].energy);
  const double after = residual_norm([&](double r) { return trial.phi(r) * f2(r); }, sol.report.states[2].energy);
  EXPECT_LT(after, before);
}

TEST(Iteration, HigherOrdersSettle) {
  SolverConfig cfg;
  cfg.iteration.max_order = 8;
  const auto sol = solve_ground_state(1.0, cfg);
  const auto& res = sol.report.residuals;
  ASSERT_GE(res.size(), 3u);
  for (std::size_t k = 3; k < res.size(); ++k) EXPECT_LE(res[k], res[k - 1]);
}

TEST(Iteration, ConvergedIterateSatisfiesFixedPointEquation) {
  SolverConfig cfg;
  cfg.iteration.max_order = 40;
  cfg.iteration.tol_delta = 1e-9;
  cfg.iteration.tol_f = 1e-9;
  const auto sol = solve_ground_state(0.5, cfg);
  ASSERT_TRUE(sol.report.converged);
  const TrialSystem reference{HulthenTrial{sol.variational.lambda_star}};
  const double residual = fixed_point_residual(RadialPotential::yukawa(0.5), reference, sol.report.last().f);
  EXPECT_LT(residual, 10 * cfg.iteration.tol_delta);
}

TEST(Wavefunction, UnitNorm) {
  const auto sol = solve_ground_state(0.5);
  const HulthenTrial trial{sol.variational.lambda_star};
  const GridFunction& f = sol.report.last().f;
  const auto psi = normalized_wavefunction(trial, f);
  const double scale = psi[0].second / (trial.phi(0.0) * f(0.0));
  EXPECT_GT(scale, 0.0);
  // re-integrate with an adaptive rule that does not know the grid
  auto density = [&](double r) {
    const double v = scale * trial.phi(r) * f(r);
    return v * v * r * r;
  };
  const double norm = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      density, 0.0, f.grid().r_max(), 15, 1e-13);
  EXPECT_NEAR(norm, 1.0, 1e-8);
}

TEST(Iteration, ReportsDivergence) {
  // the Coulomb target is too far from a lambda = 1 trial for the map to contract
  IterationConfig cfg;
  cfg.max_order = 20;
  const auto report = iterate(RadialPotential::coulomb(), TrialSystem{HulthenTrial{1.0}}, cfg);
  EXPECT_EQ(report.stop_reason, StopReason::divergence);
  EXPECT_FALSE(report.converged);
  EXPECT_FALSE(report.diagnostic.empty());
}
