#pragma once

// Stage one: choose the Hulthen screening lambda that minimises <H> of the
// target Hamiltonian. Because H = H_lambda + U and H_lambda Phi = E_lambda Phi,
// the Rayleigh quotient reduces to E_lambda + [U]/[1]; no derivative of Phi is
// ever taken.

#include "radix/potentials.hpp"
#include "radix/quadrature.hpp"

namespace radix {

struct VariationalResult {
  double alpha = 0.0;
  double lambda_star = 0.0;
  double E_lambda = 0.0;
  double delta_1 = 0.0;
  double E_1 = 0.0;
  int evaluations = 0;
  /// lambda_star > 1.95: the trial is close to losing its bound state.
  bool near_threshold = false;
};

struct LambdaBounds {
  double lo = 0.02;
  double hi = 1.99;
};

/// <Phi_lambda| H |Phi_lambda> / <Phi_lambda|Phi_lambda> for H = -1/2 Laplacian + V.
double expectation_energy(double lambda, const RadialPotential& target, const GridConfig& cfg = {});

/// Same, for the Yukawa target.
double expectation_energy(double lambda, double alpha, const GridConfig& cfg = {});

/// Bounded Brent minimisation of expectation_energy over lambda.
/// Throws NoInteriorMinimumError when the best probe sits on a bound.
VariationalResult minimize_lambda(const RadialPotential& target, LambdaBounds bounds = {}, double tol = 1e-6,
                                  const GridConfig& cfg = {});

VariationalResult minimize_lambda(double alpha, LambdaBounds bounds = {}, double tol = 1e-6,
                                  const GridConfig& cfg = {});

/// Fills a VariationalResult for a fixed lambda (no search).
VariationalResult evaluate_lambda(const RadialPotential& target, double lambda, const GridConfig& cfg = {});

}  // namespace radix
