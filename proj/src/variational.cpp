#include "radix/variational.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include <boost/math/tools/minima.hpp>

#include "radix/errors.hpp"

namespace radix {

namespace {

// Binary digits for boost's Brent search so that its bracket tolerance
// 2^(1-bits) |x| + 2^(1-bits)/4 stays near `tol` for |x| < 2.
int bits_for(double tol) {
  const int bits = 1 + static_cast<int>(std::ceil(-std::log2(tol / 4.0)));
  return std::clamp(bits, 4, 26);
}

}  // namespace

double expectation_energy(double lambda, const RadialPotential& target, const GridConfig& cfg) {
  const TrialSystem reference{HulthenTrial{lambda}};
  const RadialGrid grid = build_grid(lambda, cfg);
  const PotentialDifference u{target, reference};
  const double numerator = weighted_bracket(reference.trial, u, grid);
  const double norm = weighted_bracket(reference.trial, [](double) { return 1.0; }, grid);
  return reference.energy() + numerator / norm;
}

double expectation_energy(double lambda, double alpha, const GridConfig& cfg) {
  return expectation_energy(lambda, RadialPotential::yukawa(alpha), cfg);
}

VariationalResult evaluate_lambda(const RadialPotential& target, double lambda, const GridConfig& cfg) {
  VariationalResult out;
  out.alpha = target.screening();
  out.lambda_star = lambda;
  out.E_lambda = hulthen_energy(lambda);
  out.E_1 = expectation_energy(lambda, target, cfg);
  out.delta_1 = out.E_1 - out.E_lambda;
  out.evaluations = 1;
  out.near_threshold = lambda > 1.95;
  return out;
}

VariationalResult minimize_lambda(const RadialPotential& target, LambdaBounds bounds, double tol,
                                  const GridConfig& cfg) {
  if (!(bounds.lo > 0.0 && bounds.lo < bounds.hi && bounds.hi < 2.0)) {
    throw DomainError("lambda bounds must satisfy 0 < lo < hi < 2");
  }
  if (!(tol > 0.0)) throw DomainError("lambda tolerance must be positive");

  int evaluations = 0;
  auto objective = [&](double lambda) {
    ++evaluations;
    return expectation_energy(lambda, target, cfg);
  };

  std::uintmax_t max_iter = 200;
  const auto [lambda_star, energy] = boost::math::tools::brent_find_minima(objective, bounds.lo, bounds.hi,
                                                                           bits_for(tol), max_iter);

  // Brent never probes the bounds themselves; a minimiser pressed against one
  // of them means the objective is monotone on the interval.
  const double edge = 4.0 * tol;
  if (lambda_star - bounds.lo < edge || bounds.hi - lambda_star < edge) {
    const double value_lo = objective(bounds.lo);
    const double value_hi = objective(bounds.hi);
    if (std::min(value_lo, value_hi) <= energy) {
      throw NoInteriorMinimumError(bounds.lo, bounds.hi, value_lo, value_hi);
    }
  }

  VariationalResult out;
  out.alpha = target.screening();
  out.lambda_star = lambda_star;
  out.E_lambda = hulthen_energy(lambda_star);
  out.E_1 = energy;
  out.delta_1 = energy - out.E_lambda;
  out.evaluations = evaluations;
  out.near_threshold = lambda_star > 1.95;
  return out;
}

VariationalResult minimize_lambda(double alpha, LambdaBounds bounds, double tol, const GridConfig& cfg) {
  return minimize_lambda(RadialPotential::yukawa(alpha), bounds, tol, cfg);
}

}  // namespace radix
