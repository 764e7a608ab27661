#pragma once

// Stage two: Green-function refinement of the trial. With Psi = Phi f,
//
//   Delta_n = [U f_{n-1}] / [f_{n-1}]
//   f_n     = 1 + G((U - Delta_n) f_{n-1})
//
// starting from f_0 = 1, Delta_0 = 0. Delta_n is always formed from f_{n-1}
// on the same grid before f_n, which makes the Green source bracket vanish.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "radix/potentials.hpp"
#include "radix/quadrature.hpp"
#include "radix/variational.hpp"

namespace radix {

struct IterationConfig {
  int max_order = 8;
  /// Stop once |Delta_n - Delta_{n-1}| < tol_delta.
  double tol_delta = 1e-9;
  /// Optional second stopping test, max_nodes |f_n - f_{n-1}| < tol_f.
  /// Zero disables it.
  double tol_f = 0.0;
};

struct SolverConfig {
  GridConfig grid;
  IterationConfig iteration;
  LambdaBounds bounds;
  double lambda_tol = 1e-6;
  /// Skip the variational search and use this lambda.
  std::optional<double> pinned_lambda;
};

struct IterationState {
  int order = 0;
  GridFunction f;
  double delta = 0.0;
  /// E0 + delta.
  double energy = 0.0;
};

enum class StopReason { delta_tol, max_order, divergence };

std::string_view to_string(StopReason reason);

struct IterationReport {
  std::vector<IterationState> states;
  bool converged = false;
  StopReason stop_reason = StopReason::max_order;
  /// residuals[n - 1] = |Delta_n - Delta_{n-1}|.
  std::vector<double> residuals;
  /// sup-norm change of the iterate per order, aligned with residuals.
  std::vector<double> iterate_changes;
  /// Reference energy E0 the corrections are added to.
  double reference_energy = 0.0;
  /// Set when the run stopped on divergence or a degenerate iterate.
  std::string diagnostic;

  const IterationState& last() const { return states.back(); }
};

/// [U f_prev] / [f_prev]. Throws DegenerateIterateError when [f_prev] is
/// below 1e-8 [|f_prev|].
double delta_step(const HulthenTrial& phi, const RadialFunction& U, const GridFunction& f_prev,
                  const RadialGrid& grid);

/// 1 + G((U - delta_n) f_prev). A nonzero source bracket (delta_n not formed
/// from f_prev on this grid) surfaces as PreconditionError.
GridFunction f_step(const HulthenTrial& phi, const RadialFunction& U, double delta_n, const GridFunction& f_prev,
                    const RadialGrid& grid);

/// Runs the refinement for a fixed reference system.
IterationReport iterate(const RadialPotential& target, const TrialSystem& reference, const IterationConfig& cfg,
                        const GridConfig& grid_cfg = {});

struct GroundStateSolution {
  VariationalResult variational;
  IterationReport report;
};

/// Variational lambda for the Yukawa potential followed by the refinement.
GroundStateSolution solve_ground_state(double alpha, const SolverConfig& cfg = {});

/// Same for any Coulomb-core target.
GroundStateSolution solve_ground_state(const RadialPotential& target, const SolverConfig& cfg = {});

/// max over nodes of |f - 1 - G((U - Delta) f)| with Delta = [U f]/[f].
double fixed_point_residual(const RadialPotential& target, const TrialSystem& reference, const GridFunction& f);

/// (r_i, Psi(r_i)) at the grid nodes with Psi = Phi f normalised to
/// \int Psi^2 r^2 dr = 1.
std::vector<std::pair<double, double>> normalized_wavefunction(const HulthenTrial& phi, const GridFunction& f);

}  // namespace radix
