#include "radix/iteration.hpp"

#include <algorithm>
#include <cmath>

#include "radix/errors.hpp"

namespace radix {

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::delta_tol:
      return "delta_tol";
    case StopReason::max_order:
      return "max_order";
    case StopReason::divergence:
      return "divergence";
  }
  return "unknown";
}

double delta_step(const HulthenTrial& phi, const RadialFunction& U, const GridFunction& f_prev,
                  const RadialGrid& grid) {
  const double numerator = weighted_bracket(phi, [&](double r) { return U(r) * f_prev(r); }, grid);
  const double denominator = weighted_bracket(phi, [&](double r) { return f_prev(r); }, grid);
  const double scale = absolute_bracket(phi, [&](double r) { return f_prev(r); }, grid);
  if (!(std::abs(denominator) >= 1e-8 * scale) || scale == 0.0) {
    throw DegenerateIterateError("iterate bracket [f] = " + std::to_string(denominator) +
                                 " is degenerate against [|f|] = " + std::to_string(scale));
  }
  return numerator / denominator;
}

GridFunction f_step(const HulthenTrial& phi, const RadialFunction& U, double delta_n, const GridFunction& f_prev,
                    const RadialGrid& grid) {
  const GridFunction h =
      green_apply(phi, [&](double r) { return (U(r) - delta_n) * f_prev(r); }, grid);
  std::vector<double> values(h.values().begin(), h.values().end());
  for (double& v : values) v += 1.0;
  return GridFunction(grid, std::move(values), std::vector<double>(h.slopes().begin(), h.slopes().end()));
}

namespace {

double max_node_difference(const GridFunction& a, const GridFunction& b) {
  double out = 0.0;
  const auto va = a.values();
  const auto vb = b.values();
  for (std::size_t i = 0; i < va.size(); ++i) out = std::max(out, std::abs(va[i] - vb[i]));
  return out;
}

}  // namespace

IterationReport iterate(const RadialPotential& target, const TrialSystem& reference, const IterationConfig& cfg,
                        const GridConfig& grid_cfg) {
  const HulthenTrial& phi = reference.trial;
  const RadialGrid grid = build_grid(phi.lambda(), grid_cfg);
  const PotentialDifference u{target, reference};
  const RadialFunction U = u;

  IterationReport report;
  report.reference_energy = reference.energy();
  report.states.push_back({0, GridFunction::constant(grid, 1.0), 0.0, reference.energy()});

  int growth_streak = 0;
  for (int n = 1; n <= cfg.max_order; ++n) {
    const IterationState& prev = report.states.back();
    double delta = 0.0;
    std::optional<GridFunction> f;
    try {
      delta = delta_step(phi, U, prev.f, grid);
      f = f_step(phi, U, delta, prev.f, grid);
    } catch (const std::exception& e) {
      report.stop_reason = StopReason::divergence;
      report.diagnostic = "order " + std::to_string(n) + ": " + e.what();
      return report;
    }
    if (!std::isfinite(delta)) {
      report.stop_reason = StopReason::divergence;
      report.diagnostic = "order " + std::to_string(n) + ": non-finite energy correction";
      return report;
    }

    const double residual = std::abs(delta - prev.delta);
    const double change = max_node_difference(*f, prev.f);
    if (!report.residuals.empty() && residual > report.residuals.back()) {
      ++growth_streak;
    } else {
      growth_streak = 0;
    }
    report.residuals.push_back(residual);
    report.iterate_changes.push_back(change);
    report.states.push_back({n, std::move(*f), delta, reference.energy() + delta});

    if (residual < cfg.tol_delta && (cfg.tol_f <= 0.0 || change < cfg.tol_f)) {
      report.converged = true;
      report.stop_reason = StopReason::delta_tol;
      return report;
    }
    if (growth_streak >= 3) {
      report.stop_reason = StopReason::divergence;
      report.diagnostic = "energy residual grew for 3 consecutive orders";
      return report;
    }
  }
  report.stop_reason = StopReason::max_order;
  return report;
}

GroundStateSolution solve_ground_state(const RadialPotential& target, const SolverConfig& cfg) {
  GroundStateSolution out;
  out.variational = cfg.pinned_lambda ? evaluate_lambda(target, *cfg.pinned_lambda, cfg.grid)
                                      : minimize_lambda(target, cfg.bounds, cfg.lambda_tol, cfg.grid);
  const TrialSystem reference{HulthenTrial{out.variational.lambda_star}};
  out.report = iterate(target, reference, cfg.iteration, cfg.grid);
  return out;
}

GroundStateSolution solve_ground_state(double alpha, const SolverConfig& cfg) {
  return solve_ground_state(RadialPotential::yukawa(alpha), cfg);
}

double fixed_point_residual(const RadialPotential& target, const TrialSystem& reference, const GridFunction& f) {
  const RadialGrid& grid = f.grid();
  const PotentialDifference u{target, reference};
  const RadialFunction U = u;
  const double delta = delta_step(reference.trial, U, f, grid);
  const GridFunction next = f_step(reference.trial, U, delta, f, grid);
  return max_node_difference(f, next);
}

std::vector<std::pair<double, double>> normalized_wavefunction(const HulthenTrial& phi, const GridFunction& f) {
  const double norm2 = weighted_bracket(phi, [&](double r) { return f(r) * f(r); }, f.grid());
  if (!(norm2 > 0.0)) throw DegenerateIterateError("wavefunction has zero norm");
  const double scale = 1.0 / std::sqrt(norm2);
  const auto nodes = f.grid().nodes();
  const auto values = f.values();
  std::vector<std::pair<double, double>> out;
  out.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) out.emplace_back(nodes[i], phi.phi(nodes[i]) * values[i] * scale);
  return out;
}

}  // namespace radix
