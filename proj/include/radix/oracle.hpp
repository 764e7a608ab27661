#pragma once

// Reference ground-state energies by shooting on the reduced radial equation
// u'' = 2 (V - E) u, u = r Psi. Numerov steps outward from u ~ r and inward
// from u ~ exp(-sqrt(-2E) r), matched at the classical turning point. Shares
// nothing with the quadrature path beyond the potential itself.

#include <optional>
#include <vector>

#include "radix/potentials.hpp"

namespace radix {

struct ShootingConfig {
  /// Truncation radius; 0 picks turning point + tail_lengths decay lengths.
  double r_max = 0.0;
  double tail_lengths = 40.0;
  /// Hard cap on the automatic r_max.
  double r_max_cap = 4000.0;
  /// Numerov step.
  double step = 2e-3;
  /// Energy bracket; defaults to [offset - 0.6, offset - 1e-9].
  std::optional<double> e_lo;
  std::optional<double> e_hi;
  /// Bisection stops once the bracket is narrower than this.
  double match_tol = 1e-13;
  /// Combine steps h and 2h to cancel the leading h^4 error.
  bool richardson = true;
};

struct ShootingSolution {
  double energy = 0.0;
  double r_max = 0.0;
  double r_match = 0.0;
  /// Sign changes of u strictly inside (0, r_max).
  int interior_nodes = 0;
  /// u = r Psi on a uniform mesh, normalised to \int u^2 dr = 1, u >= 0 near 0.
  std::vector<double> radii;
  std::vector<double> u;
};

ShootingSolution shoot(const RadialPotential& V, const ShootingConfig& cfg = {});

double shoot_ground_state(const RadialPotential& V, const ShootingConfig& cfg = {});

struct HulthenCheck {
  double lambda = 0.0;
  double energy = 0.0;
  double expected = 0.0;
  double energy_error = 0.0;
  /// max |u_shoot - u_exact| / max |u_exact| with both normalised.
  double max_wavefunction_error = 0.0;
};

HulthenCheck verify_hulthen(double lambda, const ShootingConfig& cfg = {});

}  // namespace radix
