#pragma once

// Central potentials in rescaled units (hbar = m = g^2 = 1), so that the
// Yukawa Hamiltonian reads H = -1/2 Laplacian - exp(-alpha r)/r.
//
// Every potential modelled here has an attractive Coulomb core and is stored
// as V(r) = -1/r + R(r) with R finite on [0, inf). Differences of two such
// potentials are formed from the regular parts only, so the 1/r poles cancel
// exactly instead of numerically.

#include <variant>

namespace radix {

/// Below this radius the Hulthen expressions switch to Taylor forms.
double series_threshold(double lambda);

/// -exp(-alpha r)/r. Throws DomainError for r <= 0 or alpha < 0.
double yukawa_eval(double alpha, double r);

/// Hulthen potential -lambda exp(-lambda r)/(1 - exp(-lambda r)).
/// Returns -infinity at r = 0.
double hulthen_v0(double lambda, double r);

/// Trial amplitude Phi_lambda(r) = (1 - exp(-lambda r))/r * exp(-(1 - lambda/2) r),
/// with Phi_lambda(0) = lambda.
double trial_phi(double lambda, double r);

/// Ground-state energy of the Hulthen potential, -(1 - lambda/2)^2 / 2.
double hulthen_energy(double lambda);

/// U(r) = V_yukawa(alpha) - V_hulthen(lambda), finite on [0, inf) with
/// U(0) = alpha - lambda/2.
double potential_difference(double lambda, double alpha, double r);

/// R(r) = V(r) + 1/r for the two model potentials.
double yukawa_regular_part(double alpha, double r);
double hulthen_regular_part(double lambda, double r);

class RadialPotential {
 public:
  static RadialPotential yukawa(double alpha);
  static RadialPotential hulthen(double lambda);
  static RadialPotential coulomb();

  /// V(r) + c. Shifts accumulate.
  RadialPotential shifted(double c) const;

  /// V(r) for r > 0.
  double operator()(double r) const;

  /// V(r) + 1/r; finite for r >= 0.
  double regular_part(double r) const;

  double offset() const noexcept { return offset_; }

  bool is_yukawa() const noexcept { return std::holds_alternative<Yukawa>(kind_); }
  bool is_hulthen() const noexcept { return std::holds_alternative<Hulthen>(kind_); }
  bool is_coulomb() const noexcept { return std::holds_alternative<Coulomb>(kind_); }

  /// Screening parameter (alpha or lambda); 0 for Coulomb.
  double screening() const noexcept;

 private:
  struct Yukawa {
    double alpha;
  };
  struct Hulthen {
    double lambda;
  };
  struct Coulomb {};

  using Kind = std::variant<Yukawa, Hulthen, Coulomb>;

  explicit RadialPotential(Kind kind, double offset = 0.0) : kind_(kind), offset_(offset) {}

  Kind kind_;
  double offset_ = 0.0;
};

/// One member of the Hulthen trial family, 0 < lambda < 2.
class HulthenTrial {
 public:
  explicit HulthenTrial(double lambda);

  double lambda() const noexcept { return lambda_; }

  /// Exponential decay rate of Phi, 1 - lambda/2.
  double decay_rate() const noexcept { return 1.0 - 0.5 * lambda_; }

  double phi(double r) const { return trial_phi(lambda_, r); }
  double v0(double r) const { return hulthen_v0(lambda_, r); }
  double energy() const { return hulthen_energy(lambda_); }

  /// Quadrature weight Phi^2 r^2 = (1 - exp(-lambda r))^2 exp(-(2 - lambda) r).
  double weight(double r) const;
  /// log(Phi^2 r^2); -infinity at r = 0.
  double log_weight(double r) const;

  RadialPotential potential() const { return RadialPotential::hulthen(lambda_); }

 private:
  double lambda_;
};

/// Reference Hamiltonian H_lambda + offset. The offset moves V0 and E0
/// together and leaves Phi unchanged.
struct TrialSystem {
  HulthenTrial trial;
  double offset = 0.0;

  double energy() const { return trial.energy() + offset; }
  double v0(double r) const { return trial.v0(r) + offset; }
  double regular_part(double r) const { return hulthen_regular_part(trial.lambda(), r) + offset; }
};

/// U(r) = V_target(r) - V0(r) built from regular parts.
class PotentialDifference {
 public:
  PotentialDifference(RadialPotential target, TrialSystem reference)
      : target_(target), reference_(reference) {}

  double operator()(double r) const { return target_.regular_part(r) - reference_.regular_part(r); }

  const RadialPotential& target() const noexcept { return target_; }
  const TrialSystem& reference() const noexcept { return reference_; }

 private:
  RadialPotential target_;
  TrialSystem reference_;
};

}  // namespace radix
