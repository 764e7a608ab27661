#include "radix/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <type_traits>

#include "radix/errors.hpp"

namespace radix {

namespace {

void require_trial_lambda(double lambda) {
  if (!(lambda > 0.0 && lambda < 2.0)) {
    throw DomainError("Hulthen screening lambda must lie in (0, 2), got " + std::to_string(lambda));
  }
}

void require_nonnegative_radius(double r) {
  if (!(r >= 0.0)) throw DomainError("radius must be >= 0, got " + std::to_string(r));
}

// (1 - exp(-x))/x for small x.
double one_minus_exp_over_x_series(double x) {
  return 1.0 - x * (1.0 / 2.0 - x * (1.0 / 6.0 - x * (1.0 / 24.0 - x / 120.0)));
}

}  // namespace

double series_threshold(double lambda) { return 1e-3 / std::max(lambda, 1.0); }

double yukawa_eval(double alpha, double r) {
  if (!(alpha >= 0.0)) throw DomainError("Yukawa screening alpha must be >= 0");
  if (!(r > 0.0)) throw DomainError("Yukawa potential needs r > 0, got " + std::to_string(r));
  return -std::exp(-alpha * r) / r;
}

double yukawa_regular_part(double alpha, double r) {
  require_nonnegative_radius(r);
  if (r == 0.0 || alpha == 0.0) return alpha;
  return -std::expm1(-alpha * r) / r;
}

double hulthen_regular_part(double lambda, double r) {
  require_nonnegative_radius(r);
  if (r < series_threshold(lambda)) {
    // 1/r - lambda/(e^x - 1) with x = lambda r, from the Bernoulli series.
    const double x = lambda * r;
    const double x2 = x * x;
    return lambda * (0.5 - x / 12.0 + x * x2 / 720.0 - x * x2 * x2 / 30240.0);
  }
  return 1.0 / r - lambda / std::expm1(lambda * r);
}

double hulthen_v0(double lambda, double r) {
  require_trial_lambda(lambda);
  require_nonnegative_radius(r);
  if (r == 0.0) return -std::numeric_limits<double>::infinity();
  if (r < series_threshold(lambda)) return -1.0 / r + hulthen_regular_part(lambda, r);
  return -lambda / std::expm1(lambda * r);
}

double trial_phi(double lambda, double r) {
  require_trial_lambda(lambda);
  require_nonnegative_radius(r);
  const double envelope = std::exp(-(1.0 - 0.5 * lambda) * r);
  if (r < series_threshold(lambda)) return lambda * one_minus_exp_over_x_series(lambda * r) * envelope;
  return -std::expm1(-lambda * r) / r * envelope;
}

double hulthen_energy(double lambda) {
  require_trial_lambda(lambda);
  const double kappa = 1.0 - 0.5 * lambda;
  return -0.5 * kappa * kappa;
}

double potential_difference(double lambda, double alpha, double r) {
  require_trial_lambda(lambda);
  if (!(alpha >= 0.0)) throw DomainError("Yukawa screening alpha must be >= 0");
  return yukawa_regular_part(alpha, r) - hulthen_regular_part(lambda, r);
}

RadialPotential RadialPotential::yukawa(double alpha) {
  if (!(alpha >= 0.0)) throw DomainError("Yukawa screening alpha must be >= 0");
  return RadialPotential(Yukawa{alpha});
}

RadialPotential RadialPotential::hulthen(double lambda) {
  if (!(lambda > 0.0)) throw DomainError("Hulthen screening lambda must be > 0");
  return RadialPotential(Hulthen{lambda});
}

RadialPotential RadialPotential::coulomb() { return RadialPotential(Coulomb{}); }

RadialPotential RadialPotential::shifted(double c) const { return RadialPotential(kind_, offset_ + c); }

double RadialPotential::operator()(double r) const {
  if (!(r > 0.0)) throw DomainError("potential evaluated at r <= 0");
  const double base = std::visit(
      [r](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Yukawa>) {
          return -std::exp(-k.alpha * r) / r;
        } else if constexpr (std::is_same_v<K, Hulthen>) {
          if (r < series_threshold(k.lambda)) return -1.0 / r + hulthen_regular_part(k.lambda, r);
          return -k.lambda / std::expm1(k.lambda * r);
        } else {
          return -1.0 / r;
        }
      },
      kind_);
  return base + offset_;
}

double RadialPotential::regular_part(double r) const {
  const double base = std::visit(
      [r](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Yukawa>) {
          return yukawa_regular_part(k.alpha, r);
        } else if constexpr (std::is_same_v<K, Hulthen>) {
          return hulthen_regular_part(k.lambda, r);
        } else {
          require_nonnegative_radius(r);
          return 0.0;
        }
      },
      kind_);
  return base + offset_;
}

double RadialPotential::screening() const noexcept {
  if (const auto* y = std::get_if<Yukawa>(&kind_)) return y->alpha;
  if (const auto* h = std::get_if<Hulthen>(&kind_)) return h->lambda;
  return 0.0;
}

HulthenTrial::HulthenTrial(double lambda) : lambda_(lambda) { require_trial_lambda(lambda); }

double HulthenTrial::weight(double r) const {
  require_nonnegative_radius(r);
  const double s = -std::expm1(-lambda_ * r);
  return s * s * std::exp(-(2.0 - lambda_) * r);
}

double HulthenTrial::log_weight(double r) const {
  require_nonnegative_radius(r);
  if (r == 0.0) return -std::numeric_limits<double>::infinity();
  return 2.0 * std::log(-std::expm1(-lambda_ * r)) - (2.0 - lambda_) * r;
}

}  // namespace radix
