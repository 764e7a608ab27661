#include "radix/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "radix/errors.hpp"

namespace radix {

namespace {

constexpr double kRescale = 1e150;

// Uniform mesh r_i = i h, i = 0..N, with V sampled for i >= 1.
struct Mesh {
  double h = 0.0;
  std::size_t n = 0;
  std::vector<double> v;
  double regular_at_origin = 0.0;  // V(r) + 1/r as r -> 0
  double asymptote = 0.0;          // V(r_max)
};

Mesh make_mesh(const RadialPotential& V, double r_max, double h) {
  Mesh mesh;
  mesh.n = static_cast<std::size_t>(std::llround(r_max / h));
  mesh.h = r_max / static_cast<double>(mesh.n);
  mesh.v.resize(mesh.n + 1, 0.0);
  for (std::size_t i = 1; i <= mesh.n; ++i) mesh.v[i] = V(static_cast<double>(i) * mesh.h);
  mesh.regular_at_origin = mesh.v[1] + 1.0 / mesh.h;
  mesh.asymptote = V.offset();
  return mesh;
}

// Last index on the classically allowed side of the turning point.
std::size_t matching_index(const Mesh& mesh, double energy) {
  std::size_t m = 2;
  for (std::size_t i = mesh.n; i >= 2; --i) {
    if (mesh.v[i] < energy) {
      m = i;
      break;
    }
  }
  return std::clamp<std::size_t>(m, 2, mesh.n - 3);
}

// Numerov from u_0 = 0 with u'(0) = 1. The Coulomb core makes (k u)_0 = -2.
class OutwardSweep {
 public:
  OutwardSweep(const Mesh& mesh, double energy) : mesh_(mesh), energy_(energy), h2_(mesh.h * mesh.h) {
    const double h = mesh.h;
    prev_weighted_ = h2_ / 6.0;  // (1 - h^2 k_0 / 12) u_0 in the r -> 0 limit
    u_ = h - h * h + (1.0 + mesh.regular_at_origin - energy) * h * h * h / 3.0;
    prev_u_ = 0.0;
    index_ = 1;
  }

  // Advances one step; returns the new u.
  double step() {
    const double k_i = 2.0 * (mesh_.v[index_] - energy_);
    const double k_next = 2.0 * (mesh_.v[index_ + 1] - energy_);
    const double next = (2.0 * u_ * (1.0 + 5.0 * h2_ * k_i / 12.0) - prev_weighted_) / (1.0 - h2_ * k_next / 12.0);
    prev_weighted_ = u_ * (1.0 - h2_ * k_i / 12.0);
    prev_u_ = u_;
    u_ = next;
    ++index_;
    if (std::abs(u_) > kRescale) {
      u_ /= kRescale;
      prev_u_ /= kRescale;
      prev_weighted_ /= kRescale;
    }
    return u_;
  }

  double u() const { return u_; }
  double prev_u() const { return prev_u_; }
  std::size_t index() const { return index_; }

 private:
  const Mesh& mesh_;
  double energy_;
  double h2_;
  double prev_weighted_;
  double prev_u_;
  double u_;
  std::size_t index_;
};

struct Shot {
  double mismatch = 0.0;
  int nodes = 0;
};

double numerov_inward(const Mesh& mesh, double energy, std::size_t i, double u_i, double u_ip1) {
  const double h2 = mesh.h * mesh.h;
  const double k_i = 2.0 * (mesh.v[i] - energy);
  const double k_ip1 = 2.0 * (mesh.v[i + 1] - energy);
  const double k_im1 = 2.0 * (mesh.v[i - 1] - energy);
  return (2.0 * u_i * (1.0 + 5.0 * h2 * k_i / 12.0) - u_ip1 * (1.0 - h2 * k_ip1 / 12.0)) /
         (1.0 - h2 * k_im1 / 12.0);
}

double decay_constant(const Mesh& mesh, double energy) { return std::sqrt(2.0 * (mesh.asymptote - energy)); }

Shot shoot_once(const Mesh& mesh, double energy) {
  const std::size_t m = matching_index(mesh, energy);
  Shot shot;

  // outward to m + 1
  OutwardSweep out(mesh, energy);
  double out_m_minus = 0.0;
  double out_m = 0.0;
  double sign = 1.0;
  while (out.index() < m + 1) {
    const double after = out.step();
    if (out.index() <= m && after * sign < 0.0) {
      ++shot.nodes;
      sign = -sign;
    }
    if (out.index() == m) {
      out_m_minus = out.prev_u();
      out_m = after;
    }
  }
  if (out.prev_u() != out_m) {  // rescaled on the last step
    out_m_minus /= kRescale;
    out_m /= kRescale;
  }
  const double out_m_plus = out.u();
  if (shot.nodes > 0 || out_m == 0.0) return shot;

  // inward to m - 1
  const double kappa = decay_constant(mesh, energy);
  double u_next = 1.0;                        // u_N
  double u_here = std::exp(kappa * mesh.h);  // u_{N-1}
  double in_m_plus = 0.0;
  double in_m = 0.0;
  for (std::size_t i = mesh.n - 1; i >= m; --i) {
    if (i == m + 1) in_m_plus = u_here;
    if (i == m) in_m = u_here;
    const double u_prev = numerov_inward(mesh, energy, i, u_here, u_next);
    u_next = u_here;
    u_here = u_prev;
    if (std::abs(u_here) > kRescale) {
      u_here /= kRescale;
      u_next /= kRescale;
      in_m_plus /= kRescale;
      in_m /= kRescale;
    }
    if (i == m) break;
  }
  const double in_m_minus = u_here;

  const double log_derivative_out = (out_m_plus - out_m_minus) / out_m;
  const double log_derivative_in = (in_m_plus - in_m_minus) / in_m;
  shot.mismatch = (log_derivative_out - log_derivative_in) / (2.0 * mesh.h);
  return shot;
}

// Above the ground state: the outward solution has a node before matching,
// or its log-derivative falls below the inward one.
bool above_ground_state(const Mesh& mesh, double energy) {
  const Shot shot = shoot_once(mesh, energy);
  return shot.nodes > 0 || shot.mismatch < 0.0;
}

double bisect(const Mesh& mesh, double lo, double hi, double tol) {
  if (above_ground_state(mesh, lo)) {
    throw NoBoundStateError("energy bracket lower end " + std::to_string(lo) + " is already above the ground state");
  }
  if (!above_ground_state(mesh, hi)) {
    throw NoBoundStateError("no bound s-state below E = " + std::to_string(hi));
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (above_ground_state(mesh, mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

double turning_radius(const Mesh& mesh, double energy) {
  return static_cast<double>(matching_index(mesh, energy)) * mesh.h;
}

void fill_wavefunction(const Mesh& mesh, double energy, ShootingSolution& out) {
  const std::size_t m = matching_index(mesh, energy);
  std::vector<double> u(mesh.n + 1, 0.0);

  // outward branch on [0, m]
  OutwardSweep sweep(mesh, energy);
  u[1] = sweep.u();
  while (sweep.index() < m) {
    const double unscaled_prev = u[sweep.index()];
    sweep.step();
    if (sweep.prev_u() != unscaled_prev) {
      for (std::size_t j = 1; j <= sweep.index() - 1; ++j) u[j] /= kRescale;
    }
    u[sweep.index()] = sweep.u();
  }
  const double outward_m = u[m];

  // inward branch on [m, N], scaled onto the outward value at m
  std::vector<double> in(mesh.n + 1, 0.0);
  in[mesh.n] = 1.0;
  in[mesh.n - 1] = std::exp(decay_constant(mesh, energy) * mesh.h);
  for (std::size_t i = mesh.n - 1; i > m; --i) {
    in[i - 1] = numerov_inward(mesh, energy, i, in[i], in[i + 1]);
    if (std::abs(in[i - 1]) > kRescale) {
      for (std::size_t j = i - 1; j <= mesh.n; ++j) in[j] /= kRescale;
    }
  }
  const double ratio = outward_m / in[m];
  for (std::size_t i = m; i <= mesh.n; ++i) u[i] = in[i] * ratio;

  // trapezoid norm; u(0) = 0 and u(r_max) ~ 0
  double norm = 0.0;
  for (std::size_t i = 1; i < mesh.n; ++i) norm += u[i] * u[i];
  norm = std::sqrt(norm * mesh.h);
  const double sign = u[1] >= 0.0 ? 1.0 : -1.0;
  for (double& x : u) x *= sign / norm;

  int nodes = 0;
  for (std::size_t i = 2; i < mesh.n; ++i) {
    if (u[i] * u[i - 1] < 0.0) ++nodes;
  }

  out.interior_nodes = nodes;
  out.r_match = static_cast<double>(m) * mesh.h;
  out.radii.resize(mesh.n + 1);
  for (std::size_t i = 0; i <= mesh.n; ++i) out.radii[i] = static_cast<double>(i) * mesh.h;
  out.u = std::move(u);
}

}  // namespace

ShootingSolution shoot(const RadialPotential& V, const ShootingConfig& cfg) {
  if (!(cfg.step > 0.0) || !(cfg.match_tol > 0.0)) throw DomainError("shooting step and tolerance must be positive");
  const double lo = cfg.e_lo.value_or(V.offset() - 0.6);
  const double hi = cfg.e_hi.value_or(V.offset() - 1e-9);
  if (!(lo < hi) || !(hi < V.offset())) throw DomainError("energy bracket must satisfy lo < hi < V(inf)");

  auto solve_on = [&](double r_max) {
    const Mesh fine = make_mesh(V, r_max, cfg.step);
    const double e_fine = bisect(fine, lo, hi, cfg.match_tol);
    if (!cfg.richardson) return e_fine;
    const Mesh coarse = make_mesh(V, fine.h * static_cast<double>(fine.n), 2.0 * fine.h);
    const double e_coarse = bisect(coarse, lo, hi, cfg.match_tol);
    return e_fine + (e_fine - e_coarse) / 15.0;
  };

  double r_max = cfg.r_max > 0.0 ? cfg.r_max : std::min(cfg.r_max_cap, 80.0);
  double energy = solve_on(r_max);
  if (cfg.r_max <= 0.0) {
    for (int round = 0; round < 6; ++round) {
      const Mesh probe = make_mesh(V, r_max, cfg.step);
      const double wanted = std::min(cfg.r_max_cap, turning_radius(probe, energy) +
                                                        cfg.tail_lengths / decay_constant(probe, energy));
      if (wanted <= r_max) break;
      r_max = wanted;
      energy = solve_on(r_max);
    }
  }

  ShootingSolution out;
  out.energy = energy;
  out.r_max = r_max;
  fill_wavefunction(make_mesh(V, r_max, cfg.step), energy, out);
  return out;
}

double shoot_ground_state(const RadialPotential& V, const ShootingConfig& cfg) { return shoot(V, cfg).energy; }

HulthenCheck verify_hulthen(double lambda, const ShootingConfig& cfg) {
  HulthenCheck check;
  check.lambda = lambda;
  check.expected = hulthen_energy(lambda);
  const ShootingSolution sol = shoot(RadialPotential::hulthen(lambda), cfg);
  check.energy = sol.energy;
  check.energy_error = std::abs(sol.energy - check.expected);

  // u_exact = r Phi = (1 - e^{-lambda r}) e^{-(1 - lambda/2) r}; \int u^2 dr in closed form.
  const double norm = std::sqrt(1.0 / (2.0 - lambda) - 1.0 + 1.0 / (2.0 + lambda));
  double peak = 0.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < sol.radii.size(); ++i) {
    const double r = sol.radii[i];
    const double exact = -std::expm1(-lambda * r) * std::exp(-(1.0 - 0.5 * lambda) * r) / norm;
    peak = std::max(peak, std::abs(exact));
    worst = std::max(worst, std::abs(sol.u[i] - exact));
  }
  check.max_wavefunction_error = worst / peak;
  return check;
}

}  // namespace radix
