#pragma once

// Finite-difference checks that share no code with the quadrature path.

#include <cmath>
#include <functional>

namespace radix::fixtures {

using Fn = std::function<double(double)>;

/// (H - E) psi at r for H = -1/2 (1/r) d^2/dr^2 r + V, by central differences
/// on u = r psi.
inline double hamiltonian_residual(const Fn& psi, const Fn& V, double E, double r, double h) {
  auto u = [&](double x) { return x * psi(x); };
  const double u2 = (u(r + h) - 2.0 * u(r) + u(r - h)) / (h * h);
  return -0.5 * u2 / r + (V(r) - E) * psi(r);
}

/// Rayleigh quotient \int (u'^2/2 + V u^2) dr / \int u^2 dr with u = r psi,
/// composite Simpson on [0, r_max] and a central-difference u'.
inline double rayleigh_quotient(const Fn& psi, const Fn& V, double r_max, int intervals, double h = 1e-5) {
  const int n = intervals + (intervals % 2);
  const double step = r_max / n;
  double num = 0.0;
  double den = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double r = i * step;
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    auto u_at = [&](double x) { return x * psi(x); };
    // second-order one-sided difference at the origin, where u(0) = 0
    const double du = r == 0.0 ? (4.0 * u_at(h) - u_at(2.0 * h)) / (2.0 * h) : (u_at(r + h) - u_at(r - h)) / (2.0 * h);
    const double u = r == 0.0 ? 0.0 : u_at(r);
    const double pot = r == 0.0 ? 0.0 : V(r) * u * u;
    num += w * (0.5 * du * du + pot);
    den += w * u * u;
  }
  return num / den;
}

}  // namespace radix::fixtures
