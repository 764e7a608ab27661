#pragma once

// Radial mesh, the weighted bracket [F] = \int_0^inf Phi^2 F r^2 dr, and the
// Green operator of the Hulthen reference Hamiltonian realised as a nested
// pair of radial quadratures:
//
//   (G g)(r) = -2 \int_0^r dr' Phi^-2(r') r'^-2 \int_{r'}^inf Phi^2 g r''^2 dr''
//
// The mesh is a sequence of macro panels (geometric toward r = 0, uniform
// beyond a core radius), each split into equal cells. Every cell carries a
// 16-point Gauss-Legendre rule.

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "radix/potentials.hpp"

namespace radix {

using RadialFunction = std::function<double(double)>;

struct GridConfig {
  /// Truncate where Phi^2 r^2 has fallen below tail_eps times its peak.
  double tail_eps = 1e-14;
  /// Cells per macro panel (grid nodes per panel, excluding the left edge).
  int points_per_panel = 8;
  /// Geometric panels inside [0, core_radius]; each halves toward r = 0.
  int geometric_panels = 6;
  double core_radius = 1.0;
  /// Width of the uniform panels beyond the core. r_max is rounded up to a
  /// whole panel.
  double panel_width = 1.0;
};

class RadialGrid {
 public:
  static constexpr int kGaussOrder = 16;

  /// Mesh over the given strictly increasing nodes, nodes.front() == 0.
  explicit RadialGrid(std::vector<double> nodes, std::size_t panel_count = 0);

  std::span<const double> nodes() const noexcept { return data_->nodes; }
  std::size_t cell_count() const noexcept { return data_->nodes.size() - 1; }
  std::size_t panel_count() const noexcept { return data_->panel_count; }
  double r_max() const noexcept { return data_->nodes.back(); }

  /// Gauss abscissae / weights of one cell.
  std::span<const double> abscissae(std::size_t cell) const noexcept {
    return {data_->abscissae.data() + cell * kGaussOrder, kGaussOrder};
  }
  std::span<const double> weights(std::size_t cell) const noexcept {
    return {data_->weights.data() + cell * kGaussOrder, kGaussOrder};
  }

  /// Index of the cell containing r, clamped to the mesh.
  std::size_t locate(double r) const noexcept;

 private:
  struct Data {
    std::vector<double> nodes;
    std::vector<double> abscissae;
    std::vector<double> weights;
    std::size_t panel_count = 0;
  };
  std::shared_ptr<const Data> data_;
};

/// Radius where Phi_lambda^2 r^2 peaks, log((2 + lambda)/(2 - lambda))/lambda.
double weight_peak_radius(double lambda);

/// Radius beyond the peak where Phi_lambda^2 r^2 = tail_eps * peak.
double weight_tail_radius(double lambda, double tail_eps);

RadialGrid build_grid(double lambda, const GridConfig& cfg = {});

/// Samples on the grid nodes plus nodal slopes; evaluated by cubic Hermite
/// interpolation (C1), constant beyond r_max.
class GridFunction {
 public:
  GridFunction(RadialGrid grid, std::vector<double> values, std::vector<double> slopes);

  static GridFunction constant(RadialGrid grid, double value);

  double operator()(double r) const;

  const RadialGrid& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> slopes() const noexcept { return slopes_; }

 private:
  RadialGrid grid_;
  std::vector<double> values_;
  std::vector<double> slopes_;
};

/// [F] truncated at r_max. Throws EvaluationError on a non-finite sample.
double weighted_bracket(const HulthenTrial& phi, const RadialFunction& F, const RadialGrid& grid);

/// \int Phi^2 |F| r^2 dr on the same rule; the scale against which a
/// vanishing [F] is judged.
double absolute_bracket(const HulthenTrial& phi, const RadialFunction& F, const RadialGrid& grid);

/// \int_0^rp Phi^2 g r^2 dr on the grid's cells, splitting the cell that
/// contains rp.
double head_integral(const HulthenTrial& phi, const RadialFunction& g, double rp, const RadialGrid& grid);

/// full - head_integral(rp); `full` must be weighted_bracket(phi, g, grid).
double inner_tail(const HulthenTrial& phi, const RadialFunction& g, double rp, const RadialGrid& grid,
                  double full);

/// Green operator applied to g, sampled on the grid (h(0) = 0 exactly).
///
/// The source must satisfy [g] = 0; a relative violation |[g]| > bracket_tol
/// * [|g|] throws PreconditionError. Below the weight peak the inner integral
/// is formed as full - head so the [g] = 0 cancellation carries into the
/// r' -> 0 end of the outer integrand; above it the inner integral is summed
/// from r_max inward so the far tail keeps its relative accuracy.
GridFunction green_apply(const HulthenTrial& phi, const RadialFunction& g, const RadialGrid& grid,
                         double bracket_tol = 1e-9);

}  // namespace radix
