#include "radix/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "radix/errors.hpp"

namespace radix {

namespace {

constexpr int kOrder = RadialGrid::kGaussOrder;

struct ReferenceRule {
  std::array<double, kOrder> x{};
  std::array<double, kOrder> w{};
};

// Gauss-Legendre on [-1, 1]; boost stores the non-negative half.
const ReferenceRule& reference_rule() {
  static const ReferenceRule rule = [] {
    using Gauss = boost::math::quadrature::gauss<double, kOrder>;
    const auto& xs = Gauss::abscissa();
    const auto& ws = Gauss::weights();
    ReferenceRule r;
    constexpr int half = kOrder / 2;
    for (int i = 0; i < half; ++i) {
      r.x[half - 1 - i] = -xs[i];
      r.w[half - 1 - i] = ws[i];
      r.x[half + i] = xs[i];
      r.w[half + i] = ws[i];
    }
    return r;
  }();
  return rule;
}

// Neumaier-compensated running sum; summation order is fixed by the caller.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double checked(double value, double r) {
  if (!std::isfinite(value)) throw EvaluationError("non-finite integrand", r);
  return value;
}

// \int_a^b Phi^2 g r^2 dr with one Gauss rule mapped onto [a, b].
double segment_integral(const HulthenTrial& phi, const RadialFunction& g, double a, double b) {
  if (b <= a) return 0.0;
  const auto& rule = reference_rule();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (int k = 0; k < kOrder; ++k) {
    const double x = mid + half * rule.x[k];
    sum += rule.w[k] * phi.weight(x) * checked(g(x), x);
  }
  return half * sum;
}

std::vector<double> cell_integrals(const HulthenTrial& phi, const RadialFunction& g, const RadialGrid& grid) {
  std::vector<double> out(grid.cell_count());
  for (std::size_t c = 0; c < out.size(); ++c) {
    const auto xs = grid.abscissae(c);
    const auto ws = grid.weights(c);
    double sum = 0.0;
    for (int k = 0; k < kOrder; ++k) sum += ws[k] * phi.weight(xs[k]) * checked(g(xs[k]), xs[k]);
    out[c] = sum;
  }
  return out;
}

// T / (Phi^2 r^2) evaluated in log space with the sign carried separately.
double divide_by_weight(const HulthenTrial& phi, double tail, double r) {
  if (tail == 0.0) return 0.0;
  const double magnitude = std::exp(std::log(std::abs(tail)) - phi.log_weight(r));
  if (!std::isfinite(magnitude)) throw EvaluationError("outer Green integrand overflow", r);
  return std::copysign(magnitude, tail);
}

void require_valid(const GridConfig& cfg) {
  if (!(cfg.tail_eps > 0.0 && cfg.tail_eps < 1.0)) throw DomainError("grid tail_eps must lie in (0, 1)");
  if (cfg.points_per_panel < 4) throw DomainError("grid needs at least 4 points per panel");
  if (cfg.geometric_panels < 1) throw DomainError("grid needs at least one geometric panel");
  if (!(cfg.core_radius > 0.0) || !(cfg.panel_width > 0.0)) {
    throw DomainError("grid core radius and panel width must be positive");
  }
}

}  // namespace

RadialGrid::RadialGrid(std::vector<double> nodes, std::size_t panel_count) {
  if (nodes.size() < 2 || nodes.front() != 0.0) throw DomainError("grid nodes must start at 0 and hold a cell");
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (!(nodes[i] > nodes[i - 1])) throw DomainError("grid nodes must be strictly increasing");
  }
  auto data = std::make_shared<Data>();
  const auto& rule = reference_rule();
  const std::size_t cells = nodes.size() - 1;
  data->abscissae.resize(cells * kOrder);
  data->weights.resize(cells * kOrder);
  for (std::size_t c = 0; c < cells; ++c) {
    const double half = 0.5 * (nodes[c + 1] - nodes[c]);
    const double mid = 0.5 * (nodes[c + 1] + nodes[c]);
    for (int k = 0; k < kOrder; ++k) {
      data->abscissae[c * kOrder + k] = mid + half * rule.x[k];
      data->weights[c * kOrder + k] = half * rule.w[k];
    }
  }
  data->panel_count = panel_count == 0 ? cells : panel_count;
  data->nodes = std::move(nodes);
  data_ = std::move(data);
}

std::size_t RadialGrid::locate(double r) const noexcept {
  const auto& n = data_->nodes;
  const auto it = std::upper_bound(n.begin(), n.end(), r);
  if (it == n.begin()) return 0;
  return std::min<std::size_t>(static_cast<std::size_t>(it - n.begin()) - 1, cell_count() - 1);
}

double weight_peak_radius(double lambda) {
  static_cast<void>(HulthenTrial{lambda});  // domain check
  return std::log((2.0 + lambda) / (2.0 - lambda)) / lambda;
}

double weight_tail_radius(double lambda, double tail_eps) {
  const HulthenTrial trial{lambda};
  const double peak = weight_peak_radius(lambda);
  const double target = trial.log_weight(peak) + std::log(tail_eps);
  double lo = peak;
  double hi = peak + 1.0;
  while (trial.log_weight(hi) > target) {
    lo = hi;
    hi = peak + 2.0 * (hi - peak);
  }
  // log-weight is strictly decreasing beyond the peak
  for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (trial.log_weight(mid) > target ? lo : hi) = mid;
  }
  return hi;
}

RadialGrid build_grid(double lambda, const GridConfig& cfg) {
  if (!(lambda > 0.0 && lambda < 2.0)) {
    throw DomainError("no normalizable trial weight for lambda = " + std::to_string(lambda));
  }
  require_valid(cfg);

  const double tail = weight_tail_radius(lambda, cfg.tail_eps);
  const double core = cfg.core_radius;
  const auto uniform_panels =
      static_cast<std::size_t>(std::max(1.0, std::ceil((tail - core) / cfg.panel_width - 1e-12)));

  std::vector<double> edges{0.0};
  for (int k = cfg.geometric_panels - 1; k >= 0; --k) edges.push_back(std::ldexp(core, -k));
  for (std::size_t p = 1; p <= uniform_panels; ++p) edges.push_back(core + static_cast<double>(p) * cfg.panel_width);

  std::vector<double> nodes{0.0};
  const int per = cfg.points_per_panel;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double a = edges[p];
    const double b = edges[p + 1];
    for (int j = 1; j < per; ++j) nodes.push_back(a + (b - a) * j / per);
    nodes.push_back(b);
  }
  return RadialGrid(std::move(nodes), edges.size() - 1);
}

GridFunction::GridFunction(RadialGrid grid, std::vector<double> values, std::vector<double> slopes)
    : grid_(std::move(grid)), values_(std::move(values)), slopes_(std::move(slopes)) {
  if (values_.size() != grid_.nodes().size() || slopes_.size() != values_.size()) {
    throw DomainError("grid function samples do not match the grid");
  }
}

GridFunction GridFunction::constant(RadialGrid grid, double value) {
  const std::size_t n = grid.nodes().size();
  return GridFunction(std::move(grid), std::vector<double>(n, value), std::vector<double>(n, 0.0));
}

double GridFunction::operator()(double r) const {
  const auto nodes = grid_.nodes();
  if (r >= nodes.back()) return values_.back();
  if (r <= 0.0) return values_.front();
  const std::size_t c = grid_.locate(r);
  const double a = nodes[c];
  const double h = nodes[c + 1] - a;
  const double t = (r - a) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  const double h10 = t3 - 2.0 * t2 + t;
  const double h01 = -2.0 * t3 + 3.0 * t2;
  const double h11 = t3 - t2;
  return h00 * values_[c] + h10 * h * slopes_[c] + h01 * values_[c + 1] + h11 * h * slopes_[c + 1];
}

double weighted_bracket(const HulthenTrial& phi, const RadialFunction& F, const RadialGrid& grid) {
  CompensatedSum total;
  for (double s : cell_integrals(phi, F, grid)) total.add(s);
  return total.value();
}

double absolute_bracket(const HulthenTrial& phi, const RadialFunction& F, const RadialGrid& grid) {
  return weighted_bracket(phi, [&F](double r) { return std::abs(F(r)); }, grid);
}

double head_integral(const HulthenTrial& phi, const RadialFunction& g, double rp, const RadialGrid& grid) {
  if (!(rp >= 0.0) || rp > grid.r_max()) {
    throw DomainError("inner integral radius outside [0, r_max]: " + std::to_string(rp));
  }
  if (rp == 0.0) return 0.0;
  const std::size_t split = grid.locate(rp);
  const auto cells = cell_integrals(phi, g, grid);
  CompensatedSum head;
  for (std::size_t c = 0; c < split; ++c) head.add(cells[c]);
  const double a = grid.nodes()[split];
  if (rp == grid.nodes()[split + 1]) {
    head.add(cells[split]);
  } else {
    head.add(segment_integral(phi, g, a, rp));
  }
  return head.value();
}

double inner_tail(const HulthenTrial& phi, const RadialFunction& g, double rp, const RadialGrid& grid,
                  double full) {
  return full - head_integral(phi, g, rp, grid);
}

GridFunction green_apply(const HulthenTrial& phi, const RadialFunction& g, const RadialGrid& grid,
                         double bracket_tol) {
  const auto nodes = grid.nodes();
  const std::size_t cells = grid.cell_count();
  const std::vector<double> pieces = cell_integrals(phi, g, grid);

  CompensatedSum full_sum;
  double scale = 0.0;
  for (std::size_t c = 0; c < cells; ++c) {
    full_sum.add(pieces[c]);
    const auto xs = grid.abscissae(c);
    const auto ws = grid.weights(c);
    for (int k = 0; k < kOrder; ++k) scale += ws[k] * phi.weight(xs[k]) * std::abs(g(xs[k]));
  }
  const double full = full_sum.value();
  if (std::abs(full) > bracket_tol * scale) {
    throw PreconditionError("Green operator source has nonzero bracket: [g] = " + std::to_string(full) +
                            ", [|g|] = " + std::to_string(scale));
  }

  // Inner integral at the nodes.
  std::vector<double> head(cells + 1, 0.0);
  {
    CompensatedSum running;
    for (std::size_t c = 0; c < cells; ++c) {
      running.add(pieces[c]);
      head[c + 1] = running.value();
    }
  }
  std::vector<double> tail(cells + 1, 0.0);
  {
    CompensatedSum running;
    for (std::size_t c = cells; c-- > 0;) {
      running.add(pieces[c]);
      tail[c] = running.value();
    }
  }
  const std::size_t peak = grid.locate(weight_peak_radius(phi.lambda())) + 1;
  std::vector<double> inner(cells + 1);
  for (std::size_t i = 0; i <= cells; ++i) inner[i] = i <= peak ? full - head[i] : tail[i];

  // Outer integral, cell by cell.
  std::vector<double> values(cells + 1, 0.0);
  std::vector<double> slopes(cells + 1, 0.0);
  CompensatedSum outer;
  for (std::size_t c = 0; c < cells; ++c) {
    const double a = nodes[c];
    const double b = nodes[c + 1];
    const bool from_left = c < peak;
    const auto xs = grid.abscissae(c);
    const auto ws = grid.weights(c);
    double cell_sum = 0.0;
    for (int k = 0; k < kOrder; ++k) {
      const double x = xs[k];
      const double t = from_left ? inner[c] - segment_integral(phi, g, a, x)
                                 : inner[c + 1] + segment_integral(phi, g, x, b);
      cell_sum += ws[k] * divide_by_weight(phi, t, x);
    }
    outer.add(cell_sum);
    values[c + 1] = -2.0 * outer.value();
    slopes[c + 1] = -2.0 * divide_by_weight(phi, inner[c + 1], b);
  }
  return GridFunction(grid, std::move(values), std::move(slopes));
}

}  // namespace radix
