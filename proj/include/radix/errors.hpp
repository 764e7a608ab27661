#pragma once

#include <stdexcept>
#include <string>

namespace radix {

/// Argument outside the domain of a formula (r <= 0, lambda >= 2, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A quadrature or interpolation produced a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double radius)
      : std::runtime_error(what + " at r = " + std::to_string(radius)), radius_(radius) {}

  double radius() const noexcept { return radius_; }

 private:
  double radius_;
};

/// Caller broke an operation precondition that cannot be checked statically,
/// e.g. a Green-operator source with nonzero bracket.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// [f] collapsed relative to [|f|]; the iterate no longer defines an energy.
class DegenerateIterateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoInteriorMinimumError : public std::runtime_error {
 public:
  NoInteriorMinimumError(double lo, double hi, double value_lo, double value_hi)
      : std::runtime_error("objective has no interior minimum on [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]: E(lo) = " + std::to_string(value_lo) +
                           ", E(hi) = " + std::to_string(value_hi)),
        lo_(lo), hi_(hi), value_lo_(value_lo), value_hi_(value_hi) {}

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double value_lo() const noexcept { return value_lo_; }
  double value_hi() const noexcept { return value_hi_; }

 private:
  double lo_, hi_, value_lo_, value_hi_;
};

class NoBoundStateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace radix
