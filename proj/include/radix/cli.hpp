#pragma once

// Command-line front end. `radix solve` runs one alpha, `radix table` sweeps
// a list of them. Exit codes: 0 ok, 1 usage or domain error, 2 divergence.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "radix/run_record.hpp"

namespace radix {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDivergence = 2;

struct SolveOptions {
  double alpha = 0.0;
  int orders = 2;
  double tol_delta = 1e-9;
  bool oracle = false;
  /// Use this lambda instead of minimising.
  std::optional<double> lambda;
  /// Where to write (r, Psi) pairs; empty for none.
  std::string wavefunction_path;
};

/// The 14 screening values of the reference table.
const std::vector<double>& default_alphas();

/// Parses "0.1,0.2" (whitespace allowed). Throws DomainError on empty or
/// malformed input.
std::vector<double> parse_list(const std::string& text);

/// Worker cap from RADIX_THREADS: unset -> hardware threads, 0 -> 1.
unsigned thread_cap();

/// Single solve. Warnings (threshold proximity, missing oracle) go to `warn`.
RunRecord solve_record(const SolveOptions& opts, std::ostream& warn);

/// One record per alpha, sorted by alpha. `lambdas` is empty or matches
/// `alphas` one to one.
std::vector<RunRecord> solve_table(const std::vector<double>& alphas, const std::vector<double>& lambdas,
                                   const SolveOptions& base, unsigned threads, std::ostream& warn);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace radix
