#pragma once

// One solve, in the shape the CLI emits it. Energies are signed.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace radix {

struct RunRecord {
  double alpha = 0.0;
  double lambda_star = 0.0;
  double E_lambda = 0.0;
  /// delta_n[k] and E_n[k] belong to order k + 1.
  std::vector<double> delta_n;
  std::vector<double> E_n;
  std::optional<double> E_oracle;
  std::vector<double> residuals;
  double wall_time = 0.0;
  bool converged = false;
  std::string stop_reason;
};

std::string to_json(const std::vector<RunRecord>& records);
std::vector<RunRecord> from_json(const std::string& text);

inline constexpr const char* kCsvHeader = "alpha,lambda,E_lambda,delta_1,E_1,delta_2,E_2,E_exact";

/// Header plus one row per record, 6 decimals, empty cells for missing orders.
std::string to_csv(const std::vector<RunRecord>& records);

}  // namespace radix
