#include "radix/run_record.hpp"

#include <cstdio>

#include <json.hpp>

namespace radix {

namespace {

using nlohmann::json;

json record_to_json(const RunRecord& r) {
  json j;
  j["alpha"] = r.alpha;
  j["lambda_star"] = r.lambda_star;
  j["E_lambda"] = r.E_lambda;
  j["delta_n"] = r.delta_n;
  j["E_n"] = r.E_n;
  j["E_oracle"] = r.E_oracle ? json(*r.E_oracle) : json(nullptr);
  j["residuals"] = r.residuals;
  j["wall_time"] = r.wall_time;
  j["converged"] = r.converged;
  j["stop_reason"] = r.stop_reason;
  return j;
}

RunRecord record_from_json(const json& j) {
  RunRecord r;
  r.alpha = j.at("alpha").get<double>();
  r.lambda_star = j.at("lambda_star").get<double>();
  r.E_lambda = j.at("E_lambda").get<double>();
  r.delta_n = j.at("delta_n").get<std::vector<double>>();
  r.E_n = j.at("E_n").get<std::vector<double>>();
  if (j.contains("E_oracle") && !j.at("E_oracle").is_null()) r.E_oracle = j.at("E_oracle").get<double>();
  r.residuals = j.value("residuals", std::vector<double>{});
  r.wall_time = j.value("wall_time", 0.0);
  r.converged = j.value("converged", false);
  r.stop_reason = j.value("stop_reason", std::string{});
  return r;
}

std::string cell(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string cell(const std::vector<double>& xs, std::size_t k) { return k < xs.size() ? cell(xs[k]) : ""; }

}  // namespace

std::string to_json(const std::vector<RunRecord>& records) {
  json out = json::array();
  for (const auto& r : records) out.push_back(record_to_json(r));
  // nlohmann prints doubles with max_digits10, so the text round-trips exactly
  return out.dump(2) + "\n";
}

std::vector<RunRecord> from_json(const std::string& text) {
  const json parsed = json::parse(text);
  std::vector<RunRecord> out;
  if (parsed.is_array()) {
    for (const auto& j : parsed) out.push_back(record_from_json(j));
  } else {
    out.push_back(record_from_json(parsed));
  }
  return out;
}

std::string to_csv(const std::vector<RunRecord>& records) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : records) {
    out += cell(r.alpha) + ',' + cell(r.lambda_star) + ',' + cell(r.E_lambda) + ',';
    out += cell(r.delta_n, 0) + ',' + cell(r.E_n, 0) + ',' + cell(r.delta_n, 1) + ',' + cell(r.E_n, 1) + ',';
    out += r.E_oracle ? cell(*r.E_oracle) : "";
    out += '\n';
  }
  return out;
}

}  // namespace radix
