#include "radix/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "radix/errors.hpp"
#include "radix/iteration.hpp"
#include "radix/oracle.hpp"

namespace radix {

const std::vector<double>& default_alphas() {
  static const std::vector<double> alphas{0.1, 0.2, 0.25, 0.3, 0.4, 0.5, 0.6,
                                          0.7, 0.8, 0.9, 1.0, 1.05, 1.1, 1.15};
  return alphas;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) throw DomainError("empty entry in list '" + text + "'");
    const auto last = item.find_last_not_of(" \t");
    item = item.substr(first, last - first + 1);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || !std::isfinite(value)) throw DomainError("not a number: '" + item + "'");
    out.push_back(value);
  }
  if (out.empty()) throw DomainError("empty list");
  return out;
}

unsigned thread_cap() {
  const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("RADIX_THREADS");
  if (env == nullptr || *env == '\0') return hardware;
  char* end = nullptr;
  const long requested = std::strtol(env, &end, 10);
  if (*end != '\0' || requested < 0) return hardware;
  if (requested == 0) return 1;
  return static_cast<unsigned>(std::min<long>(requested, 1024));
}

namespace {

void validate(const SolveOptions& opts) {
  if (!std::isfinite(opts.alpha) || opts.alpha < 0.0) {
    throw DomainError("alpha must be a finite number >= 0, got " + std::to_string(opts.alpha));
  }
  if (opts.orders < 0) throw DomainError("orders must be >= 0");
  if (!(opts.tol_delta > 0.0)) throw DomainError("tol-delta must be positive");
  if (opts.lambda && !(*opts.lambda > 0.0 && *opts.lambda < 2.0)) throw DomainError("lambda must lie in (0, 2)");
}

void write_wavefunction(const std::string& path, const HulthenTrial& phi, const GridFunction& f) {
  std::ofstream file(path);
  if (!file) throw DomainError("cannot write wavefunction to '" + path + "'");
  file << "# r psi\n";
  file.precision(17);
  for (const auto& [r, psi] : normalized_wavefunction(phi, f)) file << r << ' ' << psi << '\n';
  if (!file) throw DomainError("write to '" + path + "' failed");
}

}  // namespace

RunRecord solve_record(const SolveOptions& opts, std::ostream& warn) {
  validate(opts);
  const auto start = std::chrono::steady_clock::now();

  SolverConfig cfg;
  cfg.iteration.max_order = opts.orders;
  cfg.iteration.tol_delta = opts.tol_delta;
  cfg.pinned_lambda = opts.lambda;
  const GroundStateSolution sol = solve_ground_state(opts.alpha, cfg);
  const IterationReport& report = sol.report;

  RunRecord rec;
  rec.alpha = opts.alpha;
  rec.lambda_star = sol.variational.lambda_star;
  rec.E_lambda = sol.variational.E_lambda;
  if (opts.orders == 0) {
    rec.delta_n.push_back(sol.variational.delta_1);
    rec.E_n.push_back(sol.variational.E_1);
  }
  for (std::size_t k = 1; k < report.states.size(); ++k) {
    rec.delta_n.push_back(report.states[k].delta);
    rec.E_n.push_back(report.states[k].energy);
  }
  rec.residuals = report.residuals;
  rec.converged = report.converged;
  rec.stop_reason = std::string(to_string(report.stop_reason));
  if (sol.variational.near_threshold) {
    warn << "warning: alpha = " << opts.alpha << " gives lambda* = " << rec.lambda_star
         << ", close to the trial's binding threshold lambda = 2\n";
  }
  if (!report.diagnostic.empty()) warn << "warning: alpha = " << opts.alpha << ": " << report.diagnostic << '\n';

  if (opts.oracle) {
    try {
      rec.E_oracle = shoot_ground_state(RadialPotential::yukawa(opts.alpha));
    } catch (const NoBoundStateError& e) {
      warn << "warning: alpha = " << opts.alpha << ": oracle found no bound state (" << e.what() << ")\n";
    }
  }
  if (!opts.wavefunction_path.empty()) {
    write_wavefunction(opts.wavefunction_path, HulthenTrial{rec.lambda_star}, report.last().f);
  }

  rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::vector<RunRecord> solve_table(const std::vector<double>& alphas, const std::vector<double>& lambdas,
                                   const SolveOptions& base, unsigned threads, std::ostream& warn) {
  if (alphas.empty()) throw DomainError("no alpha values given");
  if (!lambdas.empty() && lambdas.size() != alphas.size()) {
    throw DomainError("--lambdas needs one value per alpha");
  }
  std::vector<std::size_t> order(alphas.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return alphas[a] < alphas[b]; });

  std::vector<SolveOptions> jobs;
  for (std::size_t i : order) {
    SolveOptions opts = base;
    opts.alpha = alphas[i];
    if (!lambdas.empty()) opts.lambda = lambdas[i];
    validate(opts);
    jobs.push_back(opts);
  }

  std::vector<RunRecord> records(jobs.size());
  std::vector<std::string> warnings(jobs.size());
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        std::ostringstream local;
        records[i] = solve_record(jobs[i], local);
        warnings[i] = local.str();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned n = std::min<unsigned>(std::max(1u, threads), static_cast<unsigned>(jobs.size()));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  for (const auto& w : warnings) warn << w;
  if (failure) std::rethrow_exception(failure);
  return records;
}

namespace {

std::string render(const std::vector<RunRecord>& records, const std::string& format) {
  return format == "csv" ? to_csv(records) : to_json(records);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw DomainError("cannot open output file '" + path + "'");
  file << text;
  if (!file) throw DomainError("write to '" + path + "' failed");
}

int exit_code_for(const std::vector<RunRecord>& records) {
  for (const auto& r : records) {
    if (r.stop_reason == "divergence") return kExitDivergence;
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Yukawa ground states by variational Hulthen fit and Green-function iteration", "radix"};
  app.require_subcommand(1);

  SolveOptions solve_opts;
  std::string solve_format = "json";
  std::string solve_out;
  std::optional<double> solve_lambda;
  auto* solve = app.add_subcommand("solve", "Solve one screening value");
  solve->add_option("--alpha", solve_opts.alpha, "Screening alpha >= 0")->required();
  solve->add_option("--orders", solve_opts.orders, "Iteration orders (0 = variational only)")->capture_default_str();
  solve->add_option("--tol-delta", solve_opts.tol_delta, "Stop once |Delta_n - Delta_n-1| is below this")
      ->capture_default_str();
  solve->add_flag("--oracle", solve_opts.oracle, "Add the shooting-method reference energy");
  solve->add_option("--wavefunction", solve_opts.wavefunction_path, "Write normalised (r, Psi) pairs here");
  solve->add_option("--lambda", solve_lambda, "Fix lambda instead of minimising");
  solve->add_option("--format", solve_format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  solve->add_option("--out", solve_out, "Output file (default stdout)");

  SolveOptions table_opts;
  std::optional<std::string> alphas_text;
  std::optional<std::string> lambdas_text;
  std::string table_format = "csv";
  std::string table_out;
  auto* table = app.add_subcommand("table", "Sweep a list of screening values");
  table->add_option("--alphas", alphas_text, "Comma-separated alphas, or default14");
  table->add_option("--lambdas", lambdas_text, "Comma-separated fixed lambdas, one per alpha");
  table->add_option("--orders", table_opts.orders)->capture_default_str();
  table->add_option("--tol-delta", table_opts.tol_delta)->capture_default_str();
  table->add_flag("--oracle", table_opts.oracle, "Add the shooting-method reference energy");
  table->add_option("--format", table_format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  table->add_option("--out", table_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) {
      solve_opts.lambda = solve_lambda;
      const std::vector<RunRecord> records{solve_record(solve_opts, err)};
      emit(render(records, solve_format), solve_out, out);
      return exit_code_for(records);
    }
    std::vector<double> alphas = default_alphas();
    if (alphas_text && *alphas_text != "default14") alphas = parse_list(*alphas_text);
    std::vector<double> lambdas;
    if (lambdas_text) lambdas = parse_list(*lambdas_text);
    // fail on an unwritable path before spending time on the solves
    if (!table_out.empty()) {
      std::ofstream probe(table_out, std::ios::app);
      if (!probe) throw DomainError("cannot open output file '" + table_out + "'");
    }
    const auto records = solve_table(alphas, lambdas, table_opts, thread_cap(), err);
    emit(render(records, table_format), table_out, out);
    return exit_code_for(records);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace radix
