#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "adrank/instance.hpp"
#include "adrank/policy.hpp"
#include "adrank/rng.hpp"

namespace adrank {

/// One benchmark sweep: an instance source, a scenario distribution, a set
/// of permutation seeds and a set of algorithms. Every random choice flows
/// from the explicit seeds; nothing reads the wall clock.
struct ExperimentConfig {
  std::string dataset;         // "syn:<k>" | "ml100k" | empty with instance_path
  std::string instance_path;   // instance json file, exclusive with dataset
  std::string data_path;       // ratings file (ml100k)
  std::string app;             // "mir" | "odt" (ml100k)
  std::string threshold_rule;  // K-rule / t-rule name (ml100k), default per app
  std::string distribution;    // "" | "uniform" | "powerlaw:<alpha>"
  std::vector<std::uint64_t> seeds = {0};  // one row set per seed
  std::vector<std::string> algorithms;
  int ml_runs = 25;            // averaging count for randomized algorithms
  std::uint64_t base_seed = 0; // thresholds and distribution values
  double syn_eps = -1.0;       // optional syn override, negative = default
  std::string output_csv;      // optional sink, written by the CLI
};

/// Parses a config json object; unknown or ill-typed fields throw
/// std::invalid_argument naming the field.
ExperimentConfig config_from_json(const std::string& text);
ExperimentConfig load_config(const std::string& path);

/// Stable hash of everything that determines the report's rows.
std::uint64_t config_hash(const ExperimentConfig& config);

struct RunRow {
  std::string dataset;
  std::string app;
  std::string distribution;  // as recorded: uniform | powerlaw:<a> | syn | file
  std::uint64_t seed = 0;
  std::string algorithm;
  double expected_cost = 0.0;
  double wall_ms = 0.0;
};

struct ExperimentReport {
  std::uint64_t config = 0;               // config_hash of the producing config
  std::uint64_t instance_fingerprint = 0; // base instance content hash
  std::vector<RunRow> rows;               // sorted, deterministic order

  /// One line per row: config_hash,dataset,app,distribution,seed,algorithm,
  /// expected_cost,wall_ms. Identical configs give identical output except
  /// for the wall_ms column.
  std::string csv() const;
  /// Human-readable aligned columns.
  std::string table() const;
};

/// Builds the instance, applies the distribution per seed, runs every
/// algorithm on every variant (randomized algorithms averaged over ml_runs
/// reseeded runs) and returns sorted rows. Independent runs execute on a
/// small thread pool.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Random small instances for oracle comparison and property tests. Apps
/// cycle through the list; probabilities are dyadic (multiples of 1/128,
/// zeros allowed) so downstream arithmetic is exact in doubles.
struct RandomInstanceParams {
  int max_n = 6;
  int max_m = 4;
  bool power_of_two_costs = false;  // costs from {1,2,4} instead of unit
  std::vector<App> apps = {App::odt, App::mir, App::ecd};
};

Instance random_instance(Rng& rng, const RandomInstanceParams& params, int trial);

struct OracleTrial {
  std::string app;
  int n = 0;
  int m = 0;
  double opt = 0.0;
  double alg = 0.0;
  double ratio = 1.0;
  bool ok = true;  // alg >= opt - 1e-9
};

struct OracleCompareSummary {
  std::vector<OracleTrial> trials;
  double max_ratio = 1.0;
  double mean_ratio = 1.0;
  int violations = 0;
};

/// Runs `trials` random instances (n in [2, max_n], m in [1, max_m]), solves
/// each exactly and with the adaptive greedy, and checks the dominance
/// OPT <= greedy + 1e-9 on every trial. Bounds must fit the exact solver.
OracleCompareSummary oracle_compare(int max_n, int max_m, int trials,
                                    std::uint64_t seed);

struct InteractiveResult {
  std::vector<int> elements;   // selections in display order
  std::vector<int> compatible; // scenarios consistent with all feedback
  bool covered = false;
  bool contradiction = false;  // feedback matched no scenario
  bool quit = false;
};

/// Drives a policy against live feedback: prints the selected element,
/// reads a symbol (binary: yes/no or a symbol id; multiway: a symbol id),
/// advances, and stops once every compatible scenario is covered. `undo`
/// rewinds one step, `quit` (or end of input) leaves early. Unknown tokens
/// reprompt; feedback matching no scenario ends with "no compatible
/// scenario".
InteractiveResult interactive_session(const Instance& inst, Policy& policy,
                                      std::istream& in, std::ostream& out);

}  // namespace adrank
