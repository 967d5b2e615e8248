// Command line front end: generate and ingest instances, run benchmark
// sweeps, check the greedy against the exact optimum, and drive a live
// feedback session.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "adrank/baselines.hpp"
#include "adrank/datasets.hpp"
#include "adrank/errors.hpp"
#include "adrank/experiments.hpp"
#include "adrank/json_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitDominance = 4;

struct DominanceFailure {};  // carries the oracle-mode exit code

void cmd_gen_syn(int k, double eps, const std::string& out_path) {
  adrank::SynParams params{k, eps};
  adrank::Instance inst = adrank::gen_syn(params);
  adrank::save_instance(inst, out_path);
  std::cout << "wrote " << out_path << " (n=" << inst.num_elements()
            << ", m=" << inst.num_scenarios() << ", eps=" << params.eps_or_default()
            << ")\n";
}

void cmd_ingest(const std::string& data_path, const std::string& app,
                const std::string& rule, std::uint64_t seed,
                const std::string& out_path) {
  adrank::RatingsMatrix matrix = adrank::ingest_movielens(data_path);
  std::cout << "ratings: " << matrix.users << " users, " << matrix.items
            << " items, " << matrix.memberships << " liked memberships\n";
  std::vector<double> probs = adrank::uniform_probs(matrix.users);
  adrank::BuiltInstance built;
  if (app == "mir") {
    built = adrank::mir_instance_from_ratings(
        matrix, probs, adrank::parse_k_rule(rule.empty() ? "full" : rule), seed);
  } else if (app == "odt") {
    built = adrank::odt_instance_from_ratings(
        matrix, probs, adrank::parse_t_rule(rule.empty() ? "1" : rule), seed);
  } else {
    throw std::invalid_argument("expected --app mir or odt, got '" + app + "'");
  }
  for (const std::string& warning : built.warnings)
    std::cerr << "warning: " << warning << "\n";
  adrank::save_instance(built.instance, out_path);
  std::cout << "wrote " << out_path << " (n=" << built.instance.num_elements()
            << ", m=" << built.instance.num_scenarios() << ")\n";
}

void cmd_run(const adrank::ExperimentConfig& config) {
  adrank::ExperimentReport report = adrank::run_experiment(config);
  std::cout << report.table();
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(report.config));
  std::cout << "config " << buf << ", instance fingerprint ";
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(report.instance_fingerprint));
  std::cout << buf << "\n";
  if (!config.output_csv.empty()) {
    std::ofstream out(config.output_csv);
    if (!out) throw std::runtime_error("cannot write csv file: " + config.output_csv);
    out << report.csv();
    std::cout << "csv written to " << config.output_csv << "\n";
  }
}

void cmd_oracle(int n, int m, int trials, std::uint64_t seed) {
  adrank::OracleCompareSummary summary = adrank::oracle_compare(n, m, trials, seed);
  for (std::size_t t = 0; t < summary.trials.size(); ++t) {
    const adrank::OracleTrial& trial = summary.trials[t];
    std::printf("trial %4zu: app=%-4s n=%d m=%d opt=%-12.10g alg=%-12.10g ratio=%.6f%s\n",
                t, trial.app.c_str(), trial.n, trial.m, trial.opt, trial.alg,
                trial.ratio, trial.ok ? "" : "  VIOLATION");
  }
  std::printf("%d trials: max ratio %.6f, mean ratio %.6f, %d violation(s)\n",
              static_cast<int>(summary.trials.size()), summary.max_ratio,
              summary.mean_ratio, summary.violations);
  if (summary.violations > 0) {
    std::cerr << "greedy beat the exact optimum; dominance assertion failed\n";
    throw DominanceFailure{};
  }
}

void cmd_interactive(const std::string& instance_path, const std::string& alg,
                     std::uint64_t seed) {
  adrank::Instance inst = adrank::load_instance(instance_path);
  auto policy = adrank::make_policy(alg, inst, seed);
  adrank::interactive_session(inst, *policy, std::cin, std::cout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adaptive ranking benchmark toolkit"};
  app.require_subcommand(1);

  // gen syn
  auto* gen = app.add_subcommand("gen", "generate a synthetic instance");
  gen->require_subcommand(1);
  auto* gen_syn = gen->add_subcommand("syn", "hard family for splitting greedies");
  int syn_k = 1;
  double syn_eps = -1.0;
  std::string gen_out;
  gen_syn->add_option("--k", syn_k, "family size parameter")->required();
  gen_syn->add_option("--eps", syn_eps, "probability perturbation in (0, 2^-(k+2))");
  gen_syn->add_option("-o,--out", gen_out, "output instance json")->required();
  gen_syn->callback([&] { cmd_gen_syn(syn_k, syn_eps, gen_out); });

  // ingest ml100k
  auto* ingest = app.add_subcommand("ingest", "build an instance from a dataset");
  ingest->require_subcommand(1);
  auto* ml100k = ingest->add_subcommand("ml100k", "MovieLens 100k ratings");
  std::string ingest_data, ingest_app, ingest_rule, ingest_out;
  std::uint64_t ingest_seed = 0;
  ml100k->add_option("--data", ingest_data, "path to u.data")->required();
  ml100k->add_option("--app", ingest_app, "mir or odt")->required();
  ml100k->add_option("--threshold-rule", ingest_rule,
                     "mir: full|s2-s|s4-s|1-s2|1-s4; odt: 1|1-5|5-10");
  ml100k->add_option("--seed", ingest_seed, "threshold sampling seed");
  ml100k->add_option("-o,--out", ingest_out, "output instance json")->required();
  ml100k->callback(
      [&] { cmd_ingest(ingest_data, ingest_app, ingest_rule, ingest_seed, ingest_out); });

  // run
  auto* run = app.add_subcommand("run", "run algorithms and report expected costs");
  std::string run_config;
  adrank::ExperimentConfig inline_config;
  inline_config.seeds.clear();
  bool has_inline = false;
  run->add_option("--config", run_config, "experiment config json");
  run->add_option("--instance", inline_config.instance_path, "instance json file");
  run->add_option("--dataset", inline_config.dataset, "syn:<k> or ml100k");
  run->add_option("--data", inline_config.data_path, "ratings file for ml100k");
  run->add_option("--app", inline_config.app, "mir or odt (ml100k)");
  run->add_option("--threshold-rule", inline_config.threshold_rule, "threshold rule");
  run->add_option("--dist", inline_config.distribution, "uniform or powerlaw:<alpha>");
  run->add_option("--seeds", inline_config.seeds, "permutation seeds")->delimiter(',');
  run->add_option("--alg", inline_config.algorithms, "algorithm ids")->delimiter(',');
  run->add_option("--ml-runs", inline_config.ml_runs, "averaging count for ml");
  run->add_option("--base-seed", inline_config.base_seed, "threshold/value seed");
  run->add_option("--out", inline_config.output_csv, "csv output path");
  run->callback([&] {
    has_inline = !inline_config.instance_path.empty() || !inline_config.dataset.empty();
    if (run_config.empty() == !has_inline)
      throw std::invalid_argument(
          "pass either --config or an inline --instance/--dataset source");
    if (run_config.empty()) {
      if (inline_config.seeds.empty()) inline_config.seeds = {0};
      cmd_run(inline_config);
    } else {
      adrank::ExperimentConfig config = adrank::load_config(run_config);
      if (!inline_config.output_csv.empty()) config.output_csv = inline_config.output_csv;
      cmd_run(config);
    }
  });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "compare greedy against the exact optimum");
  int oracle_n = 6, oracle_m = 4, oracle_trials = 500;
  std::uint64_t oracle_seed = 1;
  oracle->add_option("--n", oracle_n, "max elements (<= 12)");
  oracle->add_option("--m", oracle_m, "max scenarios (<= 8)");
  oracle->add_option("--trials", oracle_trials, "number of random instances");
  oracle->add_option("--seed", oracle_seed, "instance stream seed");
  oracle->callback([&] { cmd_oracle(oracle_n, oracle_m, oracle_trials, oracle_seed); });

  // interactive
  auto* interactive = app.add_subcommand("interactive", "answer feedback prompts live");
  std::string inter_instance, inter_alg = "adsub";
  std::uint64_t inter_seed = 0;
  interactive->add_option("--instance", inter_instance, "instance json file")->required();
  interactive->add_option("--alg", inter_alg, "algorithm id");
  interactive->add_option("--seed", inter_seed, "policy seed");
  interactive->callback([&] { cmd_interactive(inter_instance, inter_alg, inter_seed); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  } catch (const DominanceFailure&) {
    return kExitDominance;
  } catch (const adrank::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}
