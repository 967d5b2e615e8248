#include "adrank/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <unordered_set>

#include <json.hpp>

#include "adrank/asr.hpp"
#include "adrank/baselines.hpp"
#include "adrank/datasets.hpp"
#include "adrank/errors.hpp"
#include "adrank/exact.hpp"
#include "adrank/functions.hpp"
#include "adrank/json_io.hpp"

namespace adrank {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

[[noreturn]] void config_fail(const std::string& field, const std::string& what) {
  throw std::invalid_argument("config field '" + field + "': " + what);
}

struct Distribution {
  enum class Kind { unset, uniform, powerlaw } kind = Kind::unset;
  double alpha = 0.0;
  std::string spelled;  // as written, for the report column
};

Distribution parse_distribution(const std::string& text) {
  Distribution d;
  d.spelled = text;
  if (text.empty()) return d;
  if (text == "uniform") {
    d.kind = Distribution::Kind::uniform;
    return d;
  }
  if (text.rfind("powerlaw:", 0) == 0) {
    try {
      std::size_t used = 0;
      d.alpha = std::stod(text.substr(9), &used);
      if (used != text.size() - 9) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      config_fail("distribution", "bad exponent in '" + text + "'");
    }
    if (d.alpha < 1.0) config_fail("distribution", "exponent must be at least 1");
    d.kind = Distribution::Kind::powerlaw;
    return d;
  }
  config_fail("distribution", "expected uniform or powerlaw:<alpha>, got '" + text + "'");
}

int parse_syn_k(const std::string& dataset) {
  try {
    std::size_t used = 0;
    int k = std::stoi(dataset.substr(4), &used);
    if (used != dataset.size() - 4 || k < 1) throw std::invalid_argument(dataset);
    return k;
  } catch (const std::exception&) {
    config_fail("dataset", "bad size in '" + dataset + "'");
  }
}

/// Base instance plus everything needed to derive the per-seed variants.
struct PreparedSource {
  Instance base;
  std::string dataset;
  std::string app;
  std::string distribution;           // recorded column value
  std::vector<double> powerlaw_values;  // pre-permutation values, or empty
};

void check_common(const ExperimentConfig& config) {
  if (config.algorithms.empty())
    config_fail("algorithms", "at least one algorithm required");
  for (const std::string& id : config.algorithms) {
    try {
      check_algorithm_id(id);
    } catch (const std::invalid_argument& e) {
      config_fail("algorithms", e.what());
    }
  }
  if (config.seeds.empty()) config_fail("seeds", "at least one seed required");
  if (config.ml_runs < 1) config_fail("ml_runs", "must be positive");
}

PreparedSource prepare_source(const ExperimentConfig& config) {
  check_common(config);
  bool have_dataset = !config.dataset.empty();
  bool have_file = !config.instance_path.empty();
  if (have_dataset == have_file)
    config_fail("dataset", "exactly one of 'dataset' and 'instance' is required");

  Distribution dist = parse_distribution(config.distribution);
  PreparedSource out;

  if (have_dataset && config.dataset.rfind("syn:", 0) == 0) {
    if (dist.kind != Distribution::Kind::unset)
      config_fail("distribution", "syn instances fix their probabilities");
    if (!config.data_path.empty() || !config.app.empty() || !config.threshold_rule.empty())
      config_fail("dataset", "'data', 'app' and 'threshold_rule' do not apply to syn");
    SynParams params{parse_syn_k(config.dataset), config.syn_eps};
    out.base = gen_syn(params);
    out.dataset = config.dataset;
    out.distribution = "syn";
  } else if (have_dataset && config.dataset == "ml100k") {
    if (config.data_path.empty())
      config_fail("data", "path to the ratings file is required for ml100k");
    RatingsMatrix matrix = ingest_movielens(config.data_path);
    std::vector<double> probs = uniform_probs(matrix.users);
    if (config.app == "mir") {
      KRule rule = parse_k_rule(config.threshold_rule.empty() ? "full"
                                                              : config.threshold_rule);
      out.base = mir_instance_from_ratings(matrix, probs, rule, config.base_seed)
                     .instance;
    } else if (config.app == "odt") {
      TRule rule =
          parse_t_rule(config.threshold_rule.empty() ? "1" : config.threshold_rule);
      out.base = odt_instance_from_ratings(matrix, probs, rule, config.base_seed)
                     .instance;
    } else {
      config_fail("app", "expected mir or odt, got '" + config.app + "'");
    }
    out.dataset = "ml100k";
    out.distribution = dist.kind == Distribution::Kind::powerlaw ? dist.spelled
                                                                 : "uniform";
  } else if (have_dataset) {
    config_fail("dataset", "expected syn:<k> or ml100k, got '" + config.dataset + "'");
  } else {
    if (!config.data_path.empty() || !config.app.empty() || !config.threshold_rule.empty())
      config_fail("instance", "'data', 'app' and 'threshold_rule' do not apply");
    out.base = load_instance(config.instance_path);
    out.dataset = std::filesystem::path(config.instance_path).stem().string();
    switch (dist.kind) {
      case Distribution::Kind::unset:
        out.distribution = "file";
        break;
      case Distribution::Kind::uniform:
        out.base = out.base.with_probs(uniform_probs(out.base.num_scenarios()));
        out.distribution = "uniform";
        break;
      case Distribution::Kind::powerlaw:
        out.distribution = dist.spelled;
        break;
    }
  }

  if (dist.kind == Distribution::Kind::powerlaw)
    out.powerlaw_values =
        powerlaw_probs(out.base.num_scenarios(), dist.alpha, config.base_seed);
  out.app = app_name(out.base.app());
  ensure_valid(out.base);
  return out;
}

std::string format_double(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

double run_algorithm(const std::string& id, const Instance& inst,
                     std::uint64_t seed, int ml_runs) {
  if (is_randomized_algorithm(id)) {
    double acc = 0.0;
    for (int r = 0; r < ml_runs; ++r) {
      auto policy = make_policy(id, inst, substream_seed(seed, "ml-run", r));
      acc += expected_cost(*policy, inst);
    }
    return acc / ml_runs;
  }
  auto policy = make_policy(id, inst, seed);
  return expected_cost(*policy, inst);
}

}  // namespace

ExperimentConfig config_from_json(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (!root.is_object()) throw std::invalid_argument("config: expected an object");

  ExperimentConfig config;
  config.seeds.clear();
  for (const auto& [key, value] : root.items()) {
    try {
      if (key == "dataset") config.dataset = value.get<std::string>();
      else if (key == "instance") config.instance_path = value.get<std::string>();
      else if (key == "data") config.data_path = value.get<std::string>();
      else if (key == "app") config.app = value.get<std::string>();
      else if (key == "threshold_rule") config.threshold_rule = value.get<std::string>();
      else if (key == "distribution") config.distribution = value.get<std::string>();
      else if (key == "seeds") config.seeds = value.get<std::vector<std::uint64_t>>();
      else if (key == "algorithms") config.algorithms = value.get<std::vector<std::string>>();
      else if (key == "ml_runs") config.ml_runs = value.get<int>();
      else if (key == "base_seed") config.base_seed = value.get<std::uint64_t>();
      else if (key == "syn_eps") config.syn_eps = value.get<double>();
      else if (key == "out") config.output_csv = value.get<std::string>();
      else config_fail(key, "unknown field");
    } catch (const nlohmann::json::exception&) {
      config_fail(key, "wrong type");
    }
  }
  if (config.seeds.empty()) config.seeds = {0};
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return config_from_json(buf.str());
}

std::uint64_t config_hash(const ExperimentConfig& config) {
  std::ostringstream canon;
  canon << "dataset=" << config.dataset << ";instance=" << config.instance_path
        << ";data=" << config.data_path << ";app=" << config.app
        << ";rule=" << config.threshold_rule << ";dist=" << config.distribution
        << ";seeds=";
  for (std::uint64_t s : config.seeds) canon << s << ",";
  canon << ";algs=";
  for (const std::string& a : config.algorithms) canon << a << ",";
  canon << ";ml_runs=" << config.ml_runs << ";base_seed=" << config.base_seed
        << ";eps=" << format_double("%.17g", config.syn_eps);
  return substream_seed(0x61647261ull, canon.str());
}

std::string ExperimentReport::csv() const {
  std::string out = "config_hash,dataset,app,distribution,seed,algorithm,"
                    "expected_cost,wall_ms\n";
  char hash_buf[32];
  std::snprintf(hash_buf, sizeof(hash_buf), "%016llx",
                static_cast<unsigned long long>(config));
  for (const RunRow& row : rows) {
    out += hash_buf;
    out += ',';
    out += row.dataset;
    out += ',';
    out += row.app;
    out += ',';
    out += row.distribution;
    out += ',';
    out += std::to_string(row.seed);
    out += ',';
    out += row.algorithm;
    out += ',';
    out += format_double("%.12g", row.expected_cost);
    out += ',';
    out += format_double("%.3f", row.wall_ms);
    out += '\n';
  }
  return out;
}

std::string ExperimentReport::table() const {
  static const char* kHeaders[] = {"dataset", "app", "distribution", "seed",
                                   "algorithm", "expected_cost", "wall_ms"};
  std::vector<std::vector<std::string>> cells;
  for (const RunRow& row : rows)
    cells.push_back({row.dataset, row.app, row.distribution,
                     std::to_string(row.seed), row.algorithm,
                     format_double("%.6g", row.expected_cost),
                     format_double("%.1f", row.wall_ms)});
  std::size_t width[7];
  for (int c = 0; c < 7; ++c) {
    width[c] = std::string(kHeaders[c]).size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (int c = 0; c < 7; ++c) {
    out << (c ? "  " : "") << kHeaders[c]
        << std::string(width[c] - std::string(kHeaders[c]).size(), ' ');
  }
  out << '\n';
  for (const auto& row : cells) {
    for (int c = 0; c < 7; ++c)
      out << (c ? "  " : "") << row[c] << std::string(width[c] - row[c].size(), ' ');
    out << '\n';
  }
  return out.str();
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  PreparedSource source = prepare_source(config);

  std::vector<Instance> variants;
  variants.reserve(config.seeds.size());
  for (std::uint64_t seed : config.seeds) {
    if (!source.powerlaw_values.empty())
      variants.push_back(
          source.base.with_probs(permute_probs(source.powerlaw_values, seed)));
    else
      variants.push_back(source.base);  // probs identical across seeds
  }

  int num_seeds = static_cast<int>(config.seeds.size());
  int num_algs = static_cast<int>(config.algorithms.size());
  int num_tasks = num_seeds * num_algs;
  std::vector<RunRow> rows(num_tasks);

  std::atomic<int> next{0};
  std::mutex err_mutex;
  std::exception_ptr err;
  auto worker = [&] {
    for (;;) {
      int t = next.fetch_add(1);
      if (t >= num_tasks) return;
      {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (err) return;  // first failure wins, drain remaining tasks
      }
      int si = t / num_algs, ai = t % num_algs;
      RunRow& row = rows[t];
      row.dataset = source.dataset;
      row.app = source.app;
      row.distribution = source.distribution;
      row.seed = config.seeds[si];
      row.algorithm = config.algorithms[ai];
      try {
        auto t0 = Clock::now();
        row.expected_cost =
            run_algorithm(row.algorithm, variants[si], row.seed, config.ml_runs);
        row.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!err) err = std::current_exception();
        return;
      }
    }
  };

  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  unsigned num_workers = std::min<unsigned>(hw, static_cast<unsigned>(num_tasks));
  if (num_workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < num_workers; ++w) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  if (err) std::rethrow_exception(err);

  std::sort(rows.begin(), rows.end(), [](const RunRow& a, const RunRow& b) {
    return std::tie(a.dataset, a.app, a.distribution, a.seed, a.algorithm) <
           std::tie(b.dataset, b.app, b.distribution, b.seed, b.algorithm);
  });

  ExperimentReport report;
  report.config = config_hash(config);
  report.instance_fingerprint = source.base.fingerprint();
  report.rows = std::move(rows);
  return report;
}

// ---------------- random instances and the oracle harness ---------------- //

Instance random_instance(Rng& rng, const RandomInstanceParams& params, int trial) {
  if (params.max_n < 2) throw std::invalid_argument("need max_n >= 2");
  if (params.max_m < 1) throw std::invalid_argument("need max_m >= 1");
  if (params.apps.empty()) throw std::invalid_argument("need at least one app");

  App app = params.apps[trial % params.apps.size()];
  int n = next_int(rng, 2, params.max_n);
  int m = next_int(rng, 1, params.max_m);
  std::uint64_t universe = std::uint64_t{1} << n;
  if (app != App::mir && static_cast<std::uint64_t>(m) > universe)
    m = static_cast<int>(universe);

  auto mask_to_set = [n](std::uint64_t mask) {
    std::vector<int> out;
    for (int e = 0; e < n; ++e)
      if (mask >> e & 1) out.push_back(e);
    return out;
  };

  std::vector<std::vector<int>> sets(m);
  std::vector<int> payload(m);
  if (app == App::mir) {
    for (int i = 0; i < m; ++i) {
      std::uint64_t mask = 1 + next_index(rng, universe - 1);  // nonempty
      sets[i] = mask_to_set(mask);
      payload[i] = next_int(rng, 1, static_cast<int>(sets[i].size()));
    }
  } else {
    std::unordered_set<std::uint64_t> seen;  // distinct rows keep scenarios separable
    for (int i = 0; i < m; ++i) {
      std::uint64_t mask;
      do {
        mask = next_index(rng, universe);
      } while (!seen.insert(mask).second);
      sets[i] = mask_to_set(mask);
      if (app == App::ecd) payload[i] = static_cast<int>(next_index(rng, std::min(m, 3)));
    }
  }

  std::vector<double> probs(m, 0.0);
  for (int ball = 0; ball < 128; ++ball) probs[next_index(rng, m)] += 1.0 / 128.0;

  std::vector<double> costs(n, 1.0);
  if (params.power_of_two_costs)
    for (double& c : costs) c = static_cast<double>(1 << next_index(rng, 3));

  switch (app) {
    case App::mir:
      return make_mir_instance(std::move(costs), std::move(probs), sets,
                               std::move(payload));
    case App::ecd:
      return make_ecd_instance(std::move(costs), std::move(probs), sets,
                               std::move(payload));
    default:
      return make_odt_instance(std::move(costs), std::move(probs), sets);
  }
}

OracleCompareSummary oracle_compare(int max_n, int max_m, int trials,
                                    std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  if (max_n > 12 || max_m > 8)
    throw SizeError("oracle comparison limited to n <= 12 and m <= 8");
  RandomInstanceParams params;
  params.max_n = max_n;
  params.max_m = max_m;

  OracleCompareSummary summary;
  Rng rng = make_rng(seed, "oracle-compare");
  double ratio_sum = 0.0;
  for (int t = 0; t < trials; ++t) {
    Instance inst = random_instance(rng, params, t);
    OracleTrial trial;
    trial.app = app_name(inst.app());
    trial.n = inst.num_elements();
    trial.m = inst.num_scenarios();
    trial.opt = exact_opt_oracle(inst).value;
    trial.alg = build_policy(inst).expected_cost;
    trial.ok = trial.alg >= trial.opt - 1e-9;
    trial.ratio = trial.opt > 1e-12 ? trial.alg / trial.opt : 1.0;
    if (!trial.ok) ++summary.violations;
    summary.max_ratio = std::max(summary.max_ratio, trial.ratio);
    ratio_sum += trial.ratio;
    summary.trials.push_back(std::move(trial));
  }
  summary.mean_ratio = ratio_sum / trials;
  return summary;
}

// ---------------- interactive driver ---------------- //

namespace {

struct SessionSnapshot {
  AlgoState state;
  std::unique_ptr<Policy> policy;
  std::vector<char> compatible;
};

std::vector<int> listed(const std::vector<char>& compatible) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(compatible.size()); ++i)
    if (compatible[i]) out.push_back(i);
  return out;
}

void print_ids(std::ostream& out, const std::vector<int>& ids) {
  for (std::size_t j = 0; j < ids.size(); ++j) out << (j ? " " : "") << ids[j];
}

int parse_symbol(const std::string& token, const Instance& inst) {
  if (inst.alphabet() == 2) {
    if (token == "yes" || token == "y") return kYes;
    if (token == "no" || token == "n") return kNo;
  }
  try {
    std::size_t used = 0;
    int sym = std::stoi(token, &used);
    if (used == token.size() && sym >= 0 && sym < inst.alphabet()) return sym;
  } catch (const std::exception&) {
  }
  return -1;
}

}  // namespace

InteractiveResult interactive_session(const Instance& inst, Policy& policy,
                                      std::istream& in, std::ostream& out) {
  InteractiveResult result;
  AlgoState state = make_root_state(inst);
  std::unique_ptr<Policy> live = policy.fork();
  std::vector<char> compatible(inst.num_scenarios(), 1);
  std::vector<SessionSnapshot> undo_stack;

  auto announce_covered = [&] {
    result.covered = true;
    result.compatible = listed(compatible);
    if (inst.app() == App::godt) {
      out << "done; candidate set: ";
    } else if (inst.app() == App::odt && result.compatible.size() == 1) {
      out << "identified scenario " << result.compatible[0] << "\n";
      return;
    } else {
      out << "covered; compatible scenarios: ";
    }
    print_ids(out, result.compatible);
    out << "\n";
  };

  for (;;) {
    if (state.alive.empty()) {
      announce_covered();
      break;
    }
    if (!state.has_positive_mass(inst)) {
      result.compatible = listed(compatible);
      out << "remaining compatible scenarios all have probability zero; stopping\n";
      break;
    }

    int e = live->select(state, inst);
    out << "select element " << e << " (cost " << inst.cost(e) << ")\n";

    int action = -1;  // parsed symbol, or -2 undo, -3 quit
    for (;;) {
      if (inst.alphabet() == 2)
        out << "feedback (yes/no/undo/quit)? " << std::flush;
      else
        out << "feedback symbol 0-" << static_cast<int>(inst.alphabet()) - 1
            << " (or undo/quit)? " << std::flush;
      std::string token;
      if (!(in >> token)) {
        action = -3;
        break;
      }
      for (char& c : token) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      if (token == "quit" || token == "q") {
        action = -3;
        break;
      }
      if (token == "undo") {
        if (undo_stack.empty()) {
          out << "nothing to undo\n";
          continue;
        }
        action = -2;
        break;
      }
      int sym = parse_symbol(token, inst);
      if (sym < 0) {
        out << "unrecognized feedback '" << token << "'\n";
        continue;
      }
      action = sym;
      break;
    }

    if (action == -3) {
      result.quit = true;
      result.compatible = listed(compatible);
      out << "session ended\n";
      break;
    }
    if (action == -2) {
      SessionSnapshot snap = std::move(undo_stack.back());
      undo_stack.pop_back();
      state = std::move(snap.state);
      live = std::move(snap.policy);
      compatible = std::move(snap.compatible);
      result.elements.pop_back();
      out << "undone\n";
      continue;
    }

    Symbol sym = static_cast<Symbol>(action);
    std::vector<char> next_compatible(inst.num_scenarios(), 0);
    bool any = false;
    for (int i = 0; i < inst.num_scenarios(); ++i)
      if (compatible[i] && inst.feedback(i, e) == sym) next_compatible[i] = any = true;
    if (!any) {
      result.contradiction = true;
      result.compatible.clear();
      out << "no compatible scenario\n";
      break;
    }

    undo_stack.push_back(SessionSnapshot{state.clone(), live->fork(), compatible});
    compatible = std::move(next_compatible);
    result.elements.push_back(e);
    live->observe(e, sym);

    Advance adv = advance_state(state, e, inst);
    int child = -1;
    for (std::size_t j = 0; j < adv.symbols.size(); ++j)
      if (adv.symbols[j] == sym) child = static_cast<int>(j);
    if (child < 0) {
      // no alive scenario gave this symbol, so every remaining compatible
      // scenario was already covered
      announce_covered();
      break;
    }
    state = std::move(adv.children[child]);
  }
  return result;
}

}  // namespace adrank
