#include "adrank/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "adrank/asr.hpp"
#include "adrank/errors.hpp"
#include "adrank/exact.hpp"

namespace adrank {

int odt_greedy_select(const AlgoState& state, const Instance& inst) {
  if (inst.alphabet() != 2)
    throw std::invalid_argument("mass-splitting greedy requires binary feedback");
  int n = inst.num_elements();
  std::vector<double> yes_mass(n, 0.0);
  double total_mass = 0.0;
  for (int i : state.alive) {
    double p = inst.prob(i);
    total_mass += p;
    inst.interest_row(i).for_each_set([&](int e) { yes_mass[e] += p; });
  }
  int best = -1;
  double best_value = 0.0;
  for (int e = 0; e < n; ++e) {
    if (state.displayed.test(e)) continue;
    double value = std::min(yes_mass[e], total_mass - yes_mass[e]) / inst.cost(e);
    if (value > best_value) {
      best = e;
      best_value = value;
    }
  }
  if (best != -1) return best;

  // Nothing splits positive mass; drive coverage by weighted marginal gain.
  std::vector<double> gain(n, 0.0);
  for (std::size_t pos = 0; pos < state.alive.size(); ++pos) {
    double p = inst.prob(state.alive[pos]);
    if (p <= 0.0) continue;
    state.evals[pos]->add_weighted_gains(state.displayed, p, gain);
  }
  for (int e = 0; e < n; ++e) {
    if (state.displayed.test(e)) continue;
    double value = gain[e] / inst.cost(e);
    if (value > best_value) {
      best = e;
      best_value = value;
    }
  }
  if (best == -1)
    throw std::logic_error("no element makes progress for the splitting greedy");
  return best;
}

// ---------------- clustering ---------------- //

namespace {

/// Sparse element feature columns: scenario ids with yes-feedback per element.
std::vector<std::vector<int>> element_columns(const Instance& inst) {
  std::vector<std::vector<int>> cols(inst.num_elements());
  for (int i = 0; i < inst.num_scenarios(); ++i)
    inst.interest_row(i).for_each_set([&](int e) { cols[e].push_back(i); });
  return cols;
}

double sq_dist_to_point(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t ia = 0, ib = 0, common = 0;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia] == b[ib]) ++common, ++ia, ++ib;
    else if (a[ia] < b[ib]) ++ia;
    else ++ib;
  }
  return static_cast<double>(a.size() + b.size() - 2 * common);
}

}  // namespace

ClusterModel kmeans_cluster(const Instance& inst, int K, std::uint64_t seed) {
  int n = inst.num_elements();
  int m = inst.num_scenarios();
  if (K < 1 || K > n)
    throw std::invalid_argument("cluster count " + std::to_string(K) +
                                " outside [1, n] with n = " + std::to_string(n));
  auto cols = element_columns(inst);
  Rng rng(substream_seed(seed, "kmeans"));

  // k-means++ seeding on the actual columns.
  std::vector<int> centers;
  centers.push_back(static_cast<int>(next_index(rng, n)));
  std::vector<double> d2(n);
  while (static_cast<int>(centers.size()) < K) {
    double total = 0.0;
    for (int e = 0; e < n; ++e) {
      double best = sq_dist_to_point(cols[e], cols[centers[0]]);
      for (std::size_t c = 1; c < centers.size(); ++c)
        best = std::min(best, sq_dist_to_point(cols[e], cols[centers[c]]));
      d2[e] = best;
      total += best;
    }
    int pick = -1;
    if (total > 0.0) {
      double r = next_double(rng) * total;
      for (int e = 0; e < n; ++e) {
        r -= d2[e];
        if (r <= 0.0) {
          pick = e;
          break;
        }
      }
      if (pick == -1) pick = n - 1;
    } else {
      // All remaining points duplicate a center; take any unchosen element.
      for (int e = 0; e < n && pick == -1; ++e)
        if (std::find(centers.begin(), centers.end(), e) == centers.end()) pick = e;
    }
    centers.push_back(pick);
  }

  // Lloyd iterations with dense centroids.
  std::vector<std::vector<double>> centroid(K, std::vector<double>(m, 0.0));
  for (int c = 0; c < K; ++c)
    for (int i : cols[centers[c]]) centroid[c][i] = 1.0;

  std::vector<int> assign(n, -1);
  for (int round = 0; round < 100; ++round) {
    std::vector<double> c_norm2(K, 0.0);
    for (int c = 0; c < K; ++c)
      for (double v : centroid[c]) c_norm2[c] += v * v;
    bool changed = false;
    for (int e = 0; e < n; ++e) {
      int best = 0;
      double best_d = 0.0;
      for (int c = 0; c < K; ++c) {
        double dot = 0.0;
        for (int i : cols[e]) dot += centroid[c][i];
        double d = static_cast<double>(cols[e].size()) - 2.0 * dot + c_norm2[c];
        if (c == 0 || d < best_d) {
          best = c;
          best_d = d;
        }
      }
      if (assign[e] != best) {
        assign[e] = best;
        changed = true;
      }
    }
    if (!changed) break;
    std::vector<int> count(K, 0);
    std::vector<std::vector<double>> sum(K, std::vector<double>(m, 0.0));
    for (int e = 0; e < n; ++e) {
      ++count[assign[e]];
      for (int i : cols[e]) sum[assign[e]][i] += 1.0;
    }
    for (int c = 0; c < K; ++c) {
      if (count[c] == 0) continue;  // empty cluster keeps its centroid
      for (int i = 0; i < m; ++i) centroid[c][i] = sum[c][i] / count[c];
    }
  }

  ClusterModel model;
  model.K = K;
  model.assignment = std::move(assign);
  model.weights.assign(K, 1.0);
  return model;
}

int ml_select(const AlgoState& state, const ClusterModel& model, Rng& rng) {
  int n = static_cast<int>(model.assignment.size());
  std::vector<std::vector<int>> open(model.K);
  for (int e = 0; e < n; ++e)
    if (!state.displayed.test(e)) open[model.assignment[e]].push_back(e);
  double total = 0.0;
  for (int c = 0; c < model.K; ++c)
    if (!open[c].empty()) total += model.weights[c];
  if (total <= 0.0) {
    // Either everything is displayed or weights underflowed to zero.
    std::vector<int> nonempty;
    for (int c = 0; c < model.K; ++c)
      if (!open[c].empty()) nonempty.push_back(c);
    if (nonempty.empty())
      throw PolicyIncompleteError("every element already displayed");
    int c = nonempty[next_index(rng, nonempty.size())];
    return open[c][next_index(rng, open[c].size())];
  }
  double r = next_double(rng) * total;
  int chosen = -1;
  for (int c = 0; c < model.K; ++c) {
    if (open[c].empty()) continue;
    chosen = c;
    r -= model.weights[c];
    if (r <= 0.0) break;
  }
  return open[chosen][next_index(rng, open[chosen].size())];
}

void ml_update(ClusterModel& model, int e, bool outcome) {
  model.weights[model.assignment[e]] *= outcome ? 2.0 : 0.5;
}

// ---------------- static ranking ---------------- //

std::vector<int> static_rank(const Instance& inst) {
  int n = inst.num_elements();
  int m = inst.num_scenarios();
  struct Tracked {
    int scenario;
    double p;
    std::unique_ptr<OracleEval> eval;
  };
  std::vector<Tracked> open;
  for (int i = 0; i < m; ++i) {
    if (inst.prob(i) <= 0.0) continue;
    auto ev = inst.oracle(i).start();
    if (ev->covered()) continue;
    open.push_back(Tracked{i, inst.prob(i), std::move(ev)});
  }

  std::vector<int> rank;
  rank.reserve(n);
  DynBitset used(n);
  std::vector<double> gain(n);
  while (!open.empty()) {
    std::fill(gain.begin(), gain.end(), 0.0);
    for (const Tracked& t : open)
      t.eval->add_weighted_gains(used, t.p / (1.0 - t.eval->value()), gain);
    int best = -1;
    double best_score = 0.0;
    for (int e = 0; e < n; ++e) {
      if (used.test(e)) continue;
      double score = gain[e] / inst.cost(e);
      if (score > best_score) {
        best = e;
        best_score = score;
      }
    }
    if (best == -1) break;  // unreachable on validated instances
    rank.push_back(best);
    used.set(best);
    for (Tracked& t : open) t.eval->add(best);
    std::erase_if(open, [](const Tracked& t) { return t.eval->covered(); });
  }
  for (int e = 0; e < n; ++e)
    if (!used.test(e)) rank.push_back(e);
  return rank;
}

int StaticPolicy::select(const AlgoState& state, const Instance&) {
  for (int e : rank_)
    if (!state.displayed.test(e)) return e;
  throw PolicyIncompleteError("static rank exhausted");
}

int adstatic_select(const AlgoState& state, std::span<const int> rank,
                    const Instance& inst) {
  int fallback = -1;
  for (int e : rank) {
    if (state.displayed.test(e)) continue;
    if (fallback == -1) fallback = e;
    for (int i : state.alive)
      if (inst.in_interest(i, e)) return e;
  }
  if (fallback == -1) throw PolicyIncompleteError("static rank exhausted");
  return fallback;
}

int RandomPolicy::select(const AlgoState& state, const Instance& inst) {
  int n = inst.num_elements();
  int open = n - state.num_displayed;
  if (open <= 0) throw PolicyIncompleteError("every element already displayed");
  int skip = static_cast<int>(next_index(rng_, open));
  for (int e = 0; e < n; ++e) {
    if (state.displayed.test(e)) continue;
    if (skip-- == 0) return e;
  }
  throw std::logic_error("displayed-element bookkeeping out of sync");
}

// ---------------- registry ---------------- //

namespace {

// Returns the suffix after `prefix` parsed as a nonnegative integer, or -1.
long long parse_id_number(const std::string& id, std::size_t prefix) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(id.substr(prefix), &used);
    if (used != id.size() - prefix || v < 0) return -1;
    return v;
  } catch (const std::exception&) {
    return -1;
  }
}

}  // namespace

void check_algorithm_id(const std::string& id) {
  if (id == "adsub" || id == "odt-greedy" || id == "static" || id == "adstatic" ||
      id == "exact-opt")
    return;
  if (id.rfind("ml:", 0) == 0) {
    if (parse_id_number(id, 3) < 1)
      throw std::invalid_argument("bad cluster count in algorithm id '" + id + "'");
    return;
  }
  if (id.rfind("random:", 0) == 0) {
    if (parse_id_number(id, 7) < 0)
      throw std::invalid_argument("bad seed in algorithm id '" + id + "'");
    return;
  }
  throw std::invalid_argument("unknown algorithm id '" + id + "'");
}

std::unique_ptr<Policy> make_policy(const std::string& id, const Instance& inst,
                                    std::uint64_t seed) {
  if (id == "adsub") return std::make_unique<AsrPolicy>();
  if (id == "odt-greedy") return std::make_unique<OdtGreedyPolicy>();
  if (id == "static") return std::make_unique<StaticPolicy>(inst);
  if (id == "adstatic") return std::make_unique<AdstaticPolicy>(inst);
  if (id == "exact-opt") return make_exact_opt_policy(inst);
  if (id.rfind("ml:", 0) == 0) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(id.substr(3), &used);
      if (used != id.size() - 3) k = 0;
    } catch (const std::exception&) {
      k = 0;
    }
    if (k < 1) throw std::invalid_argument("bad cluster count in algorithm id '" + id + "'");
    ClusterModel model = kmeans_cluster(inst, k, seed);  // derives its own substream
    return std::make_unique<MlPolicy>(std::move(model), substream_seed(seed, "ml"));
  }
  if (id.rfind("random:", 0) == 0) {
    std::uint64_t s = 0;
    try {
      std::size_t used = 0;
      s = std::stoull(id.substr(7), &used);
      if (used != id.size() - 7) throw std::invalid_argument(id);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad seed in algorithm id '" + id + "'");
    }
    return std::make_unique<RandomPolicy>(s);
  }
  throw std::invalid_argument("unknown algorithm id '" + id + "'");
}

bool is_randomized_algorithm(const std::string& id) {
  return id.rfind("ml:", 0) == 0;
}

}  // namespace adrank
