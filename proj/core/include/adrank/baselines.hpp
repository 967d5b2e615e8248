#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "adrank/instance.hpp"
#include "adrank/policy.hpp"
#include "adrank/rng.hpp"
#include "adrank/state.hpp"

namespace adrank {

/// Probability-mass splitting greedy: maximizes
/// (1/c_e) * min(mass of alive yes-group, mass of alive no-group), ties to
/// the lowest element id. When no element splits positive mass (single alive
/// scenario, or thresholds still uncovered after identification) it falls
/// back to the best probability-weighted marginal gain so coverage always
/// progresses. Binary instances only.
int odt_greedy_select(const AlgoState& state, const Instance& inst);

class OdtGreedyPolicy final : public Policy {
 public:
  int select(const AlgoState& state, const Instance& inst) override {
    return odt_greedy_select(state, inst);
  }
  std::unique_ptr<Policy> fork() const override {
    return std::make_unique<OdtGreedyPolicy>();
  }
};

/// Element clustering with per-cluster multiplicative weights.
struct ClusterModel {
  int K = 0;
  std::vector<int> assignment;   // element -> cluster id in [0, K)
  std::vector<double> weights;   // per cluster, positive
};

/// k-means over element feature vectors (the binary scenario-incidence
/// columns of the feedback table): k-means++ seeding, Lloyd iterations until
/// convergence or 100 rounds, L2 distance. Deterministic per seed. Weights
/// initialized to 1. K must be in [1, n].
ClusterModel kmeans_cluster(const Instance& inst, int K, std::uint64_t seed);

/// Samples a cluster proportionally to weight among clusters that still have
/// undisplayed elements, then an element uniformly within it. Throws
/// PolicyIncompleteError when every element is displayed.
int ml_select(const AlgoState& state, const ClusterModel& model, Rng& rng);

/// Doubles the weight of e's cluster on a positive outcome (e relevant to
/// the realized scenario), halves it otherwise.
void ml_update(ClusterModel& model, int e, bool outcome);

class MlPolicy final : public Policy {
 public:
  MlPolicy(ClusterModel model, std::uint64_t seed)
      : model_(std::move(model)), rng_(seed) {}
  int select(const AlgoState& state, const Instance&) override {
    return ml_select(state, model_, rng_);
  }
  void observe(int e, Symbol s) override { ml_update(model_, e, s == kYes); }
  std::unique_ptr<Policy> fork() const override {
    return std::make_unique<MlPolicy>(*this);
  }
  bool stateless() const override { return false; }
  const ClusterModel& model() const { return model_; }

 private:
  ClusterModel model_;
  Rng rng_;
};

/// Feedback-free greedy ranking: repeatedly the element with the largest
/// probability-weighted normalized marginal over still-uncovered scenarios,
/// ties to the lowest id; once everything is covered the remaining elements
/// follow in id order. Always a full permutation of the ground set.
std::vector<int> static_rank(const Instance& inst);

class StaticPolicy final : public Policy {
 public:
  explicit StaticPolicy(const Instance& inst) : rank_(static_rank(inst)) {}
  explicit StaticPolicy(std::vector<int> rank) : rank_(std::move(rank)) {}
  int select(const AlgoState& state, const Instance& inst) override;
  std::unique_ptr<Policy> fork() const override {
    return std::make_unique<StaticPolicy>(rank_);
  }
  std::span<const int> rank() const { return rank_; }

 private:
  std::vector<int> rank_;
};

/// First element in rank order that is undisplayed and interests some alive
/// scenario; falls back to plain rank order when nothing does.
int adstatic_select(const AlgoState& state, std::span<const int> rank,
                    const Instance& inst);

class AdstaticPolicy final : public Policy {
 public:
  explicit AdstaticPolicy(const Instance& inst) : rank_(static_rank(inst)) {}
  explicit AdstaticPolicy(std::vector<int> rank) : rank_(std::move(rank)) {}
  int select(const AlgoState& state, const Instance& inst) override {
    return adstatic_select(state, rank_, inst);
  }
  std::unique_ptr<Policy> fork() const override {
    return std::make_unique<AdstaticPolicy>(rank_);
  }

 private:
  std::vector<int> rank_;
};

/// Uniformly random undisplayed element per step; deterministic per seed.
class RandomPolicy final : public Policy {
 public:
  explicit RandomPolicy(std::uint64_t seed) : rng_(seed) {}
  int select(const AlgoState& state, const Instance& inst) override;
  std::unique_ptr<Policy> fork() const override {
    return std::make_unique<RandomPolicy>(*this);
  }
  bool stateless() const override { return false; }

 private:
  Rng rng_;
};

/// Algorithm registry. Ids: `adsub`, `odt-greedy`, `ml:<K>`, `static`,
/// `adstatic`, `exact-opt`, `random:<seed>`. The seed parameter feeds the
/// ml policy's clustering and sampling substreams; `random:<seed>` carries
/// its own seed in the id. Unknown ids throw std::invalid_argument.
std::unique_ptr<Policy> make_policy(const std::string& id, const Instance& inst,
                                    std::uint64_t seed);

/// True for registry ids whose runs are averaged over multiple seeds.
bool is_randomized_algorithm(const std::string& id);

/// Validates an id against the registry grammar without building a policy
/// (no instance needed). Throws std::invalid_argument like make_policy.
void check_algorithm_id(const std::string& id);

}  // namespace adrank
