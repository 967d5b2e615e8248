#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "adrank/instance.hpp"
#include "adrank/state.hpp"
#include "adrank/trie.hpp"

namespace adrank {

/// Adaptive element-selection rule. Stateless policies select purely from the
/// (state, instance) pair; stateful ones (learned weights, RNG) additionally
/// evolve through observe() and are fork()ed at feedback branch points, so a
/// policy copy exists per feedback history.
class Policy {
 public:
  virtual ~Policy() = default;

  /// Next element to display; must be undisplayed and in range.
  virtual int select(const AlgoState& state, const Instance& inst) = 0;

  /// Feedback symbol observed for a previously selected element.
  virtual void observe(int e, Symbol s) { (void)e, (void)s; }

  /// Deep copy carrying all internal state (weights, RNG position).
  virtual std::unique_ptr<Policy> fork() const = 0;

  /// True when select() depends only on its arguments; lets the policy
  /// builder skip fork/observe bookkeeping.
  virtual bool stateless() const { return true; }
};

/// Wraps a plain selector callback as a stateless policy.
class CallbackPolicy final : public Policy {
 public:
  using Selector = std::function<int(const AlgoState&, const Instance&)>;
  explicit CallbackPolicy(Selector fn) : fn_(std::move(fn)) {}
  int select(const AlgoState& state, const Instance& inst) override {
    return fn_(state, inst);
  }
  std::unique_ptr<Policy> fork() const override {
    return std::make_unique<CallbackPolicy>(fn_);
  }

 private:
  Selector fn_;
};

struct BuildResult {
  PolicyTrie trie;
  std::vector<TraceResult> traces;  // indexed by scenario id
  double expected_cost = 0.0;       // sum of p_i * cover_time over covered traces
  std::int64_t nodes_expanded = 0;
};

/// Runs the policy over every feedback history some scenario reaches,
/// expanding each distinct history exactly once. Branches stop as soon as no
/// positive-probability scenario remains alive; zero-probability leftovers
/// keep uncovered traces and contribute nothing to the expected cost.
/// Throws PolicyIncompleteError when the policy returns an invalid or
/// already-displayed element while positive-probability scenarios are alive.
BuildResult build_policy(const Instance& inst, Policy& policy);

/// build_policy with the bundled adaptive greedy selector.
BuildResult build_policy(const Instance& inst);

/// Expected cost by replaying every scenario through an existing trie.
/// Throws PolicyIncompleteError when the trie lacks a branch needed by an
/// uncovered positive-probability scenario.
double expected_cost(const PolicyTrie& trie, const Instance& inst);

/// Expected cost of running a policy (builds the trie internally).
double expected_cost(Policy& policy, const Instance& inst);

/// Expected cost of a selector callback.
double expected_cost(const CallbackPolicy::Selector& selector, const Instance& inst);

}  // namespace adrank
