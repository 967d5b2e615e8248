#include "adrank/policy.hpp"

#include <string>
#include <utility>

#include "adrank/asr.hpp"
#include "adrank/errors.hpp"

namespace adrank {

namespace {

struct PendingNode {
  AlgoState state;
  int parent;      // trie node id, -1 at root
  Symbol via;
  std::unique_ptr<Policy> policy;  // null when the policy is stateless
};

void check_selection(const AlgoState& state, int e, const Instance& inst) {
  if (e < 0 || e >= inst.num_elements())
    throw PolicyIncompleteError("policy returned out-of-range element " +
                                std::to_string(e));
  if (state.displayed.test(e))
    throw PolicyIncompleteError("policy re-selected displayed element " +
                                std::to_string(e));
}

}  // namespace

BuildResult build_policy(const Instance& inst, Policy& policy) {
  int m = inst.num_scenarios();
  BuildResult result;
  result.traces.resize(m);
  for (int i = 0; i < m; ++i) result.traces[i].scenario = i;

  // Scenario -> trie node where its trace ended (coverage or abandonment);
  // -2 means ended at the root display history (empty path).
  std::vector<int> end_node(m, -2);

  for (int i : covered_at_root(inst)) {
    result.traces[i].covered = true;
    result.traces[i].cover_time = 0.0;
  }

  bool stateless = policy.stateless();
  std::vector<PendingNode> stack;
  {
    AlgoState root = make_root_state(inst);
    if (root.has_positive_mass(inst)) {
      stack.push_back(PendingNode{std::move(root), -1, 0, nullptr});
    } else {
      for (std::size_t pos = 0; pos < root.alive.size(); ++pos)
        end_node[root.alive[pos]] = -2;  // abandoned with an empty path
    }
  }

  while (!stack.empty()) {
    PendingNode cur = std::move(stack.back());
    stack.pop_back();
    Policy& local = cur.policy ? *cur.policy : policy;

    if (cur.state.num_displayed == inst.num_elements())
      throw PolicyIncompleteError(
          "all elements displayed with an uncovered positive-probability scenario");
    int e = local.select(cur.state, inst);
    check_selection(cur.state, e, inst);
    int node = result.trie.add_node(cur.parent, cur.via, e);
    ++result.nodes_expanded;

    Advance adv = advance_state(cur.state, e, inst);
    for (const CoveredAtStep& c : adv.covered) {
      result.traces[c.scenario].covered = true;
      result.traces[c.scenario].cover_time = c.cover_cost;
      end_node[c.scenario] = node;
      result.expected_cost += inst.prob(c.scenario) * c.cover_cost;
    }

    // Push children in reverse symbol order so expansion pops them ascending.
    for (int k = static_cast<int>(adv.symbols.size()) - 1; k >= 0; --k) {
      AlgoState& child = adv.children[k];
      if (child.alive.empty()) continue;
      if (!child.has_positive_mass(inst)) {
        for (int i : child.alive) end_node[i] = node;  // abandoned uncovered
        continue;
      }
      std::unique_ptr<Policy> child_policy;
      if (!stateless) {
        child_policy = local.fork();
        child_policy->observe(e, adv.symbols[k]);
      }
      stack.push_back(PendingNode{std::move(child), node, adv.symbols[k],
                                  std::move(child_policy)});
    }
  }

  for (int i = 0; i < m; ++i) {
    if (end_node[i] >= 0) result.traces[i].path = result.trie.path_elements(end_node[i]);
  }
  return result;
}

BuildResult build_policy(const Instance& inst) {
  AsrPolicy policy;
  return build_policy(inst, policy);
}

double expected_cost(const PolicyTrie& trie, const Instance& inst) {
  double total = 0.0;
  for (int i = 0; i < inst.num_scenarios(); ++i) {
    auto ev = inst.oracle(i).start();
    if (ev->covered()) continue;
    double cost = 0.0;
    int node = trie.root();
    for (;;) {
      if (node == -1) {
        if (inst.prob(i) > 0.0)
          throw PolicyIncompleteError(
              "trie has no branch for uncovered scenario " + std::to_string(i));
        cost = -1.0;  // abandoned at probability zero
        break;
      }
      int e = trie.node(node).element;
      cost += inst.cost(e);
      ev->add(e);
      if (ev->covered()) break;
      node = trie.child(node, inst.feedback(i, e));
    }
    if (cost >= 0.0) total += inst.prob(i) * cost;
  }
  return total;
}

double expected_cost(Policy& policy, const Instance& inst) {
  return build_policy(inst, policy).expected_cost;
}

double expected_cost(const CallbackPolicy::Selector& selector, const Instance& inst) {
  CallbackPolicy policy(selector);
  return build_policy(inst, policy).expected_cost;
}

}  // namespace adrank
