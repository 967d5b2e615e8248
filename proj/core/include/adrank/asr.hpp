#pragma once

#include <vector>

#include "adrank/instance.hpp"
#include "adrank/policy.hpp"
#include "adrank/state.hpp"

namespace adrank {

/// Eq-style score parts for one candidate element at a state (E, H):
/// split_mass is the probability of the scenarios an observation on the
/// element would move to the smaller side, gain_mass the normalized marginal
/// coverage progress, and score their sum divided by the element cost.
struct ScoredCandidate {
  int element = -1;
  double split_mass = 0.0;
  double gain_mass = 0.0;
  double score = 0.0;
};

/// Binary split set L_e(H): the smaller of {i in H : e in S_i} and its
/// complement in H, by cardinality; equal sizes return the no-group.
/// Displayed elements give the empty set. Binary instances only.
std::vector<int> le_split(const AlgoState& state, int e, const Instance& inst);

/// Multiway split set: H minus its largest feedback group on e (ties to the
/// smallest symbol id). Restricts to le_split on binary instances.
std::vector<int> multiway_split(const AlgoState& state, int e, const Instance& inst);

/// One candidate per undisplayed element, element ids ascending.
/// Throws std::logic_error if the alive set is empty or contains a covered
/// scenario (the score denominators 1 - f_i(E) must stay positive).
std::vector<ScoredCandidate> score_candidates(const AlgoState& state,
                                              const Instance& inst);

/// Argmax-score candidate, ties to the lowest element id. Throws
/// std::logic_error when every candidate scores zero: with validated
/// instances that only happens on states no caller should reach (all alive
/// scenarios at probability zero).
int select_next(const AlgoState& state, const Instance& inst);

/// The adaptive greedy policy built on select_next.
class AsrPolicy final : public Policy {
 public:
  int select(const AlgoState& state, const Instance& inst) override {
    return select_next(state, inst);
  }
  std::unique_ptr<Policy> fork() const override {
    return std::make_unique<AsrPolicy>();
  }
};

}  // namespace adrank
