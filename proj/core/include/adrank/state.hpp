#pragma once

#include <memory>
#include <vector>

#include "adrank/instance.hpp"

namespace adrank {

/// Execution state at one policy node: the display set E and the alive set H
/// of scenarios that are feedback-compatible with the history and still
/// uncovered. Oracle evaluation contexts carry the cached f_i(E) values and
/// advance incrementally. Move-only (clone() for explicit deep copies).
struct AlgoState {
  DynBitset displayed;
  int num_displayed = 0;
  double displayed_cost = 0.0;
  std::vector<int> alive;  // scenario ids, ascending
  std::vector<std::unique_ptr<OracleEval>> evals;  // parallel to alive

  AlgoState() = default;
  AlgoState(AlgoState&&) = default;
  AlgoState& operator=(AlgoState&&) = default;

  AlgoState clone() const;

  /// Cached f_i(E) for alive[pos].
  double cached_value(int pos) const { return evals[pos]->value(); }

  /// Position of scenario i in alive, or -1.
  int alive_pos(int i) const;

  /// Sum of p_i over the alive set.
  double alive_mass(const Instance& inst) const;

  /// True when some alive scenario has positive probability (the branch
  /// still contributes to expected cost and must keep selecting).
  bool has_positive_mass(const Instance& inst) const;
};

/// Scenario removed from the alive set by a display step.
struct CoveredAtStep {
  int scenario = -1;
  Symbol symbol = 0;   // feedback the scenario gave on the displayed element
  double cover_cost = 0.0;  // displayed_cost including the covering element
};

/// Result of displaying one element: the alive set partitioned by observed
/// feedback symbol. A symbol appears when some alive scenario gives it, even
/// if coverage removal empties that child's alive set.
struct Advance {
  std::vector<Symbol> symbols;      // observed symbols, ascending
  std::vector<AlgoState> children;  // parallel to symbols
  std::vector<CoveredAtStep> covered;
};

/// Root state: every scenario not already covered on the empty set is alive.
AlgoState make_root_state(const Instance& inst);

/// Scenarios covered on the empty set (constant-one oracles); these never
/// enter any alive set and have cover cost zero.
std::vector<int> covered_at_root(const Instance& inst);

/// Displays e at `state`. Throws std::invalid_argument if e is out of range
/// or already displayed.
Advance advance_state(const AlgoState& state, int e, const Instance& inst);

}  // namespace adrank
