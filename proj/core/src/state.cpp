#include "adrank/state.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace adrank {

AlgoState AlgoState::clone() const {
  AlgoState out;
  out.displayed = displayed;
  out.num_displayed = num_displayed;
  out.displayed_cost = displayed_cost;
  out.alive = alive;
  out.evals.reserve(evals.size());
  for (const auto& ev : evals) out.evals.push_back(ev->clone());
  return out;
}

int AlgoState::alive_pos(int i) const {
  auto it = std::lower_bound(alive.begin(), alive.end(), i);
  return (it != alive.end() && *it == i) ? static_cast<int>(it - alive.begin()) : -1;
}

double AlgoState::alive_mass(const Instance& inst) const {
  double mass = 0.0;
  for (int i : alive) mass += inst.prob(i);
  return mass;
}

bool AlgoState::has_positive_mass(const Instance& inst) const {
  for (int i : alive)
    if (inst.prob(i) > 0.0) return true;
  return false;
}

AlgoState make_root_state(const Instance& inst) {
  AlgoState s;
  s.displayed = DynBitset(inst.num_elements());
  for (int i = 0; i < inst.num_scenarios(); ++i) {
    auto ev = inst.oracle(i).start();
    if (ev->covered()) continue;
    s.alive.push_back(i);
    s.evals.push_back(std::move(ev));
  }
  return s;
}

std::vector<int> covered_at_root(const Instance& inst) {
  std::vector<int> out;
  for (int i = 0; i < inst.num_scenarios(); ++i)
    if (inst.oracle(i).start()->covered()) out.push_back(i);
  return out;
}

Advance advance_state(const AlgoState& state, int e, const Instance& inst) {
  if (e < 0 || e >= inst.num_elements())
    throw std::invalid_argument("element " + std::to_string(e) + " out of range");
  if (state.displayed.test(e))
    throw std::invalid_argument("element " + std::to_string(e) + " already displayed");

  double new_cost = state.displayed_cost + inst.cost(e);
  Advance adv;
  // Buckets keyed by feedback symbol; scenario order within a bucket stays
  // ascending because the alive set is ascending.
  int na = inst.alphabet();
  std::vector<int> bucket_of(na, -1);
  for (std::size_t pos = 0; pos < state.alive.size(); ++pos) {
    int i = state.alive[pos];
    Symbol sym = inst.feedback(i, e);
    int b = bucket_of[sym];
    if (b == -1) {
      b = static_cast<int>(adv.symbols.size());
      bucket_of[sym] = b;
      adv.symbols.push_back(sym);
      adv.children.emplace_back();
    }
    auto ev = state.evals[pos]->clone();
    ev->add(e);
    if (ev->covered()) {
      adv.covered.push_back(CoveredAtStep{i, sym, new_cost});
    } else {
      adv.children[b].alive.push_back(i);
      adv.children[b].evals.push_back(std::move(ev));
    }
  }

  // Reorder buckets by symbol id.
  std::vector<int> order(adv.symbols.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return adv.symbols[a] < adv.symbols[b]; });
  Advance sorted;
  sorted.covered = std::move(adv.covered);
  for (int k : order) {
    sorted.symbols.push_back(adv.symbols[k]);
    sorted.children.push_back(std::move(adv.children[k]));
  }
  for (auto& child : sorted.children) {
    child.displayed = state.displayed;
    child.displayed.set(e);
    child.num_displayed = state.num_displayed + 1;
    child.displayed_cost = new_cost;
  }
  return sorted;
}

}  // namespace adrank
