#include "adrank/asr.hpp"

#include <stdexcept>
#include <string>

namespace adrank {

namespace {

void require_uncovered(const AlgoState& state) {
  if (state.alive.empty())
    throw std::logic_error("scoring requires a nonempty alive set");
  for (std::size_t pos = 0; pos < state.alive.size(); ++pos)
    if (state.evals[pos]->covered())
      throw std::logic_error("alive set contains covered scenario " +
                             std::to_string(state.alive[pos]));
}

/// split_mass per element over all elements (callers ignore displayed ones).
std::vector<double> split_masses(const AlgoState& state, const Instance& inst) {
  int n = inst.num_elements();
  std::vector<double> split(n, 0.0);
  if (inst.alphabet() == 2) {
    std::vector<int> yes_cnt(n, 0);
    std::vector<double> yes_mass(n, 0.0);
    int total_cnt = static_cast<int>(state.alive.size());
    double total_mass = 0.0;
    for (int i : state.alive) {
      double p = inst.prob(i);
      total_mass += p;
      inst.interest_row(i).for_each_set([&](int e) {
        ++yes_cnt[e];
        yes_mass[e] += p;
      });
    }
    for (int e = 0; e < n; ++e) {
      int no_cnt = total_cnt - yes_cnt[e];
      // Equal cardinalities keep the no-group as the split set.
      split[e] = yes_cnt[e] < no_cnt ? yes_mass[e] : total_mass - yes_mass[e];
    }
    return split;
  }
  int na = inst.alphabet();
  std::vector<int> cnt(na, 0);
  std::vector<double> mass(na, 0.0);
  for (int e = 0; e < n; ++e) {
    if (state.displayed.test(e)) continue;
    std::fill(cnt.begin(), cnt.end(), 0);
    std::fill(mass.begin(), mass.end(), 0.0);
    double total_mass = 0.0;
    for (int i : state.alive) {
      Symbol s = inst.feedback(i, e);
      ++cnt[s];
      mass[s] += inst.prob(i);
      total_mass += inst.prob(i);
    }
    int big = 0;
    for (int s = 1; s < na; ++s)
      if (cnt[s] > cnt[big]) big = s;  // ties keep the smallest symbol
    split[e] = total_mass - mass[big];
  }
  return split;
}

}  // namespace

std::vector<int> le_split(const AlgoState& state, int e, const Instance& inst) {
  if (inst.alphabet() != 2)
    throw std::invalid_argument("binary split set on a non-binary instance");
  if (e < 0 || e >= inst.num_elements())
    throw std::invalid_argument("element " + std::to_string(e) + " out of range");
  if (state.displayed.test(e)) return {};
  std::vector<int> yes, no;
  for (int i : state.alive)
    (inst.in_interest(i, e) ? yes : no).push_back(i);
  if (yes.size() < no.size()) return yes;
  return no;
}

std::vector<int> multiway_split(const AlgoState& state, int e, const Instance& inst) {
  if (e < 0 || e >= inst.num_elements())
    throw std::invalid_argument("element " + std::to_string(e) + " out of range");
  if (state.displayed.test(e)) return {};
  int na = inst.alphabet();
  std::vector<int> cnt(na, 0);
  for (int i : state.alive) ++cnt[inst.feedback(i, e)];
  int big = 0;
  for (int s = 1; s < na; ++s)
    if (cnt[s] > cnt[big]) big = s;
  std::vector<int> out;
  for (int i : state.alive)
    if (inst.feedback(i, e) != big) out.push_back(i);
  return out;
}

std::vector<ScoredCandidate> score_candidates(const AlgoState& state,
                                              const Instance& inst) {
  require_uncovered(state);
  int n = inst.num_elements();
  std::vector<double> gain(n, 0.0);
  for (std::size_t pos = 0; pos < state.alive.size(); ++pos) {
    double p = inst.prob(state.alive[pos]);
    if (p <= 0.0) continue;
    double w = p / (1.0 - state.evals[pos]->value());
    state.evals[pos]->add_weighted_gains(state.displayed, w, gain);
  }
  std::vector<double> split = split_masses(state, inst);

  std::vector<ScoredCandidate> out;
  out.reserve(n - state.num_displayed);
  for (int e = 0; e < n; ++e) {
    if (state.displayed.test(e)) continue;
    ScoredCandidate c;
    c.element = e;
    c.split_mass = split[e];
    c.gain_mass = gain[e];
    c.score = (c.split_mass + c.gain_mass) / inst.cost(e);
    out.push_back(c);
  }
  return out;
}

int select_next(const AlgoState& state, const Instance& inst) {
  std::vector<ScoredCandidate> cands = score_candidates(state, inst);
  int best = -1;
  double best_score = 0.0;
  for (const ScoredCandidate& c : cands) {
    if (c.score > best_score) {
      best = c.element;
      best_score = c.score;
    }
  }
  if (best == -1)
    throw std::logic_error(
        "no candidate with positive score despite uncovered alive scenarios");
  return best;
}

}  // namespace adrank
