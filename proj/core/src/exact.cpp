#include "adrank/exact.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "adrank/errors.hpp"

namespace adrank {

namespace {

using Rational = boost::multiprecision::cpp_rational;

constexpr int kMaxElements = 12;
constexpr int kMaxScenarios = 8;

/// Memoized minimization of the probability-weighted remaining cost
/// W(E, H) = min_e [ mass(H) * c_e + sum over children W(E+e, child) ]
/// with covered scenarios leaving H at the step that covers them.
class ExactEngine {
 public:
  explicit ExactEngine(const Instance& inst)
      : n_(inst.num_elements()), m_(inst.num_scenarios()) {
    if (n_ > kMaxElements || m_ > kMaxScenarios)
      throw SizeError("exact optimum limited to " + std::to_string(kMaxElements) +
                      " elements and " + std::to_string(kMaxScenarios) +
                      " scenarios, got n = " + std::to_string(n_) +
                      ", m = " + std::to_string(m_));
    // Owns everything it consults so policies sharing the engine never
    // depend on the caller's instance staying alive.
    feedback_.assign(inst.feedback_table().begin(), inst.feedback_table().end());
    for (int e = 0; e < n_; ++e) costs_.emplace_back(inst.cost(e));
    for (int i = 0; i < m_; ++i) probs_.emplace_back(inst.prob(i));
    covered_.assign(std::size_t{1} << n_, 0);
    for (std::uint32_t set = 0; set < covered_.size(); ++set) {
      for (int i = 0; i < m_; ++i) {
        auto ev = inst.oracle(i).start();
        for (int e = 0; e < n_; ++e)
          if (set & (std::uint32_t{1} << e)) ev->add(e);
        if (ev->covered()) covered_[set] |= std::uint8_t{1} << i;
      }
    }
  }

  Symbol feedback(int i, int e) const { return feedback_[std::size_t(i) * n_ + e]; }

  std::uint8_t root_alive() const {
    std::uint8_t all = static_cast<std::uint8_t>((1u << m_) - 1);
    return all & ~covered_[0];
  }

  struct Entry {
    Rational value;
    int best = -1;
  };

  const Entry& solve(std::uint32_t displayed, std::uint8_t alive) {
    std::uint32_t key = displayed | (std::uint32_t{alive} << kMaxElements);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    Entry entry;
    Rational mass = 0;
    for (int i = 0; i < m_; ++i)
      if (alive & (1u << i)) mass += probs_[i];
    if (alive == 0 || mass == 0)
      return memo_.emplace(key, std::move(entry)).first->second;

    bool first = true;
    for (int e = 0; e < n_; ++e) {
      if (displayed & (std::uint32_t{1} << e)) continue;
      std::uint32_t next_set = displayed | (std::uint32_t{1} << e);
      Rational total = mass * costs_[e];
      // Children grouped by feedback symbol, covered scenarios dropped.
      std::uint8_t remaining = alive & ~covered_[next_set];
      while (remaining) {
        int i = std::countr_zero(static_cast<unsigned>(remaining));
        Symbol sym = feedback(i, e);
        std::uint8_t group = 0;
        for (int j = 0; j < m_; ++j)
          if ((remaining & (1u << j)) && feedback(j, e) == sym)
            group |= std::uint8_t{1} << j;
        remaining &= ~group;
        total += solve(next_set, group).value;
      }
      if (first || total < entry.value) {
        entry.value = std::move(total);
        entry.best = e;
        first = false;
      }
    }
    if (first)
      throw PolicyIncompleteError("alive scenarios remain with every element displayed");
    return memo_.emplace(key, std::move(entry)).first->second;
  }

  void reconstruct(PolicyTrie& trie, std::uint32_t displayed, std::uint8_t alive,
                   int parent, Symbol via) {
    const Entry& entry = solve(displayed, alive);
    if (entry.best == -1) return;
    int e = entry.best;
    int node = trie.add_node(parent, via, e);
    std::uint32_t next_set = displayed | (std::uint32_t{1} << e);
    std::uint8_t remaining = alive & ~covered_[next_set];
    while (remaining) {
      int i = std::countr_zero(static_cast<unsigned>(remaining));
      Symbol sym = feedback(i, e);
      std::uint8_t group = 0;
      for (int j = 0; j < m_; ++j)
        if ((remaining & (1u << j)) && feedback(j, e) == sym)
          group |= std::uint8_t{1} << j;
      remaining &= ~group;
      reconstruct(trie, next_set, group, node, sym);
    }
  }

 private:
  int n_;
  int m_;
  std::vector<Symbol> feedback_;
  std::vector<Rational> costs_;
  std::vector<Rational> probs_;
  std::vector<std::uint8_t> covered_;  // per displayed-set: covered scenarios
  std::unordered_map<std::uint32_t, Entry> memo_;
};

class ExactOptPolicy final : public Policy {
 public:
  explicit ExactOptPolicy(std::shared_ptr<ExactEngine> engine)
      : engine_(std::move(engine)) {}

  int select(const AlgoState& state, const Instance& inst) override {
    std::uint32_t displayed = 0;
    for (int e = 0; e < inst.num_elements(); ++e)
      if (state.displayed.test(e)) displayed |= std::uint32_t{1} << e;
    std::uint8_t alive = 0;
    for (int i : state.alive) alive |= std::uint8_t{1} << i;
    int best = engine_->solve(displayed, alive).best;
    if (best == -1)
      throw std::logic_error("optimal policy queried on a zero-mass state");
    return best;
  }

  std::unique_ptr<Policy> fork() const override {
    return std::make_unique<ExactOptPolicy>(engine_);
  }

 private:
  std::shared_ptr<ExactEngine> engine_;
};

}  // namespace

ExactOptResult exact_opt_oracle(const Instance& inst) {
  ExactEngine engine(inst);
  std::uint8_t alive = engine.root_alive();
  ExactOptResult result;
  result.value = engine.solve(0, alive).value.convert_to<double>();
  engine.reconstruct(result.policy, 0, alive, -1, 0);
  return result;
}

std::unique_ptr<Policy> make_exact_opt_policy(const Instance& inst) {
  return std::make_unique<ExactOptPolicy>(std::make_shared<ExactEngine>(inst));
}

}  // namespace adrank
