#pragma once

#include <memory>

#include "adrank/instance.hpp"
#include "adrank/policy.hpp"
#include "adrank/trie.hpp"

namespace adrank {

struct ExactOptResult {
  double value = 0.0;  // optimal expected cost (exact rational, rounded once)
  PolicyTrie policy;
};

/// Exact optimum by dynamic programming over (displayed-set, alive-set)
/// states in rational arithmetic. Requires n <= 12 and m <= 8 (SizeError
/// otherwise). Argmin ties break to the lowest element id.
ExactOptResult exact_opt_oracle(const Instance& inst);

/// The optimal policy as a selector (shares the memoized DP). Selection is a
/// pure function of (displayed, alive), so the policy is stateless.
std::unique_ptr<Policy> make_exact_opt_policy(const Instance& inst);

}  // namespace adrank
