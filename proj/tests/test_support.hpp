#pragma once

#include <functional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "adrank/rng.hpp"
#include "adrank/trie.hpp"

namespace adrank::testutil {

inline std::vector<double> unit_costs(int n) { return std::vector<double>(n, 1.0); }

inline std::vector<double> uniform(int m) {
  return std::vector<double>(m, 1.0 / m);
}

/// m pairwise-distinct interest sets over [n]; requires m <= 2^n. Distinct
/// rows keep every scenario identifiable, so any of the identification-style
/// constructors accepts them.
inline std::vector<std::vector<int>> distinct_sets(Rng& rng, int n, int m) {
  if (n >= 31 || m > (1 << n)) throw std::logic_error("bad distinct_sets shape");
  std::vector<std::uint64_t> picked;
  std::unordered_set<std::uint64_t> seen;
  while (static_cast<int>(picked.size()) < m) {
    std::uint64_t mask = next_index(rng, std::uint64_t(1) << n);
    if (seen.insert(mask).second) picked.push_back(mask);
  }
  std::vector<std::vector<int>> sets(m);
  for (int i = 0; i < m; ++i)
    for (int e = 0; e < n; ++e)
      if (picked[i] >> e & 1) sets[i].push_back(e);
  return sets;
}

inline bool tries_equal(const PolicyTrie& a, const PolicyTrie& b) {
  if (a.empty() || b.empty()) return a.empty() == b.empty();
  std::function<bool(int, int)> eq = [&](int x, int y) {
    const TrieNode& u = a.node(x);
    const TrieNode& v = b.node(y);
    if (u.element != v.element || u.children.size() != v.children.size())
      return false;
    for (std::size_t k = 0; k < u.children.size(); ++k) {
      if (u.children[k].first != v.children[k].first) return false;
      if (!eq(u.children[k].second, v.children[k].second)) return false;
    }
    return true;
  };
  return eq(a.root(), b.root());
}

/// All subsets of [n] as element vectors, by increasing mask.
inline std::vector<std::vector<int>> all_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<int> s;
    for (int e = 0; e < n; ++e)
      if (mask >> e & 1) s.push_back(e);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace adrank::testutil
