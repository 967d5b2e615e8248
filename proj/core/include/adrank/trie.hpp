#pragma once

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "adrank/instance.hpp"

namespace adrank {

/// One decision node: the element displayed at this feedback history and the
/// child per feedback symbol that led to a further selection.
struct TrieNode {
  int element = -1;
  int parent = -1;
  Symbol via = 0;  // symbol on the edge from parent (meaningless at the root)
  std::vector<std::pair<Symbol, int>> children;  // sorted by symbol
};

/// Decision tree over feedback histories. Nodes exist only for histories some
/// scenario actually reaches; each node's selection is computed exactly once.
class PolicyTrie {
 public:
  bool empty() const { return nodes_.empty(); }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int root() const { return nodes_.empty() ? -1 : 0; }
  const TrieNode& node(int id) const { return nodes_[id]; }

  int child(int id, Symbol s) const {
    const auto& kids = nodes_[id].children;
    auto it = std::lower_bound(kids.begin(), kids.end(), s,
                               [](const auto& a, Symbol b) { return a.first < b; });
    return (it != kids.end() && it->first == s) ? it->second : -1;
  }

  /// parent == -1 creates the root (only once).
  int add_node(int parent, Symbol via, int element) {
    if (parent == -1 && !nodes_.empty())
      throw std::logic_error("policy trie already has a root");
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back(TrieNode{element, parent, via, {}});
    if (parent != -1) {
      auto& kids = nodes_[parent].children;
      auto it = std::lower_bound(kids.begin(), kids.end(), via,
                                 [](const auto& a, Symbol b) { return a.first < b; });
      if (it != kids.end() && it->first == via)
        throw std::logic_error("duplicate child symbol in policy trie");
      kids.insert(it, {via, id});
    }
    return id;
  }

  /// Elements displayed from the root through `id`, inclusive.
  std::vector<int> path_elements(int id) const {
    std::vector<int> out;
    for (int cur = id; cur != -1; cur = nodes_[cur].parent)
      out.push_back(nodes_[cur].element);
    std::reverse(out.begin(), out.end());
    return out;
  }

  int depth(int id) const {
    int d = 0;
    for (int cur = id; cur != -1; cur = nodes_[cur].parent) ++d;
    return d;
  }

 private:
  std::vector<TrieNode> nodes_;
};

/// Per-scenario outcome of running a policy: the elements shown to that
/// scenario in order, and the total cost of the shortest covering prefix.
/// Scenarios abandoned uncovered (possible only at probability zero) keep
/// covered == false and an infinite cover_time.
struct TraceResult {
  int scenario = -1;
  std::vector<int> path;
  double cover_time = std::numeric_limits<double>::infinity();
  bool covered = false;
};

}  // namespace adrank
