#pragma once

#include <memory>
#include <span>
#include <vector>

#include "adrank/instance.hpp"
#include "adrank/oracle.hpp"

namespace adrank {

using OraclePtr = std::shared_ptr<const SubmodularOracle>;

/// Shared per-instance structure behind the coverage-style functions.
/// For every (element e, symbol s) it stores the scenario group
/// {j : d[j][e] == s} as a bitset over [m]. The distinguishing set
/// T_e(i) = {j : d[j][e] != d[i][e]} is the complement of scenario i's own
/// group, so gains are word operations instead of set scans.
class CoverageUniverse {
 public:
  CoverageUniverse(int n, int m, Symbol alphabet, std::vector<Symbol> feedback);

  /// Universe for binary feedback given by interest sets.
  static std::shared_ptr<const CoverageUniverse> from_sets(
      int n, const std::vector<std::vector<int>>& sets);

  int num_elements() const { return n_; }
  int num_scenarios() const { return m_; }
  int words() const { return words_; }
  Symbol alphabet() const { return alphabet_; }
  std::uint64_t tail_mask() const { return tail_mask_; }

  std::span<const std::uint64_t> group(int e, Symbol s) const {
    return {group_.data() + (std::size_t(e) * alphabet_ + s) * words_,
            static_cast<std::size_t>(words_)};
  }
  Symbol feedback(int i, int e) const { return feedback_[std::size_t(i) * n_ + e]; }
  const Symbol* row(int i) const { return feedback_.data() + std::size_t(i) * n_; }

  /// Materialized T_e(i); intended for tests and small instances.
  DynBitset t_set(int e, int i) const;
  int t_size(int e, int i) const;

  /// True iff displaying every element distinguishes i from all others:
  /// union over e of T_e(i) equals [m] minus {i}.
  bool identifiable(int i) const;

 private:
  int n_;
  int m_;
  int words_;
  Symbol alphabet_;
  std::uint64_t tail_mask_;
  std::vector<Symbol> feedback_;
  std::vector<std::uint64_t> group_;
};

/// Threshold coverage: f(S) = min(|S & S_i|, k) / k.
/// Requires 1 <= k <= |S_i|.
OraclePtr mir_function(int n, std::span<const int> interest_set, int k);

/// Hypothesis identification: f(S) = |union of T_e(i) over e in S| / (m-1).
/// Requires scenario i to be identifiable (construction error otherwise).
OraclePtr odt_function(std::shared_ptr<const CoverageUniverse> universe, int i);

/// Identification down to at most t candidates:
/// f(S) = min(|union T_e(i)|, m-t) / (m-t). Requires 1 <= t <= m-1.
OraclePtr generalized_odt_function(std::shared_ptr<const CoverageUniverse> universe,
                                   int i, int t);

/// Equivalence-class determination: only hypotheses outside i's part count.
/// parts must partition [m]. A part equal to the whole universe makes the
/// scenario pre-covered (constant-one oracle).
OraclePtr eqclass_function(std::shared_ptr<const CoverageUniverse> universe,
                           const std::vector<std::vector<int>>& parts, int i);

/// Noisy-OR of per-region eliminations: f(S) = 1 - prod over regions D_j
/// containing i of (1 - |union(T_e(i) & D_j^c)| / |D_j^c|). Requires at least
/// one region containing i. With at most 8 relevant regions the product is
/// evaluated in exact integer arithmetic.
OraclePtr drd_function(std::shared_ptr<const CoverageUniverse> universe,
                       const std::vector<std::vector<int>>& regions, int i);

/// Degenerate pre-covered scenario: f identically 1.
OraclePtr constant_one(int n);

// ---- Instance assembly per application ---- //

Instance make_mir_instance(std::vector<double> costs, std::vector<double> probs,
                           const std::vector<std::vector<int>>& sets,
                           std::vector<int> ks);

Instance make_odt_instance(std::vector<double> costs, std::vector<double> probs,
                           const std::vector<std::vector<int>>& sets);

Instance make_godt_instance(std::vector<double> costs, std::vector<double> probs,
                            const std::vector<std::vector<int>>& sets,
                            std::vector<int> ts);

/// Identification with an arbitrary feedback alphabet. Empty `ts` means
/// plain identification (t = 1 everywhere, app tag odt).
Instance make_multiway_instance(std::vector<double> costs, std::vector<double> probs,
                                const std::vector<std::vector<Symbol>>& rows,
                                Symbol alphabet, std::vector<int> ts = {});

Instance make_ecd_instance(std::vector<double> costs, std::vector<double> probs,
                           const std::vector<std::vector<int>>& sets,
                           std::vector<int> classes);

Instance make_drd_instance(std::vector<double> costs, std::vector<double> probs,
                           const std::vector<std::vector<int>>& sets,
                           std::vector<std::vector<int>> regions);

/// Feedback-free ranking of caller-supplied functions: every interest set is
/// the full ground set (so no observation ever splits the alive set) and
/// probabilities are the normalized weights. Weights must be nonnegative with
/// a positive sum.
Instance make_ranking_instance(std::vector<double> costs, std::vector<double> weights,
                               std::vector<OraclePtr> oracles);

/// Arbitrary binary-feedback instance with caller-supplied oracles (tests).
Instance make_custom_instance(std::vector<double> costs, std::vector<double> probs,
                              const std::vector<std::vector<int>>& sets,
                              std::vector<OraclePtr> oracles);

/// Binary feedback table from interest sets (kYes at members).
std::vector<Symbol> feedback_from_sets(int n, const std::vector<std::vector<int>>& sets);

}  // namespace adrank
