#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "adrank/bitset.hpp"
#include "adrank/oracle.hpp"

namespace adrank {

/// Feedback symbol id. Binary instances use kYes/kNo; multiway instances use
/// ids 0..alphabet-1. Yes is symbol 0 so that the binary tie-break (equal
/// split returns the no-group) and the multiway tie-break (largest group kept,
/// ties to the smallest symbol id) agree on binary instances.
using Symbol = std::uint8_t;
inline constexpr Symbol kYes = 0;
inline constexpr Symbol kNo = 1;

enum class App { none, mir, odt, godt, ecd, drd, ranking };

std::string app_name(App app);

/// One ranking problem: n elements with positive costs, m scenarios with
/// probabilities, a feedback table d[i][e], and one normalized monotone
/// submodular oracle per scenario. Immutable after construction; oracles are
/// shared const, so copies are cheap-ish and thread-safe to read.
class Instance {
 public:
  Instance() = default;
  Instance(App app, std::vector<double> costs, std::vector<double> probs,
           std::vector<Symbol> feedback, Symbol alphabet,
           std::vector<std::shared_ptr<const SubmodularOracle>> oracles);

  int num_elements() const { return n_; }
  int num_scenarios() const { return m_; }
  Symbol alphabet() const { return alphabet_; }
  App app() const { return app_; }

  double cost(int e) const { return costs_[e]; }
  double prob(int i) const { return probs_[i]; }
  std::span<const double> costs() const { return costs_; }
  std::span<const double> probs() const { return probs_; }

  Symbol feedback(int i, int e) const { return feedback_[std::size_t(i) * n_ + e]; }
  const Symbol* feedback_row(int i) const { return feedback_.data() + std::size_t(i) * n_; }
  std::span<const Symbol> feedback_table() const { return feedback_; }

  /// Interest-set membership: e is in S_i iff d[i][e] == kYes.
  bool in_interest(int i, int e) const { return interest_[i].test(e); }
  const DynBitset& interest_row(int i) const { return interest_[i]; }
  std::vector<int> interest_set(int i) const;
  int interest_size(int i) const { return interest_[i].count(); }

  const SubmodularOracle& oracle(int i) const { return *oracles_[i]; }
  const std::shared_ptr<const SubmodularOracle>& oracle_ptr(int i) const {
    return oracles_[i];
  }

  /// Copy with replaced scenario probabilities (oracles shared).
  Instance with_probs(std::vector<double> probs) const;

  /// Application payloads (empty when not applicable).
  std::span<const int> mir_k() const { return mir_k_; }
  std::span<const int> godt_t() const { return godt_t_; }
  std::span<const int> ecd_class() const { return ecd_class_; }
  const std::vector<std::vector<int>>& drd_regions() const { return drd_regions_; }

  void set_mir_k(std::vector<int> k) { mir_k_ = std::move(k); }
  void set_godt_t(std::vector<int> t) { godt_t_ = std::move(t); }
  void set_ecd_class(std::vector<int> c) { ecd_class_ = std::move(c); }
  void set_drd_regions(std::vector<std::vector<int>> r) { drd_regions_ = std::move(r); }

  /// Content hash over costs, probabilities, feedback, app and payloads.
  std::uint64_t fingerprint() const;

  /// Structural equality ignoring the oracle objects (which are derived).
  bool same_content(const Instance& o) const;

 private:
  int n_ = 0;
  int m_ = 0;
  Symbol alphabet_ = 2;
  App app_ = App::none;
  std::vector<double> costs_;
  std::vector<double> probs_;
  std::vector<Symbol> feedback_;
  std::vector<DynBitset> interest_;
  std::vector<std::shared_ptr<const SubmodularOracle>> oracles_;
  std::vector<int> mir_k_;
  std::vector<int> godt_t_;
  std::vector<int> ecd_class_;
  std::vector<std::vector<int>> drd_regions_;
};

/// Validation report: empty means valid. Checks positive costs, probability
/// normalization (sum within 1e-9 of 1, entries in [0,1]), and per-scenario
/// oracle normalization sampled on the empty and full sets. f(empty) = 1 is
/// accepted for degenerate constant-one oracles (pre-covered scenarios);
/// f(full) < 1 marks the scenario uncoverable and is always a violation.
std::vector<std::string> validate_instance(const Instance& inst);

/// Throws std::invalid_argument with the joined report if invalid.
void ensure_valid(const Instance& inst);

}  // namespace adrank
