#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "adrank/bitset.hpp"

namespace adrank {

/// Scenario coverage threshold: f_i(E) >= 1 - kCoverTol counts as covered.
/// The bundled oracles decide coverage by exact integer counts, so the
/// tolerance only matters for externally supplied oracles.
inline constexpr double kCoverTol = 1e-9;

/// Incremental evaluation context for one scenario's function on a growing
/// display set. Values are in [0, 1], monotone in add() calls.
class OracleEval {
 public:
  virtual ~OracleEval() = default;

  /// f(E) for the elements added so far.
  virtual double value() const = 0;

  /// f(E + e) - f(E). Zero for elements already added.
  virtual double gain(int e) const = 0;

  /// E <- E + e.
  virtual void add(int e) = 0;

  virtual std::unique_ptr<OracleEval> clone() const = 0;

  virtual bool covered() const { return value() >= 1.0 - kCoverTol; }

  /// acc[e] += w * gain(e) for every e not in `displayed`. The default loops
  /// over the whole ground set; oracles with sparse support override it.
  virtual void add_weighted_gains(const DynBitset& displayed, double w,
                                  std::span<double> acc) const;
};

/// Normalized monotone submodular set function for one scenario:
/// f(empty) = 0 and f(ground set) = 1 (validated, not assumed).
class SubmodularOracle {
 public:
  virtual ~SubmodularOracle() = default;

  /// Number of elements in the instance's ground set.
  virtual int ground_size() const = 0;

  /// Evaluation context positioned at the empty set.
  virtual std::unique_ptr<OracleEval> start() const = 0;

  /// Short human-readable descriptor (kind plus parameters).
  virtual std::string describe() const = 0;

  /// From-scratch evaluation on an arbitrary element subset.
  double value(std::span<const int> elements) const;
};

struct SubmodularityReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Property check for normalization, monotonicity and submodularity.
/// trials > 0: samples `trials` random (A, B) pairs for the lattice
/// inequality f(A)+f(B) >= f(A|B)+f(A&B) and `trials` random nested marginal
/// pairs. trials == 0: exhaustive check via the local characterization
/// f(S+e) + f(S+e') >= f(S+e+e') + f(S) over all S and element pairs
/// (ground size must be at most 16).
SubmodularityReport check_submodular(const SubmodularOracle& oracle, int trials,
                                     std::uint64_t seed);

}  // namespace adrank
