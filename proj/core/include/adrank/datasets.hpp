#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "adrank/instance.hpp"
#include "adrank/rng.hpp"

namespace adrank {

/// Synthetic family parameters: k sizes the instance (m = 2k+3 scenarios,
/// n = k+2 elements, 4k+4 memberships); eps shapes the probabilities and
/// must lie in (0, 2^-(k+2)). Negative eps selects the default midpoint
/// 2^-(k+3).
struct SynParams {
  int k = 1;
  double eps = -1.0;

  double eps_or_default() const;
};

/// Builds the synthetic identification instance: unit costs, element i < k
/// in scenarios {2i, 2i+1}, element k in every even-indexed scenario,
/// element k+1 in every odd-indexed scenario plus the last one. The
/// construction is verified to have probabilities summing to exactly 1 in
/// rational arithmetic before conversion to doubles.
Instance gen_syn(const SynParams& params);

/// Exact rational verification that the generator's probability formulas
/// telescope to 1 for these parameters.
bool syn_probs_sum_to_one(const SynParams& params);

/// Binarized user/item membership matrix.
struct RatingsMatrix {
  int users = 0;  // highest user id seen
  int items = 0;  // highest item id seen
  std::vector<std::vector<int>> liked;  // per user (0-based), sorted item ids
  std::int64_t memberships = 0;

  double mean_degree() const;
  double stdev_degree() const;  // population standard deviation
};

/// Reads tab-separated "user item rating timestamp" lines and keeps pairs
/// with rating >= 3. Malformed lines raise ParseError naming the line
/// number. An empty file gives an empty matrix.
RatingsMatrix ingest_movielens(const std::string& path);

/// Satisfaction-threshold rules, as closed integer intervals on the interest
/// set size s: full is K = s; the ranged rules draw uniformly from
/// [max(1, ceil(lo*s)), max(lo, floor(hi*s))].
enum class KRule { full, half_to_full, quarter_to_full, one_to_half, one_to_quarter };

/// Identification-threshold rules: fixed 1, or uniform over {1..4} / {5..9}.
enum class TRule { one, low, high };

/// Rule names: "full", "s2-s", "s4-s", "1-s2", "1-s4" / "1", "1-5", "5-10".
KRule parse_k_rule(const std::string& name);
TRule parse_t_rule(const std::string& name);
std::string k_rule_name(KRule rule);
std::string t_rule_name(TRule rule);

int draw_k(KRule rule, int set_size, Rng& rng);
int draw_t(TRule rule, Rng& rng);

/// Instance plus ingestion diagnostics (dropped scenarios and such).
struct BuiltInstance {
  Instance instance;
  std::vector<std::string> warnings;
  std::vector<int> kept_users;  // original 0-based user ids, ascending
};

/// Per-user interest sets from liked items; users with empty sets are
/// dropped with a warning and the remaining probabilities renormalized.
/// Thresholds are drawn from the "thresholds" substream of the seed.
BuiltInstance mir_instance_from_ratings(const RatingsMatrix& matrix,
                                        std::span<const double> probs,
                                        KRule rule, std::uint64_t seed);

/// Identification instance over all users (empty interest sets allowed);
/// thresholds per the rule. Built on the t-threshold constructor for every
/// rule, so duplicate users surface as uncoverable scenarios at validation
/// rather than as construction failures.
BuiltInstance odt_instance_from_ratings(const RatingsMatrix& matrix,
                                        std::span<const double> probs,
                                        TRule rule, std::uint64_t seed);

/// Uniform vector 1/m.
std::vector<double> uniform_probs(int m);

/// m draws of x = u^(1/alpha) (density alpha * x^(alpha-1) on (0,1]),
/// normalized to sum 1. alpha >= 1 required; alpha = 1 is uniform noise.
/// Deterministic per seed via the "distribution" substream.
std::vector<double> powerlaw_probs(int m, double alpha, std::uint64_t seed);

/// Seeded Fisher-Yates shuffle of the vector.
std::vector<double> permute_probs(std::span<const double> probs, std::uint64_t seed);

}  // namespace adrank
