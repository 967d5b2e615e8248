#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "adrank/datasets.hpp"
#include "adrank/errors.hpp"
#include "adrank/functions.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace adrank;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/adrank_test_") + name;
  std::ofstream out(path);
  out << content;
  out.close();
  return path;
}

}  // namespace

TEST_CASE("synthetic generator lays out the documented memberships") {
  Instance inst = gen_syn({1, -1.0});
  CHECK(inst.app() == App::odt);
  CHECK(inst.num_elements() == 3);
  CHECK(inst.num_scenarios() == 5);
  for (int e = 0; e < 3; ++e) CHECK(inst.cost(e) == 1.0);

  CHECK(inst.interest_set(0) == std::vector<int>{0, 1});
  CHECK(inst.interest_set(1) == std::vector<int>{0, 2});
  CHECK(inst.interest_set(2) == std::vector<int>{1});
  CHECK(inst.interest_set(3) == std::vector<int>{2});
  CHECK(inst.interest_set(4) == std::vector<int>{1, 2});

  CHECK(inst.prob(0) == 0.125);
  CHECK(inst.prob(1) == 0.125);
  CHECK(inst.prob(2) == 0.0625);  // 1/8 - eps at the default eps = 1/16
  CHECK(inst.prob(3) == 0.0625);
  CHECK(inst.prob(4) == 0.625);   // 1/2 + 2 eps
}

TEST_CASE("synthetic sizes scale as m = 2k+3, n = k+2") {
  for (int k : {1, 2, 5, 9}) {
    Instance inst = gen_syn({k, -1.0});
    CHECK(inst.num_elements() == k + 2);
    CHECK(inst.num_scenarios() == 2 * k + 3);
    double sum = 0.0;
    for (int i = 0; i < inst.num_scenarios(); ++i) sum += inst.prob(i);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(validate_instance(inst).empty());
  }
}

TEST_CASE("synthetic probabilities telescope to one in exact arithmetic") {
  CHECK(syn_probs_sum_to_one({1, -1.0}));
  CHECK(syn_probs_sum_to_one({4, 0.01}));
  CHECK(syn_probs_sum_to_one({12, -1.0}));
}

TEST_CASE("synthetic parameters are range-checked") {
  CHECK(SynParams{1, -1.0}.eps_or_default() == 0.0625);
  CHECK(SynParams{3, -1.0}.eps_or_default() == 0.015625);
  CHECK(SynParams{2, 0.01}.eps_or_default() == 0.01);

  CHECK_THROWS_AS(gen_syn({0, -1.0}), std::invalid_argument);
  CHECK_THROWS_AS(gen_syn({1, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(gen_syn({1, 0.125}), std::invalid_argument);  // eps = 2^-(k+2)
  CHECK_NOTHROW(gen_syn({1, 0.124}));
}

TEST_CASE("ratings ingestion binarizes at three stars and dedups") {
  std::string path = write_temp("ratings_ok.tsv",
                                "1\t10\t5\t100\n"
                                "1\t10\t4\t101\n"   // duplicate pair
                                "2\t3\t2\t102\n"    // below threshold
                                "2\t4\t3\t103\n"
                                "3\t10\t1\t104\n"   // user 3 keeps nothing
                                "1\t4\t5\t105\n");
  RatingsMatrix matrix = ingest_movielens(path);
  CHECK(matrix.users == 3);
  CHECK(matrix.items == 10);
  CHECK(matrix.memberships == 3);
  CHECK(matrix.liked[0] == std::vector<int>{3, 9});  // items 4 and 10, 0-based
  CHECK(matrix.liked[1] == std::vector<int>{3});
  CHECK(matrix.liked[2].empty());
  CHECK(matrix.mean_degree() == doctest::Approx(1.0));
  std::remove(path.c_str());
}

TEST_CASE("ratings ingestion reports malformed lines precisely") {
  std::string bad_fields = write_temp("ratings_bad.tsv", "1\t2\t5\n");
  CHECK_THROWS_WITH_AS(ingest_movielens(bad_fields),
                       "line 1: expected 'user item rating timestamp'",
                       ParseError);
  std::remove(bad_fields.c_str());

  std::string trailing = write_temp("ratings_trail.tsv",
                                    "1\t2\t5\t100\n1\t2\t5\t100\textra\n");
  CHECK_THROWS_WITH_AS(ingest_movielens(trailing),
                       "line 2: unexpected trailing field 'extra'", ParseError);
  std::remove(trailing.c_str());

  std::string bad_ids = write_temp("ratings_ids.tsv", "0\t2\t5\t100\n");
  CHECK_THROWS_WITH_AS(ingest_movielens(bad_ids),
                       "line 1: user and item ids must be positive", ParseError);
  std::remove(bad_ids.c_str());

  CHECK_THROWS_AS(ingest_movielens("/nonexistent/u.data"), ParseError);

  std::string empty = write_temp("ratings_empty.tsv", "");
  RatingsMatrix matrix = ingest_movielens(empty);
  CHECK(matrix.users == 0);
  CHECK(matrix.memberships == 0);
  std::remove(empty.c_str());
}

TEST_CASE("threshold rule names round-trip") {
  for (const char* name : {"full", "s2-s", "s4-s", "1-s2", "1-s4"})
    CHECK(k_rule_name(parse_k_rule(name)) == name);
  for (const char* name : {"1", "1-5", "5-10"})
    CHECK(t_rule_name(parse_t_rule(name)) == name);
  CHECK_THROWS_AS(parse_k_rule("half"), std::invalid_argument);
  CHECK_THROWS_AS(parse_t_rule("2-3"), std::invalid_argument);
}

TEST_CASE("satisfaction thresholds stay inside their rule ranges") {
  Rng rng = make_rng(51, "draw-k");
  CHECK(draw_k(KRule::full, 7, rng) == 7);
  CHECK(draw_k(KRule::full, 1, rng) == 1);

  auto range_of = [&](KRule rule, int s, int draws) {
    int lo = 1 << 20, hi = 0;
    for (int r = 0; r < draws; ++r) {
      int k = draw_k(rule, s, rng);
      lo = std::min(lo, k);
      hi = std::max(hi, k);
    }
    return std::pair<int, int>{lo, hi};
  };

  CHECK(range_of(KRule::half_to_full, 8, 300) == std::pair<int, int>{4, 8});
  CHECK(range_of(KRule::quarter_to_full, 8, 300) == std::pair<int, int>{2, 8});
  CHECK(range_of(KRule::one_to_half, 8, 300) == std::pair<int, int>{1, 4});
  CHECK(range_of(KRule::one_to_quarter, 8, 300) == std::pair<int, int>{1, 2});

  // Tiny sets collapse every rule to sensible singletons.
  for (auto rule : {KRule::full, KRule::half_to_full, KRule::quarter_to_full,
                    KRule::one_to_half, KRule::one_to_quarter})
    CHECK(draw_k(rule, 1, rng) == 1);
  CHECK(range_of(KRule::one_to_quarter, 2, 50) == std::pair<int, int>{1, 1});
  CHECK_THROWS_AS(draw_k(KRule::full, 0, rng), std::invalid_argument);
}

TEST_CASE("threshold draws are uniform over the rule range") {
  Rng rng = make_rng(52, "draw-k-uniform");
  std::vector<int> counts(5, 0);
  const int draws = 10000;
  for (int r = 0; r < draws; ++r) ++counts[draw_k(KRule::one_to_half, 8, rng)];
  // Chi-square against uniform over {1,2,3,4}; 16.27 is the 0.1% critical
  // value at three degrees of freedom.
  double expected = draws / 4.0;
  double chi2 = 0.0;
  for (int v = 1; v <= 4; ++v) {
    double d = counts[v] - expected;
    chi2 += d * d / expected;
  }
  CHECK(chi2 < 16.27);
}

TEST_CASE("stopping thresholds follow their rules") {
  Rng rng = make_rng(53, "draw-t");
  for (int r = 0; r < 10; ++r) CHECK(draw_t(TRule::one, rng) == 1);
  std::vector<int> seen_low(10, 0), seen_high(10, 0);
  for (int r = 0; r < 400; ++r) {
    int low = draw_t(TRule::low, rng);
    int high = draw_t(TRule::high, rng);
    REQUIRE(low >= 1);
    REQUIRE(low <= 4);
    REQUIRE(high >= 5);
    REQUIRE(high <= 9);
    ++seen_low[low];
    ++seen_high[high];
  }
  for (int v = 1; v <= 4; ++v) CHECK(seen_low[v] > 0);
  for (int v = 5; v <= 9; ++v) CHECK(seen_high[v] > 0);
}

TEST_CASE("ranking instances from ratings drop empty users and renormalize") {
  RatingsMatrix matrix;
  matrix.users = 3;
  matrix.items = 4;
  matrix.liked = {{0, 2}, {}, {1}};
  matrix.memberships = 3;
  std::vector<double> probs = {0.5, 0.25, 0.25};

  BuiltInstance built = mir_instance_from_ratings(matrix, probs, KRule::full, 9);
  REQUIRE(built.warnings.size() == 1);
  CHECK(built.warnings[0] ==
        "user 2 has no liked items and cannot be satisfied; dropped");
  CHECK(built.kept_users == std::vector<int>{0, 2});
  CHECK(built.instance.num_scenarios() == 2);
  CHECK(built.instance.num_elements() == 4);
  CHECK(built.instance.prob(0) == doctest::Approx(2.0 / 3));
  CHECK(built.instance.prob(1) == doctest::Approx(1.0 / 3));
  CHECK(built.instance.app() == App::mir);
  // Rule full pins K to the interest-set size.
  CHECK(built.instance.mir_k()[0] == 2);
  CHECK(built.instance.mir_k()[1] == 1);

  BuiltInstance again = mir_instance_from_ratings(matrix, probs, KRule::full, 9);
  CHECK(again.instance.fingerprint() == built.instance.fingerprint());

  std::vector<double> short_probs = {1.0};
  CHECK_THROWS_WITH_AS(
      mir_instance_from_ratings(matrix, short_probs, KRule::full, 9),
      "probability vector size must match user count", std::invalid_argument);
}

TEST_CASE("identification instances from ratings keep every user") {
  RatingsMatrix matrix;
  matrix.users = 3;
  matrix.items = 3;
  matrix.liked = {{0}, {1}, {}};
  matrix.memberships = 2;
  std::vector<double> probs = uniform_probs(3);

  BuiltInstance built = odt_instance_from_ratings(matrix, probs, TRule::one, 9);
  CHECK(built.warnings.empty());
  CHECK(built.kept_users == std::vector<int>{0, 1, 2});
  CHECK(built.instance.num_scenarios() == 3);
  CHECK(built.instance.app() == App::godt);
  CHECK(std::vector<int>(built.instance.godt_t().begin(),
                         built.instance.godt_t().end()) ==
        std::vector<int>{1, 1, 1});
  CHECK(validate_instance(built.instance).empty());

  // Duplicate rows surface as uncoverable scenarios, not construction errors.
  RatingsMatrix dup = matrix;
  dup.liked = {{0}, {0}, {1}};
  BuiltInstance clash = odt_instance_from_ratings(dup, probs, TRule::one, 9);
  auto report = validate_instance(clash.instance);
  CHECK(report.size() == 2);
}

TEST_CASE("probability helpers are normalized and seeded") {
  CHECK(uniform_probs(4) ==
        std::vector<double>{0.25, 0.25, 0.25, 0.25});
  CHECK(uniform_probs(1) == std::vector<double>{1.0});

  auto a = powerlaw_probs(6, 2.0, 7);
  auto b = powerlaw_probs(6, 2.0, 7);
  auto c = powerlaw_probs(6, 2.0, 8);
  CHECK(a == b);
  CHECK(a != c);
  double sum = 0.0;
  for (double p : a) {
    CHECK(p > 0.0);
    sum += p;
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(powerlaw_probs(4, 0.5, 1), std::invalid_argument);

  auto base = uniform_probs(5);
  auto shuffled = permute_probs(powerlaw_probs(5, 3.0, 1), 4);
  CHECK(shuffled == permute_probs(powerlaw_probs(5, 3.0, 1), 4));
  auto sorted_in = powerlaw_probs(5, 3.0, 1);
  auto sorted_out = shuffled;
  std::sort(sorted_in.begin(), sorted_in.end());
  std::sort(sorted_out.begin(), sorted_out.end());
  CHECK(sorted_in == sorted_out);
  CHECK(permute_probs(base, 2) == base);  // permuting a constant is invisible
}
