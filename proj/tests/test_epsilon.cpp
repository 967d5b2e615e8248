#include <stdexcept>
#include <vector>

#include "adrank/datasets.hpp"
#include "adrank/epsilon.hpp"
#include "adrank/errors.hpp"
#include "adrank/experiments.hpp"
#include "adrank/functions.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace adrank;

TEST_CASE("threshold instances bottom out at one over the largest K") {
  Instance inst = make_mir_instance({1.0, 1.0, 1.0, 1.0}, {0.5, 0.5},
                                    {{0, 1, 2}, {3}}, {3, 1});
  CHECK(epsilon_of(inst, EpsilonMode::analytic) == doctest::Approx(1.0 / 3));
  CHECK(epsilon_of(inst, EpsilonMode::brute_force) == doctest::Approx(1.0 / 3));
}

TEST_CASE("identification instances bottom out at one over m minus one") {
  Rng rng = make_rng(17, "epsilon-odt");
  auto sets = testutil::distinct_sets(rng, 4, 10);
  Instance inst = make_odt_instance(testutil::unit_costs(4),
                                    testutil::uniform(10), sets);
  CHECK(epsilon_of(inst, EpsilonMode::analytic) == doctest::Approx(1.0 / 9));
  CHECK(epsilon_of(inst, EpsilonMode::brute_force) >=
        epsilon_of(inst, EpsilonMode::analytic) - 1e-12);
}

TEST_CASE("the synthetic instance has the documented granularity") {
  Instance inst = gen_syn({1, -1.0});
  CHECK(epsilon_of(inst, EpsilonMode::analytic) == 0.25);
  CHECK(epsilon_of(inst, EpsilonMode::brute_force) == 0.25);
}

TEST_CASE("candidate budgets shift the identification granularity") {
  Rng rng = make_rng(19, "epsilon-godt");
  auto sets = testutil::distinct_sets(rng, 3, 5);
  Instance inst = make_godt_instance(testutil::unit_costs(3),
                                     testutil::uniform(5), sets,
                                     {2, 3, 1, 2, 2});
  // Minimum t is 1, so the finest denominator is m - 1 = 4.
  CHECK(epsilon_of(inst, EpsilonMode::analytic) == 0.25);
}

TEST_CASE("partition instances bottom out at the largest outside count") {
  Instance inst = make_ecd_instance(testutil::unit_costs(2),
                                    testutil::uniform(4),
                                    {{}, {0}, {1}, {0, 1}}, {0, 0, 1, 1});
  CHECK(epsilon_of(inst, EpsilonMode::analytic) == 0.5);
  CHECK(epsilon_of(inst, EpsilonMode::brute_force) == 0.5);
}

TEST_CASE("region products use the documented lower bound") {
  Instance inst = make_drd_instance(testutil::unit_costs(3),
                                    testutil::uniform(5),
                                    {{}, {1}, {}, {0}, {2}},
                                    {{0, 1, 2}, {0, 3, 4}});
  double analytic = epsilon_of(inst, EpsilonMode::analytic);
  double brute = epsilon_of(inst, EpsilonMode::brute_force);
  CHECK(analytic == 0.25);
  CHECK(brute == 0.25);
  CHECK(analytic <= brute + 1e-12);
}

TEST_CASE("analytic epsilon matches or bounds brute force on random instances") {
  Rng rng = make_rng(23, "epsilon-sweep");
  RandomInstanceParams params;
  params.max_n = 5;
  params.max_m = 4;
  for (int trial = 0; trial < 24; ++trial) {
    Instance inst = random_instance(rng, params, trial);
    double analytic;
    try {
      analytic = epsilon_of(inst, EpsilonMode::analytic);
    } catch (const std::invalid_argument&) {
      continue;  // every scenario pre-covered
    }
    double brute = epsilon_of(inst, EpsilonMode::brute_force);
    CHECK(analytic > 0.0);
    CHECK(brute >= analytic - 1e-12);
    if (inst.app() == App::mir) CHECK(brute == doctest::Approx(analytic));
  }
}

TEST_CASE("epsilon error paths") {
  Instance custom = make_custom_instance({1.0}, {1.0}, {{0}},
                                         {mir_function(1, std::vector<int>{0}, 1)});
  CHECK_THROWS_WITH_AS(epsilon_of(custom, EpsilonMode::analytic),
                       "analytic epsilon unsupported for app 'none'",
                       std::invalid_argument);
  CHECK(epsilon_of(custom, EpsilonMode::brute_force) == 1.0);

  Instance single = make_odt_instance({1.0}, {1.0}, {{0}});
  CHECK_THROWS_WITH_AS(epsilon_of(single, EpsilonMode::analytic),
                       "single-scenario instance has no positive marginal",
                       std::invalid_argument);

  Instance covered = make_ecd_instance({1.0}, {0.5, 0.5}, {{0}, {}}, {0, 0});
  CHECK_THROWS_AS(epsilon_of(covered, EpsilonMode::analytic),
                  std::invalid_argument);
  CHECK_THROWS_WITH_AS(epsilon_of(covered, EpsilonMode::brute_force),
                       "no positive marginal in any scenario function",
                       std::invalid_argument);

  std::vector<std::vector<int>> wide_sets = {{0}};
  Instance wide = make_mir_instance(testutil::unit_costs(21), {1.0},
                                    wide_sets, {1});
  CHECK_THROWS_WITH_AS(epsilon_of(wide, EpsilonMode::brute_force),
                       "brute-force epsilon limited to 20 elements, got 21",
                       SizeError);
}
