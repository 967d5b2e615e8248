#include <algorithm>
#include <stdexcept>
#include <vector>

#include "adrank/experiments.hpp"
#include "adrank/functions.hpp"
#include "adrank/state.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace adrank;

TEST_CASE("root state holds every uncovered scenario") {
  Instance inst = make_odt_instance({1.0, 1.0}, {0.5, 0.25, 0.25},
                                    {{}, {0}, {1}});
  AlgoState root = make_root_state(inst);
  CHECK(root.alive == std::vector<int>{0, 1, 2});
  CHECK(root.num_displayed == 0);
  CHECK(root.displayed_cost == 0.0);
  CHECK(root.alive_mass(inst) == 1.0);
  CHECK(root.has_positive_mass(inst));
  CHECK(covered_at_root(inst).empty());
  for (int pos = 0; pos < 3; ++pos) CHECK(root.cached_value(pos) == 0.0);
  CHECK(root.alive_pos(1) == 1);
  CHECK(root.alive_pos(7) == -1);
}

TEST_CASE("pre-covered scenarios never enter the alive set") {
  // Scenario 1's partition cell is everything: constant-one oracle.
  Instance inst = make_ecd_instance({1.0}, {0.5, 0.5}, {{0}, {}}, {0, 0});
  AlgoState root = make_root_state(inst);
  CHECK(root.alive.empty());
  CHECK(covered_at_root(inst) == std::vector<int>{0, 1});
}

TEST_CASE("advancing a single-scenario instance empties the branch") {
  // One scenario, S = {x}, K = 1: displaying x covers it and the yes child
  // carries no alive scenarios.
  Instance inst = make_mir_instance({3.0}, {1.0}, {{0}}, {1});
  AlgoState root = make_root_state(inst);
  Advance adv = advance_state(root, 0, inst);
  REQUIRE(adv.symbols == std::vector<Symbol>{kYes});
  REQUIRE(adv.covered.size() == 1);
  CHECK(adv.covered[0].scenario == 0);
  CHECK(adv.covered[0].symbol == kYes);
  CHECK(adv.covered[0].cover_cost == 3.0);
  CHECK(adv.children[0].alive.empty());
  CHECK(adv.children[0].num_displayed == 1);
  CHECK(adv.children[0].displayed_cost == 3.0);
  CHECK(adv.children[0].displayed.test(0));
}

TEST_CASE("advance partitions the alive set by feedback symbol") {
  Instance inst = make_odt_instance({1.0, 1.0, 1.0},
                                    {0.25, 0.25, 0.25, 0.25},
                                    {{0, 1}, {0}, {1, 2}, {}});
  AlgoState root = make_root_state(inst);
  Advance adv = advance_state(root, 0, inst);
  // Element 0 interests scenarios 0 and 1 (yes) and not 2, 3 (no).
  REQUIRE(adv.symbols.size() == 2);
  CHECK(adv.symbols[0] == kYes);
  CHECK(adv.symbols[1] == kNo);
  std::vector<int> merged;
  for (const auto& child : adv.children)
    merged.insert(merged.end(), child.alive.begin(), child.alive.end());
  for (const auto& c : adv.covered) merged.push_back(c.scenario);
  std::sort(merged.begin(), merged.end());
  CHECK(merged == std::vector<int>{0, 1, 2, 3});

  SUBCASE("children advance independently") {
    const AlgoState& yes = adv.children[0];
    CHECK(yes.alive == std::vector<int>{0, 1});
    Advance deeper = advance_state(yes, 1, inst);
    // Within {0, 1}: element 1 interests 0 only; scenario 1 is identified
    // (all others distinguished) once elements 0 and 1 are shown.
    std::vector<int> all;
    for (const auto& child : deeper.children)
      all.insert(all.end(), child.alive.begin(), child.alive.end());
    for (const auto& c : deeper.covered) all.push_back(c.scenario);
    std::sort(all.begin(), all.end());
    CHECK(all == std::vector<int>{0, 1});
  }
}

TEST_CASE("advance rejects bad elements") {
  Instance inst = make_mir_instance({1.0, 1.0}, {1.0}, {{0, 1}}, {2});
  AlgoState root = make_root_state(inst);
  CHECK_THROWS_WITH_AS(advance_state(root, 5, inst),
                       "element 5 out of range", std::invalid_argument);
  Advance adv = advance_state(root, 0, inst);
  CHECK_THROWS_WITH_AS(advance_state(adv.children[0], 0, inst),
                       "element 0 already displayed", std::invalid_argument);
}

TEST_CASE("clone detaches evaluation state") {
  Instance inst = make_mir_instance({1.0, 1.0}, {1.0}, {{0, 1}}, {2});
  AlgoState root = make_root_state(inst);
  AlgoState copy = root.clone();
  Advance adv = advance_state(copy, 0, inst);
  (void)adv;
  // The original still sees the empty display set.
  CHECK(root.num_displayed == 0);
  CHECK(root.cached_value(0) == 0.0);
  CHECK(copy.num_displayed == 0);
}

TEST_CASE("cached values advance incrementally and match from-scratch") {
  Rng rng = make_rng(21, "state-walk");
  RandomInstanceParams params;
  for (int trial = 0; trial < 12; ++trial) {
    Instance inst = random_instance(rng, params, trial);
    AlgoState state = make_root_state(inst);
    std::vector<int> shown;
    for (int e = 0; e < inst.num_elements() && !state.alive.empty(); ++e) {
      Advance adv = advance_state(state, e, inst);
      shown.push_back(e);
      if (adv.children.empty()) break;
      // Follow the first child; verify every cached value from scratch.
      state = std::move(adv.children[0]);
      for (std::size_t pos = 0; pos < state.alive.size(); ++pos) {
        double expect = inst.oracle(state.alive[pos]).value(shown);
        CHECK(state.cached_value(pos) == doctest::Approx(expect).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("zero-probability scenarios stay alive but carry no mass") {
  Instance inst = make_odt_instance({1.0, 1.0}, {1.0, 0.0, 0.0},
                                    {{}, {0}, {0, 1}});
  AlgoState root = make_root_state(inst);
  CHECK(root.alive.size() == 3);
  CHECK(root.alive_mass(inst) == 1.0);
  Advance adv = advance_state(root, 0, inst);
  // The no answer identifies scenario 0; the yes child keeps the two
  // zero-probability scenarios alive with no mass.
  REQUIRE(adv.covered.size() == 1);
  CHECK(adv.covered[0].scenario == 0);
  CHECK(adv.covered[0].symbol == kNo);
  REQUIRE(adv.symbols.size() == 2);
  const AlgoState& yes = adv.children[0];
  CHECK(yes.alive == std::vector<int>{1, 2});
  CHECK(yes.alive_mass(inst) == 0.0);
  CHECK_FALSE(yes.has_positive_mass(inst));
}
