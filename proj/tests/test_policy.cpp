#include <cmath>
#include <stdexcept>
#include <vector>

#include "adrank/asr.hpp"
#include "adrank/datasets.hpp"
#include "adrank/errors.hpp"
#include "adrank/functions.hpp"
#include "adrank/policy.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace adrank;

TEST_CASE("single mandatory element is displayed at its cost") {
  Instance inst = make_mir_instance({3.0}, {1.0}, {{0}}, {1});
  BuildResult result = build_policy(inst);
  CHECK(result.expected_cost == 3.0);
  REQUIRE(result.traces.size() == 1);
  CHECK(result.traces[0].path == std::vector<int>{0});
  CHECK(result.traces[0].cover_time == 3.0);
  CHECK(result.traces[0].covered);
  CHECK(result.trie.num_nodes() == 1);
}

TEST_CASE("threshold two on a single scenario displays both members") {
  Instance inst = make_mir_instance({1.0, 1.0}, {1.0}, {{0, 1}}, {2});
  BuildResult result = build_policy(inst);
  CHECK(result.expected_cost == 2.0);
  CHECK(result.traces[0].path == std::vector<int>{0, 1});
  CHECK(result.traces[0].cover_time == 2.0);
}

TEST_CASE("synthetic instance cost is the known constant") {
  Instance inst = gen_syn({50, -1.0});
  BuildResult result = build_policy(inst);
  // probabilities reach 2^-52, so the trace sum rounds in its last two bits
  CHECK(result.expected_cost == doctest::Approx(2.75).epsilon(1e-12));
}

TEST_CASE("replaying the trie reproduces the build cost") {
  Instance inst = gen_syn({2, -1.0});
  BuildResult result = build_policy(inst);
  CHECK(expected_cost(result.trie, inst) ==
        doctest::Approx(result.expected_cost).epsilon(1e-12));
  CHECK(result.nodes_expanded == result.trie.num_nodes());
}

TEST_CASE("builds are deterministic and selector callbacks match") {
  Instance inst = gen_syn({2, -1.0});
  BuildResult a = build_policy(inst);
  BuildResult b = build_policy(inst);
  CHECK(testutil::tries_equal(a.trie, b.trie));

  CallbackPolicy cb(
      [](const AlgoState& s, const Instance& i) { return select_next(s, i); });
  BuildResult c = build_policy(inst, cb);
  CHECK(testutil::tries_equal(a.trie, c.trie));
  CHECK(c.expected_cost == a.expected_cost);

  CHECK(expected_cost(
            [](const AlgoState& s, const Instance& i) {
              return select_next(s, i);
            },
            inst) == a.expected_cost);
}

TEST_CASE("traces follow trie paths and end covered") {
  Instance inst = gen_syn({3, -1.0});
  BuildResult result = build_policy(inst);
  for (const auto& trace : result.traces) {
    REQUIRE(trace.covered);
    // Walk the trie along the scenario's feedback; the visited elements
    // must equal the trace path.
    std::vector<int> walked;
    int node = result.trie.root();
    while (node != -1) {
      int e = result.trie.node(node).element;
      walked.push_back(e);
      if (static_cast<int>(walked.size()) == static_cast<int>(trace.path.size()))
        break;
      node = result.trie.child(node, inst.feedback(trace.scenario, e));
    }
    CHECK(walked == trace.path);
  }
}

TEST_CASE("zero-probability scenarios may stay uncovered at no cost") {
  Instance inst = make_mir_instance({1.0, 1.0}, {1.0, 0.0}, {{0}, {1}},
                                    {1, 1});
  BuildResult result = build_policy(inst);
  CHECK(result.expected_cost == 1.0);
  CHECK(result.traces[0].covered);
  CHECK(result.traces[0].cover_time == 1.0);
  CHECK_FALSE(result.traces[1].covered);
  CHECK(std::isinf(result.traces[1].cover_time));
  CHECK(result.traces[1].path == std::vector<int>{0});
}

TEST_CASE("policies that stall raise PolicyIncompleteError") {
  Instance inst = make_mir_instance({1.0, 1.0}, {1.0}, {{0, 1}}, {2});
  CallbackPolicy stuck([](const AlgoState&, const Instance&) { return 0; });
  CHECK_THROWS_AS(build_policy(inst, stuck), PolicyIncompleteError);
  try {
    build_policy(inst, stuck);
  } catch (const PolicyIncompleteError& e) {
    CHECK(std::string(e.what()) == "policy re-selected displayed element 0");
  }

  CallbackPolicy wild([](const AlgoState&, const Instance&) { return 99; });
  try {
    build_policy(inst, wild);
  } catch (const PolicyIncompleteError& e) {
    CHECK(std::string(e.what()) == "policy returned out-of-range element 99");
  }
}

TEST_CASE("replay rejects a trie missing a needed branch") {
  Instance inst = make_mir_instance({1.0, 1.0}, {0.5, 0.5}, {{0}, {1}},
                                    {1, 1});
  PolicyTrie stub;
  stub.add_node(-1, 0, 0);
  CHECK_THROWS_AS(expected_cost(stub, inst), PolicyIncompleteError);
}

TEST_CASE("pre-covered scenarios cost nothing") {
  // Scenario 1 sits in a partition cell covering everything.
  Instance inst = make_ecd_instance({1.0}, {0.5, 0.5}, {{0}, {}}, {0, 0});
  BuildResult result = build_policy(inst);
  CHECK(result.expected_cost == 0.0);
  CHECK(result.trie.empty());
  CHECK(result.traces[0].covered);
  CHECK(result.traces[0].cover_time == 0.0);
  CHECK(result.traces[0].path.empty());
}
