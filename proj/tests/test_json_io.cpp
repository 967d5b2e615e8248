#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "adrank/errors.hpp"
#include "adrank/functions.hpp"
#include "adrank/json_io.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace adrank;

namespace {

void check_round_trip(const Instance& inst) {
  Instance back = instance_from_json(instance_to_json(inst));
  CHECK(back.same_content(inst));
  CHECK(back.fingerprint() == inst.fingerprint());
}

}  // namespace

TEST_CASE("instances of every application round-trip through json") {
  check_round_trip(
      make_mir_instance({1.0, 2.0, 1.5}, {0.5, 0.5}, {{0, 2}, {1}}, {2, 1}));
  check_round_trip(make_odt_instance(testutil::unit_costs(2),
                                     {0.5, 0.25, 0.25}, {{}, {0}, {1}}));
  check_round_trip(make_godt_instance(testutil::unit_costs(2),
                                      {0.5, 0.25, 0.25}, {{}, {0}, {0, 1}},
                                      {1, 2, 1}));
  check_round_trip(make_ecd_instance(testutil::unit_costs(2),
                                     {0.25, 0.25, 0.25, 0.25},
                                     {{}, {0}, {1}, {0, 1}}, {0, 0, 1, 1}));
  check_round_trip(make_drd_instance(testutil::unit_costs(3),
                                     testutil::uniform(5),
                                     {{}, {1}, {}, {0}, {2}},
                                     {{0, 1, 2}, {0, 3, 4}}));
}

TEST_CASE("multiway instances round-trip with explicit alphabets") {
  std::vector<std::vector<Symbol>> rows = {{0, 0}, {1, 2}, {2, 1}};
  check_round_trip(make_multiway_instance(testutil::unit_costs(2),
                                          testutil::uniform(3), rows, 3));
  check_round_trip(make_multiway_instance(testutil::unit_costs(2),
                                          testutil::uniform(3), rows, 3,
                                          {1, 2, 1}));
}

TEST_CASE("json text has the documented shape") {
  Instance inst = make_mir_instance({1.0, 2.0}, {1.0}, {{0, 1}}, {2});
  std::string text = instance_to_json(inst);
  CHECK(text.find("\"app\": \"mir\"") != std::string::npos);
  CHECK(text.find("\"costs\"") != std::string::npos);
  CHECK(text.find("\"scenarios\"") != std::string::npos);
  CHECK(text.find("\"K\": 2") != std::string::npos);
  CHECK(text.back() == '\n');
}

TEST_CASE("files round-trip through save and load") {
  Instance inst = make_odt_instance(testutil::unit_costs(2),
                                    {0.5, 0.25, 0.25}, {{}, {0}, {1}});
  std::string path = "/tmp/adrank_test_instance.json";
  save_instance(inst, path);
  Instance back = load_instance(path);
  CHECK(back.same_content(inst));
  std::remove(path.c_str());

  CHECK_THROWS_WITH_AS(load_instance("/nonexistent/instance.json"),
                       "cannot open instance file: /nonexistent/instance.json",
                       ParseError);
}

TEST_CASE("the parser names the offending field") {
  auto parse = [](const std::string& text) { return instance_from_json(text); };

  CHECK_THROWS_WITH_AS(parse("not json"),
                       doctest::Contains("instance json:"), ParseError);
  CHECK_THROWS_WITH_AS(parse("[1, 2]"),
                       "instance json: top-level value must be an object",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse(R"({"costs": [1]})"),
                       "instance json: missing 'app' tag", ParseError);
  CHECK_THROWS_WITH_AS(parse(R"({"app": "ranking", "costs": [1]})"),
                       "instance json: unknown app tag 'ranking'", ParseError);
  CHECK_THROWS_WITH_AS(parse(R"({"app": "mirx", "costs": [1]})"),
                       "instance json: unknown app tag 'mirx'", ParseError);
  CHECK_THROWS_WITH_AS(
      parse(R"({"app": "mir", "scenarios": []})"),
      "instance json: missing 'costs' array", ParseError);
  CHECK_THROWS_WITH_AS(
      parse(R"({"app": "mir", "costs": [1]})"),
      "instance json: missing 'scenarios' array", ParseError);
  CHECK_THROWS_WITH_AS(
      parse(R"({"app": "mir", "costs": [1], "scenarios": []})"),
      "instance json: 'scenarios' must be nonempty", ParseError);
  CHECK_THROWS_WITH_AS(
      parse(R"({"app": "mir", "costs": [1], "scenarios": [], "bogus": 3})"),
      "instance json: top level: unknown field 'bogus'", ParseError);
}

TEST_CASE("the parser validates scenario payloads") {
  auto parse = [](const std::string& text) { return instance_from_json(text); };

  // Unsorted interest sets are rejected, not silently fixed.
  CHECK_THROWS_WITH_AS(
      parse(R"({"app": "odt", "costs": [1, 1],
                "scenarios": [{"p": 0.5, "set": [1, 0]},
                               {"p": 0.5, "set": []}]})"),
      "instance json: scenario 0: 'set' must be strictly increasing",
      ParseError);
  CHECK_THROWS_WITH_AS(
      parse(R"({"app": "odt", "costs": [1, 1],
                "scenarios": [{"p": 0.5, "set": [2]},
                               {"p": 0.5, "set": []}]})"),
      "instance json: scenario 0: 'set': index 2 outside [0, 2)", ParseError);
  CHECK_THROWS_WITH_AS(
      parse(R"({"app": "mir", "costs": [1],
                "scenarios": [{"p": 1.0, "set": [0]}]})"),
      "instance json: scenario 0: missing 'K'", ParseError);
  CHECK_THROWS_WITH_AS(
      parse(R"({"app": "odt", "costs": [1],
                "scenarios": [{"p": 1.0, "set": [0], "K": 1}]})"),
      "instance json: scenario 0: unknown field 'K'", ParseError);
  CHECK_THROWS_WITH_AS(
      parse(R"({"app": "odt", "costs": [1, 1],
                "scenarios": [{"p": 0.5, "set": [0]},
                               {"p": 0.5, "feedback": [0, 1]}]})"),
      "instance json: scenario 1: mixing 'set' and 'feedback' scenarios",
      ParseError);
  CHECK_THROWS_WITH_AS(
      parse(R"({"app": "mir", "costs": [1],
                "scenarios": [{"p": 1.0, "feedback": [0], "K": 1}]})"),
      "instance json: app 'mir' requires interest sets, not feedback rows",
      ParseError);
  CHECK_THROWS_WITH_AS(
      parse(R"({"app": "odt", "costs": [1, 1],
                "scenarios": [{"p": 0.5, "feedback": [0]},
                               {"p": 0.5, "feedback": [1]}]})"),
      "instance json: scenario 0: 'feedback' must be an array of 2 symbol ids",
      ParseError);
  CHECK_THROWS_WITH_AS(
      parse(R"({"app": "odt", "costs": [1],
                "scenarios": [{"p": 0.5, "feedback": [300]},
                               {"p": 0.5, "feedback": [0]}]})"),
      "instance json: scenario 0: symbol id 300 outside [0, 255]", ParseError);
  CHECK_THROWS_WITH_AS(
      parse(R"({"app": "odt", "costs": [1],
                "scenarios": [{"p": 0.5, "set": [0]},
                               {"p": "x", "set": []}]})"),
      "instance json: scenario 1: 'p' must be a number", ParseError);
}

TEST_CASE("the parser validates alphabets and regions") {
  auto parse = [](const std::string& text) { return instance_from_json(text); };

  CHECK_THROWS_WITH_AS(
      parse(R"({"app": "odt", "costs": [1], "alphabet": 3,
                "scenarios": [{"p": 0.5, "set": [0]},
                               {"p": 0.5, "set": []}]})"),
      "instance json: 'alphabet' is only valid with feedback rows", ParseError);
  CHECK_THROWS_WITH_AS(
      parse(R"({"app": "odt", "costs": [1], "alphabet": 1,
                "scenarios": [{"p": 0.5, "feedback": [0]},
                               {"p": 0.5, "feedback": [1]}]})"),
      "instance json: 'alphabet' must be in [2, 255]", ParseError);
  CHECK_THROWS_WITH_AS(
      parse(R"({"app": "odt", "costs": [1], "alphabet": 2,
                "scenarios": [{"p": 0.5, "feedback": [0]},
                               {"p": 0.5, "feedback": [2]}]})"),
      "instance json: 'alphabet' smaller than a used symbol id", ParseError);
  CHECK_THROWS_WITH_AS(
      parse(R"({"app": "odt", "costs": [1], "regions": [[0]],
                "scenarios": [{"p": 1.0, "set": [0]}]})"),
      "instance json: 'regions' is only valid for app 'drd'", ParseError);
  CHECK_THROWS_WITH_AS(
      parse(R"({"app": "drd", "costs": [1],
                "scenarios": [{"p": 1.0, "set": [0]}]})"),
      "instance json: app 'drd' requires a 'regions' array", ParseError);
}

TEST_CASE("construction failures surface as parse errors") {
  // K above the interest-set size is a semantic error in the file.
  CHECK_THROWS_AS(
      instance_from_json(R"({"app": "mir", "costs": [1],
                             "scenarios": [{"p": 1.0, "set": [0], "K": 2}]})"),
      ParseError);
  // Unidentifiable duplicate rows reach the odt constructor and bounce.
  CHECK_THROWS_AS(
      instance_from_json(R"({"app": "odt", "costs": [1],
                             "scenarios": [{"p": 0.5, "set": [0]},
                                            {"p": 0.5, "set": [0]}]})"),
      ParseError);
}

TEST_CASE("the writer refuses apps the format cannot express") {
  std::vector<OraclePtr> oracles = {constant_one(1)};
  Instance ranked = make_ranking_instance({1.0}, {1.0}, oracles);
  CHECK_THROWS_WITH_AS(instance_to_json(ranked),
                       "cannot serialize instance with app 'ranking'",
                       std::invalid_argument);
  Instance custom = make_custom_instance({1.0}, {1.0}, {{0}},
                                         {mir_function(1, std::vector<int>{0}, 1)});
  CHECK_THROWS_WITH_AS(instance_to_json(custom),
                       "cannot serialize instance with app 'none'",
                       std::invalid_argument);
}
