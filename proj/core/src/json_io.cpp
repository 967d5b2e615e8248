#include "adrank/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "adrank/errors.hpp"
#include "adrank/functions.hpp"

namespace adrank {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what) {
  throw ParseError("instance json: " + what);
}

App parse_app_tag(const Json& root) {
  if (!root.contains("app") || !root["app"].is_string()) fail("missing 'app' tag");
  std::string tag = root["app"].get<std::string>();
  if (tag == "mir") return App::mir;
  if (tag == "odt") return App::odt;
  if (tag == "godt") return App::godt;
  if (tag == "ecd") return App::ecd;
  if (tag == "drd") return App::drd;
  fail("unknown app tag '" + tag + "'");
}

double number_field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) fail(where + ": missing '" + key + "'");
  const Json& v = obj[key];
  if (!v.is_number()) fail(where + ": '" + key + "' must be a number");
  return v.get<double>();
}

int int_field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) fail(where + ": missing '" + key + "'");
  const Json& v = obj[key];
  if (!v.is_number_integer()) fail(where + ": '" + key + "' must be an integer");
  return v.get<int>();
}

std::vector<int> sorted_index_array(const Json& v, int bound, const std::string& where) {
  if (!v.is_array()) fail(where + " must be an array");
  std::vector<int> out;
  out.reserve(v.size());
  for (const Json& item : v) {
    if (!item.is_number_integer()) fail(where + " must contain integers");
    int idx = item.get<int>();
    if (idx < 0 || idx >= bound)
      fail(where + ": index " + std::to_string(idx) + " outside [0, " +
           std::to_string(bound) + ")");
    if (!out.empty() && idx <= out.back())
      fail(where + " must be strictly increasing");
    out.push_back(idx);
  }
  return out;
}

void check_keys(const Json& obj, std::initializer_list<const char*> allowed,
                const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) fail(where + ": unknown field '" + key + "'");
  }
}

Instance parse_instance(const Json& root) {
  if (!root.is_object()) fail("top-level value must be an object");
  App app = parse_app_tag(root);

  check_keys(root, {"app", "costs", "scenarios", "regions", "alphabet"}, "top level");
  if (app != App::drd && root.contains("regions"))
    fail("'regions' is only valid for app 'drd'");

  if (!root.contains("costs") || !root["costs"].is_array()) fail("missing 'costs' array");
  std::vector<double> costs;
  for (const Json& c : root["costs"]) {
    if (!c.is_number()) fail("'costs' must contain numbers");
    costs.push_back(c.get<double>());
  }
  int n = static_cast<int>(costs.size());

  if (!root.contains("scenarios") || !root["scenarios"].is_array())
    fail("missing 'scenarios' array");
  const Json& scen = root["scenarios"];
  int m = static_cast<int>(scen.size());
  if (m == 0) fail("'scenarios' must be nonempty");

  bool use_feedback = scen[0].is_object() && scen[0].contains("feedback");
  if (use_feedback && app != App::odt && app != App::godt)
    fail("app '" + app_name(app) + "' requires interest sets, not feedback rows");
  if (root.contains("alphabet") && !use_feedback)
    fail("'alphabet' is only valid with feedback rows");

  std::vector<double> probs;
  std::vector<std::vector<int>> sets(use_feedback ? 0 : m);
  std::vector<std::vector<Symbol>> rows(use_feedback ? m : 0);
  std::vector<int> payload;
  int max_symbol = 1;

  for (int i = 0; i < m; ++i) {
    std::string where = "scenario " + std::to_string(i);
    const Json& s = scen[i];
    if (!s.is_object()) fail(where + " must be an object");
    switch (app) {
      case App::mir: check_keys(s, {"p", "set", "K"}, where); break;
      case App::godt: check_keys(s, {"p", "set", "feedback", "t"}, where); break;
      case App::ecd: check_keys(s, {"p", "set", "class"}, where); break;
      default: check_keys(s, {"p", "set", "feedback"}, where); break;
    }
    probs.push_back(number_field(s, "p", where));

    if (s.contains("feedback") != use_feedback)
      fail(where + ": mixing 'set' and 'feedback' scenarios");
    if (use_feedback) {
      const Json& row = s["feedback"];
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        fail(where + ": 'feedback' must be an array of " + std::to_string(n) +
             " symbol ids");
      std::vector<Symbol>& r = rows[i];
      for (const Json& item : row) {
        if (!item.is_number_integer()) fail(where + ": 'feedback' must contain integers");
        int sym = item.get<int>();
        if (sym < 0 || sym > 255) fail(where + ": symbol id " + std::to_string(sym) +
                                       " outside [0, 255]");
        max_symbol = std::max(max_symbol, sym);
        r.push_back(static_cast<Symbol>(sym));
      }
    } else {
      if (!s.contains("set")) fail(where + ": missing 'set'");
      sets[i] = sorted_index_array(s["set"], n, where + ": 'set'");
    }

    switch (app) {
      case App::mir: payload.push_back(int_field(s, "K", where)); break;
      case App::godt: payload.push_back(int_field(s, "t", where)); break;
      case App::ecd: payload.push_back(int_field(s, "class", where)); break;
      default: break;
    }
  }

  Symbol alphabet = 2;
  if (root.contains("alphabet")) {
    const Json& a = root["alphabet"];
    if (!a.is_number_integer()) fail("'alphabet' must be an integer");
    int av = a.get<int>();
    if (av < 2 || av > 255) fail("'alphabet' must be in [2, 255]");
    if (av <= max_symbol) fail("'alphabet' smaller than a used symbol id");
    alphabet = static_cast<Symbol>(av);
  } else {
    alphabet = static_cast<Symbol>(max_symbol + 1);
  }

  try {
    switch (app) {
      case App::mir:
        return make_mir_instance(std::move(costs), std::move(probs), sets,
                                 std::move(payload));
      case App::odt:
        if (use_feedback)
          return make_multiway_instance(std::move(costs), std::move(probs), rows,
                                        alphabet);
        return make_odt_instance(std::move(costs), std::move(probs), sets);
      case App::godt:
        if (use_feedback)
          return make_multiway_instance(std::move(costs), std::move(probs), rows,
                                        alphabet, std::move(payload));
        return make_godt_instance(std::move(costs), std::move(probs), sets,
                                  std::move(payload));
      case App::ecd:
        return make_ecd_instance(std::move(costs), std::move(probs), sets,
                                 std::move(payload));
      case App::drd: {
        if (!root.contains("regions")) fail("app 'drd' requires a 'regions' array");
        const Json& regs = root["regions"];
        if (!regs.is_array() || regs.empty()) fail("'regions' must be a nonempty array");
        std::vector<std::vector<int>> regions;
        for (std::size_t j = 0; j < regs.size(); ++j)
          regions.push_back(sorted_index_array(regs[j], m,
                                               "region " + std::to_string(j)));
        return make_drd_instance(std::move(costs), std::move(probs), sets,
                                 std::move(regions));
      }
      default: break;
    }
  } catch (const std::invalid_argument& e) {
    fail(e.what());  // construction-level rejection of file contents
  }
  fail("unreachable app tag");
}

}  // namespace

Instance instance_from_json(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(e.what());
  }
  return parse_instance(root);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return instance_from_json(buf.str());
}

std::string instance_to_json(const Instance& inst) {
  if (inst.app() == App::none || inst.app() == App::ranking)
    throw std::invalid_argument("cannot serialize instance with app '" +
                                app_name(inst.app()) + "'");
  Json root;
  root["app"] = app_name(inst.app());
  root["costs"] = Json::array();
  for (double c : inst.costs()) root["costs"].push_back(c);

  bool multiway = inst.alphabet() > 2;
  root["scenarios"] = Json::array();
  for (int i = 0; i < inst.num_scenarios(); ++i) {
    Json s;
    s["p"] = inst.prob(i);
    if (multiway) {
      Json row = Json::array();
      for (int e = 0; e < inst.num_elements(); ++e)
        row.push_back(static_cast<int>(inst.feedback(i, e)));
      s["feedback"] = std::move(row);
    } else {
      s["set"] = inst.interest_set(i);
    }
    switch (inst.app()) {
      case App::mir: s["K"] = inst.mir_k()[i]; break;
      case App::godt: s["t"] = inst.godt_t()[i]; break;
      case App::ecd: s["class"] = inst.ecd_class()[i]; break;
      default: break;
    }
    root["scenarios"].push_back(std::move(s));
  }
  if (inst.app() == App::drd) root["regions"] = inst.drd_regions();
  if (multiway) root["alphabet"] = static_cast<int>(inst.alphabet());
  return root.dump(2) + "\n";
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file: " + path);
  out << instance_to_json(inst);
}

}  // namespace adrank
