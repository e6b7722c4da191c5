#include "stirling/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace stirling {

using nlohmann::json;

namespace {

constexpr std::array<std::pair<ObjectKind, std::string_view>, 7> kObjectNames{{
    {ObjectKind::stirling, "stirling"},
    {ObjectKind::code, "code"},
    {ObjectKind::tree, "tree"},
    {ObjectKind::riordan, "riordan"},
    {ObjectKind::dumont, "dumont"},
    {ObjectKind::matching, "matching"},
    {ObjectKind::plane_tree, "plane-tree"},
}};

json ternary_json(const TernaryTree& t, int v) {
  json slots = json::array();
  for (int c : t.slots(v)) slots.push_back(c == 0 ? json(nullptr) : ternary_json(t, c));
  return {{"label", v}, {"slots", slots}};
}

json plane_json(const PlaneIncreasingTree& t, int v) {
  json children = json::array();
  for (int c : t.children(v)) children.push_back(plane_json(t, c));
  return {{"label", v}, {"children", children}};
}

std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidObject(std::string(what) + " must be a JSON array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InvalidObject(std::string(what) + " entries must be integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::vector<std::pair<int, int>> pair_array(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidObject(std::string(what) + " must be a JSON array of pairs");
  std::vector<std::pair<int, int>> out;
  for (const auto& x : j) {
    const auto p = int_array(x, what);
    if (p.size() != 2) throw InvalidObject(std::string(what) + " entries must be pairs");
    out.emplace_back(p[0], p[1]);
  }
  return out;
}

// label -> child labels (0 for an empty ternary slot).
using ChildMap = std::map<int, std::vector<int>>;

void collect_tree(const json& node, const char* field, bool ternary, ChildMap& children) {
  if (!node.is_object() || !node.contains("label") || !node.contains(field) || !node["label"].is_number_integer() ||
      !node[field].is_array()) {
    throw InvalidObject(std::string("tree node needs an integer \"label\" and an array \"") + field + "\"");
  }
  const int label = node["label"].get<int>();
  if (children.count(label) != 0) throw InvalidObject("label " + std::to_string(label) + " repeats");
  if (ternary && node[field].size() != 3) throw InvalidObject("ternary node needs exactly three slots");
  std::vector<int> list;
  for (const auto& child : node[field]) {
    if (child.is_null() && ternary) {
      list.push_back(0);
      continue;
    }
    if (!child.is_object() || !child.contains("label") || !child["label"].is_number_integer()) {
      throw InvalidObject("tree child must be a node");
    }
    list.push_back(child["label"].get<int>());
  }
  children[label] = list;
  for (const auto& child : node[field]) {
    if (!child.is_null()) collect_tree(child, field, ternary, children);
  }
}

// Labels must be exactly 1..n.
std::vector<std::vector<int>> dense(const ChildMap& children) {
  const int n = static_cast<int>(children.size());
  std::vector<std::vector<int>> out;
  int expected = 1;
  for (const auto& [label, list] : children) {
    if (label != expected++) throw InvalidObject("tree labels must be exactly 1.." + std::to_string(n));
    out.push_back(list);
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidObject(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

ObjectKind object_from_name(std::string_view name) {
  for (const auto& [kind, n] : kObjectNames) {
    if (n == name) return kind;
  }
  throw InvalidObject("unknown object '" + std::string(name) + "'");
}

std::string_view name_of(ObjectKind kind) {
  for (const auto& [k, n] : kObjectNames) {
    if (k == kind) return n;
  }
  return "?";
}

ObjectKind kind_of(const AnyObject& object) { return static_cast<ObjectKind>(object.index()); }

std::string dump_object(const AnyObject& object) {
  json j;
  switch (kind_of(object)) {
    case ObjectKind::stirling: j = std::get<StirlingPermutation>(object).word(); break;
    case ObjectKind::code:
      j = json::array();
      for (const auto& t : std::get<SPCode>(object).tuples()) j.push_back({t.a, t.b});
      break;
    case ObjectKind::tree: j = ternary_json(std::get<TernaryTree>(object), 1); break;
    case ObjectKind::riordan: j = std::get<RiordanWord>(object).letters(); break;
    case ObjectKind::dumont: j = std::get<DumontWord>(object).letters(); break;
    case ObjectKind::matching:
      j = json::array();
      for (const auto& [a, b] : std::get<PerfectMatching>(object).blocks()) j.push_back({a, b});
      break;
    case ObjectKind::plane_tree: j = plane_json(std::get<PlaneIncreasingTree>(object), 1); break;
  }
  return j.dump();
}

AnyObject parse_object(ObjectKind kind, std::string_view json_text, int arity) {
  const json j = parse_json(json_text);
  switch (kind) {
    case ObjectKind::stirling: return StirlingPermutation(int_array(j, "a Stirling word"), arity);
    case ObjectKind::code: {
      std::vector<CodeTuple> tuples;
      for (const auto& [a, b] : pair_array(j, "a code")) tuples.push_back({a, b});
      return SPCode(std::move(tuples));
    }
    case ObjectKind::tree: {
      ChildMap children;
      collect_tree(j, "slots", true, children);
      std::vector<TernaryTree::Slots> slots;
      for (const auto& list : dense(children)) slots.push_back({list[0], list[1], list[2]});
      return TernaryTree(std::move(slots));
    }
    case ObjectKind::riordan: return RiordanWord(int_array(j, "a Riordan word"));
    case ObjectKind::dumont: return DumontWord(int_array(j, "a Dumont word"));
    case ObjectKind::matching: return PerfectMatching(pair_array(j, "a matching"));
    case ObjectKind::plane_tree: {
      ChildMap children;
      collect_tree(j, "children", false, children);
      return PlaneIncreasingTree(dense(children));
    }
  }
  throw InvalidObject("unknown object kind");
}

namespace {

SPCode to_code(const AnyObject& object) {
  switch (kind_of(object)) {
    case ObjectKind::stirling: return encode(std::get<StirlingPermutation>(object));
    case ObjectKind::code: return std::get<SPCode>(object);
    case ObjectKind::tree: return tree_to_code(std::get<TernaryTree>(object));
    case ObjectKind::riordan: return code_from_dumont(dumont_from_riordan(std::get<RiordanWord>(object)));
    case ObjectKind::dumont: return code_from_dumont(std::get<DumontWord>(object));
    case ObjectKind::matching:
      return code_from_dumont(dumont_from_riordan(riordan_from_matching(std::get<PerfectMatching>(object))));
    case ObjectKind::plane_tree: break;
  }
  throw InvalidObject("plane trees do not convert to other objects");
}

AnyObject from_code(const SPCode& code, ObjectKind to) {
  switch (to) {
    case ObjectKind::stirling: return decode(code);
    case ObjectKind::code: return code;
    case ObjectKind::tree: return code_to_tree(code);
    case ObjectKind::riordan: return riordan_from_dumont(dumont_from_code(code));
    case ObjectKind::dumont: return dumont_from_code(code);
    case ObjectKind::matching: return matching_from_riordan(riordan_from_dumont(dumont_from_code(code)));
    case ObjectKind::plane_tree: break;
  }
  throw InvalidObject("nothing converts to plane trees");
}

}  // namespace

AnyObject convert(const AnyObject& object, ObjectKind to) {
  if (kind_of(object) == to) return object;
  return from_code(to_code(object), to);
}

std::string dump_polynomial(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [exps, c] : p.terms()) terms.push_back({{"coef", c.get_str()}, {"exps", exps}});
  return json{{"vars", p.vars()}, {"terms", terms}}.dump();
}

Polynomial parse_polynomial_json(std::string_view json_text) {
  const json j = parse_json(json_text);
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms") || !j["vars"].is_array() ||
      !j["terms"].is_array()) {
    throw InvalidObject("polynomial JSON needs \"vars\" and \"terms\" arrays");
  }
  std::vector<std::string> vars;
  for (const auto& v : j["vars"]) {
    if (!v.is_string()) throw InvalidObject("polynomial symbol names must be strings");
    vars.push_back(v.get<std::string>());
  }
  Polynomial p(vars);
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coef") || !t["coef"].is_string() || !t.contains("exps")) {
      throw InvalidObject("polynomial term needs a string \"coef\" and \"exps\"");
    }
    const auto raw = int_array(t["exps"], "exponents");
    if (std::any_of(raw.begin(), raw.end(), [](int e) { return e < 0; })) {
      throw InvalidObject("exponents must be nonnegative");
    }
    Integer c;
    if (c.set_str(t["coef"].get<std::string>(), 10) != 0) throw InvalidObject("coefficient is not a decimal integer");
    p.add_term(Exponents(raw.begin(), raw.end()), c);
  }
  return p;
}

std::string dump_report(const VerificationReport& r) {
  json j{{"theorem", r.id},           {"description", r.description}, {"n_min", r.n_min},
         {"n_max", r.n_max},          {"passed", r.passed}};
  j["k"] = r.k ? json(*r.k) : json(nullptr);
  j["counterexample"] = r.passed ? json(nullptr) : json(r.counterexample);
  return j.dump();
}

std::string gamma3_csv(const GammaTable3& table) {
  std::ostringstream out;
  out << "i,j,k,gamma\n";
  for (const auto& [key, c] : table) out << key[0] << ',' << key[1] << ',' << key[2] << ',' << c.get_str() << '\n';
  return out.str();
}

std::string gammaK_csv(const GammaTableK& table, int n) {
  std::ostringstream out;
  for (int j = 1; j <= n; ++j) out << 'i' << j << ',';
  out << "gamma\n";
  for (const auto& [profile, c] : table) {
    for (int v : profile) out << v << ',';
    out << c.get_str() << '\n';
  }
  return out.str();
}

std::string dump_gamma3(const GammaTable3& table) {
  json entries = json::array();
  for (const auto& [key, c] : table) {
    entries.push_back({{"i", key[0]}, {"j", key[1]}, {"k", key[2]}, {"gamma", c.get_str()}});
  }
  return entries.dump();
}

std::string dump_gammaK(const GammaTableK& table) {
  json entries = json::array();
  for (const auto& [profile, c] : table) entries.push_back({{"profile", profile}, {"gamma", c.get_str()}});
  return entries.dump();
}

}  // namespace stirling
