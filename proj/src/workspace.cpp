#include "kad/workspace.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kad/error.hpp"
#include "kad/models/conway.hpp"
#include "kad/models/rel_model.hpp"

namespace kad {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw parse_error("workspace: " + what); }

const json& need(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) bad(where + " lacks \"" + key + "\"");
  return obj.at(key);
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where + " must be an array of names");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) bad(where + " must contain only strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::vector<std::vector<std::string>> table(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) bad(where + " must have " + std::to_string(n) + " rows");
  std::vector<std::vector<std::string>> out;
  for (const auto& row : j) {
    auto r = string_list(row, where);
    if (r.size() != n) bad(where + " rows must have " + std::to_string(n) + " entries");
    out.push_back(std::move(r));
  }
  return out;
}

FiniteSemiring parse_semiring(const json& j) {
  const auto carrier = string_list(need(j, "carrier", "semiring"), "semiring.carrier");
  const std::size_t n = carrier.size();
  if (n == 0) bad("semiring.carrier is empty");
  const auto add = table(need(j, "add", "semiring"), n, "semiring.add");
  const auto mul = table(need(j, "mul", "semiring"), n, "semiring.mul");
  const auto& zero = need(j, "zero", "semiring");
  const auto& one = need(j, "one", "semiring");
  if (!zero.is_string() || !one.is_string()) bad("semiring.zero and semiring.one must be names");
  std::optional<std::vector<std::string>> star, conv;
  if (j.contains("star") && !j.at("star").is_null()) {
    star = string_list(j.at("star"), "semiring.star");
    if (star->size() != n) bad("semiring.star must have one entry per element");
  }
  if (j.contains("conv") && !j.at("conv").is_null()) {
    conv = string_list(j.at("conv"), "semiring.conv");
    if (conv->size() != n) bad("semiring.conv must have one entry per element");
  }
  try {
    return FiniteSemiring::from_names(carrier, add, mul, zero.get<std::string>(),
                                      one.get<std::string>(), star, conv);
  } catch (const std::out_of_range& e) {
    bad(std::string("semiring: ") + e.what());
  } catch (const invalid_structure& e) {
    bad(std::string("semiring: ") + e.what());
  }
}

Element lookup(const FiniteSemiring& s, const std::string& name, const std::string& where) {
  try {
    return s.index_of(name);
  } catch (const std::out_of_range&) {
    bad(where + ": unknown element '" + name + "'");
  }
}

TestAlgebra parse_tests(const json& j, const FiniteSemiring& s) {
  std::vector<Element> members;
  for (const auto& m : string_list(need(j, "members", "tests"), "tests.members")) {
    members.push_back(lookup(s, m, "tests.members"));
  }
  if (!j.contains("compl")) {
    try {
      return TestAlgebra::from_members(s, members);
    } catch (const invalid_structure& e) {
      bad(std::string("tests: ") + e.what());
    }
  }
  const json& c = j.at("compl");
  if (!c.is_object()) bad("tests.compl must map names to names");
  std::map<Element, Element> compl_map;
  for (const auto& [k, v] : c.items()) {
    if (!v.is_string()) bad("tests.compl values must be names");
    compl_map[lookup(s, k, "tests.compl")] = lookup(s, v.get<std::string>(), "tests.compl");
  }
  for (Element m : members) {
    if (!compl_map.count(m)) bad("tests.compl lacks an entry for '" + s.name(m) + "'");
  }
  try {
    return TestAlgebra(s, members, compl_map);
  } catch (const error& e) {
    bad(std::string("tests: ") + e.what());
  }
}

Relation parse_relation(const json& j, const std::string& name) {
  const json& n = need(j, "n", "relation " + name);
  if (!n.is_number_integer() || n.get<int>() < 1) bad("relation " + name + ": n must be positive");
  const json& edges = need(j, "edges", "relation " + name);
  if (!edges.is_array()) bad("relation " + name + ": edges must be an array of pairs");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      bad("relation " + name + ": each edge is a pair of state numbers");
    }
    pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  try {
    return Relation::from_pairs(n.get<int>(), pairs);
  } catch (const std::out_of_range& e) {
    bad("relation " + name + ": " + e.what());
  }
}

Rule parse_rule(const std::string& r) {
  if (r == "axiom") return Rule::axiom;
  if (r == "composition") return Rule::composition;
  if (r == "conditional") return Rule::conditional;
  if (r == "while") return Rule::loop;
  if (r == "weakening") return Rule::weakening;
  bad("unknown proof rule '" + r + "'");
}

ProofTree proof_from_json(const json& j) {
  if (!j.is_object()) bad("a proof node must be an object");
  const json& rule = need(j, "rule", "proof node");
  const json& concl = need(j, "conclusion", "proof node");
  if (!rule.is_string() || !concl.is_string()) bad("proof rule and conclusion must be strings");
  ProofTree t;
  t.rule = parse_rule(rule.get<std::string>());
  t.conclusion = parse_triple(concl.get<std::string>());
  if (j.contains("label")) t.label = j.at("label").get<std::string>();
  if (j.contains("premises")) {
    if (!j.at("premises").is_array()) bad("proof premises must be an array");
    for (const auto& p : j.at("premises")) t.premises.push_back(proof_from_json(p));
  }
  return t;
}

json proof_to_json(const ProofTree& t) {
  json j{{"rule", to_string(t.rule)}, {"conclusion", t.conclusion.to_string()}};
  if (!t.label.empty()) j["label"] = t.label;
  if (!t.premises.empty()) {
    j["premises"] = json::array();
    for (const auto& p : t.premises) j["premises"].push_back(proof_to_json(p));
  }
  return j;
}

Workspace from_json(const json& j) {
  if (!j.is_object()) bad("top level must be an object");
  Workspace ws;
  if (j.contains("semiring")) ws.semiring = parse_semiring(j.at("semiring"));
  if (j.contains("tests")) {
    if (!ws.semiring) bad("\"tests\" needs a \"semiring\"");
    ws.tests = parse_tests(j.at("tests"), *ws.semiring);
  }
  if (j.contains("relations")) {
    if (!j.at("relations").is_object()) bad("relations must be an object");
    for (const auto& [name, r] : j.at("relations").items()) {
      ws.relations.emplace(name, parse_relation(r, name));
    }
    for (const auto& [name, r] : ws.relations) {
      if (r.size() != ws.relations.begin()->second.size()) {
        bad("relations must all have the same n");
      }
    }
  }
  auto string_map = [&](const char* key, std::map<std::string, std::string>& out) {
    if (!j.contains(key)) return;
    if (!j.at(key).is_object()) bad(std::string(key) + " must be an object");
    for (const auto& [k, v] : j.at(key).items()) {
      if (!v.is_string()) bad(std::string(key) + "." + k + " must be a string");
      out.emplace(k, v.get<std::string>());
    }
  };
  string_map("programs", ws.programs);
  string_map("env", ws.env);
  if (j.contains("proofs")) {
    if (!j.at("proofs").is_object()) bad("proofs must be an object");
    for (const auto& [name, p] : j.at("proofs").items()) ws.proofs.emplace(name, proof_from_json(p));
  }
  return ws;
}

json semiring_to_json(const FiniteSemiring& s) {
  const std::size_t n = s.size();
  auto rows = [&](auto op) {
    json t = json::array();
    for (Element a = 0; a < n; ++a) {
      json row = json::array();
      for (Element b = 0; b < n; ++b) row.push_back(s.name(op(a, b)));
      t.push_back(std::move(row));
    }
    return t;
  };
  json j;
  j["carrier"] = s.carrier();
  j["add"] = rows([&](Element a, Element b) { return s.add(a, b); });
  j["mul"] = rows([&](Element a, Element b) { return s.mul(a, b); });
  j["zero"] = s.name(s.zero());
  j["one"] = s.name(s.one());
  auto unary = [&](const std::optional<std::vector<Element>>& t) {
    json out = json::array();
    for (Element e : *t) out.push_back(s.name(e));
    return out;
  };
  if (s.star_table()) j["star"] = unary(s.star_table());
  if (s.conv_table()) j["conv"] = unary(s.conv_table());
  return j;
}

}  // namespace

int Workspace::states() const { return relations.empty() ? 0 : static_cast<int>(relations.begin()->second.size()); }

Workspace parse_workspace(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  try {
    return from_json(j);
  } catch (const json::exception& e) {
    bad(e.what());
  }
}

ProofTree parse_proof(const std::string& json_text) {
  try {
    return proof_from_json(json::parse(json_text));
  } catch (const json::exception& e) {
    bad(e.what());
  }
}

std::string serialize_workspace(const Workspace& ws, int indent) {
  json j = json::object();
  if (ws.semiring) j["semiring"] = semiring_to_json(*ws.semiring);
  if (ws.tests) {
    const FiniteSemiring& s = ws.tests->owner();
    json members = json::array();
    json compl_map = json::object();
    for (Element m : ws.tests->members()) {
      members.push_back(s.name(m));
      compl_map[s.name(m)] = s.name(ws.tests->compl_of(m));
    }
    j["tests"] = {{"members", members}, {"compl", compl_map}};
  }
  if (!ws.relations.empty()) {
    json rels = json::object();
    for (const auto& [name, r] : ws.relations) {
      json edges = json::array();
      for (const auto& [x, y] : r.pairs()) edges.push_back({x, y});
      rels[name] = {{"n", static_cast<int>(r.size())}, {"edges", edges}};
    }
    j["relations"] = rels;
  }
  if (!ws.programs.empty()) j["programs"] = ws.programs;
  if (!ws.env.empty()) j["env"] = ws.env;
  if (!ws.proofs.empty()) {
    json proofs = json::object();
    for (const auto& [name, p] : ws.proofs) proofs[name] = proof_to_json(p);
    j["proofs"] = proofs;
  }
  return j.dump(indent);
}

Workspace load_workspace(const std::string& source) {
  const std::string prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) return builtin_workspace(source.substr(prefix.size()));
  std::ifstream in(source);
  if (!in) bad("cannot read '" + source + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_workspace(text.str());
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out = conway_model_names();
    for (const char* r : {"rel1", "rel2", "rel3"}) out.push_back(r);
    return out;
  }();
  return names;
}

Workspace builtin_workspace(const std::string& name) {
  Workspace ws;
  for (const auto& c : conway_model_names()) {
    if (c == name) {
      ws.semiring = conway_model(name);
      ws.tests = TestAlgebra::discrete(*ws.semiring);
      return ws;
    }
  }
  if (name == "rel1" || name == "rel2" || name == "rel3") {
    const DomainStructure d = rel_domain(name.back() - '0');
    ws.semiring = d.owner();
    ws.tests = d.test_algebra();
    return ws;
  }
  bad("unknown builtin '" + name + "'");
}

DomainStructure builtin_domain(const std::string& name) {
  return workspace_domain(builtin_workspace(name));
}

DomainStructure workspace_domain(const Workspace& ws) {
  if (!ws.semiring) throw missing_capability("workspace has no semiring tables");
  if (!ws.tests) throw missing_capability("workspace declares no tests");
  return compute_predomain(*ws.tests);
}

}  // namespace kad
