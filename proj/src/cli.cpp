#include "kad/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "kad/domain_laws.hpp"
#include "kad/error.hpp"
#include "kad/hoare.hpp"
#include "kad/laws.hpp"
#include "kad/reach.hpp"
#include "kad/relational_domain.hpp"
#include "kad/models/rel_model.hpp"
#include "kad/termination.hpp"
#include "kad/workspace.hpp"

namespace kad::cli {

namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << '\n';
    return parse_failure;
  } catch (const evaluation_error& e) {
    err << "error: " << e.what() << '\n';
    return parse_failure;
  } catch (const missing_capability& e) {
    err << "missing capability: " << e.what() << '\n';
    return capability_missing;
  } catch (const invalid_structure& e) {
    err << "invalid structure: " << e.what() << '\n';
    return failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return failure;
  }
}

std::string state_set(const Relation& test) {
  std::string out = "{";
  bool first = true;
  for (int s : test.diagonal_states()) {
    if (!first) out += ",";
    out += std::to_string(s);
    first = false;
  }
  return out + "}";
}

// Reports in `group`, returning the number of failures.
int print_reports(std::ostream& out, const std::string& group, const std::vector<LawReport>& reports) {
  int failed = 0;
  out << "[" << group << "]\n";
  for (const auto& r : reports) {
    out << "  " << r << '\n';
    if (r.fails()) ++failed;
  }
  return failed;
}

Workspace load_source(const std::string& source) {
  const std::string prefix = "random:";
  if (source.rfind(prefix, 0) != 0) return load_workspace(source);
  const std::string rest = source.substr(prefix.size());
  const auto colon = rest.find(':');
  int n = 0;
  std::uint64_t seed = 1;
  try {
    n = std::stoi(rest.substr(0, colon));
    if (colon != std::string::npos) seed = std::stoull(rest.substr(colon + 1));
  } catch (const std::exception&) {
    throw parse_error("random source must look like random:N or random:N:SEED");
  }
  if (n < 1) throw parse_error("random source needs at least one state");
  std::mt19937_64 rng(seed);
  Workspace ws;
  ws.relations.emplace("random", random_relation(n, std::min(1.0, 1.5 / n), rng));
  return ws;
}

const Relation& pick_relation(const Workspace& ws, const std::string& name) {
  if (name.empty()) {
    if (ws.relations.size() == 1) return ws.relations.begin()->second;
    throw parse_error("--relation is required when the workspace has " +
                      std::to_string(ws.relations.size()) + " relations");
  }
  auto it = ws.relations.find(name);
  if (it == ws.relations.end()) throw evaluation_error("unknown relation '" + name + "'");
  return it->second;
}

Relation parse_targets(const std::string& text, int n) {
  std::vector<int> states;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = item.find_last_not_of(" \t");
    const std::string t = item.substr(b, e - b + 1);
    std::size_t used = 0;
    int s = 0;
    try {
      s = std::stoi(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size() || s < 1 || s > n) {
      throw parse_error("bad target '" + t + "' (states are 1.." + std::to_string(n) + ")");
    }
    states.push_back(s);
  }
  return Relation::test(n, states);
}

bool has_cycle(const Relation& r) {
  const auto n = r.size();
  std::vector<int> colour(n, 0);
  std::function<bool(Eigen::Index)> visit = [&](Eigen::Index v) {
    colour[v] = 1;
    for (Eigen::Index w = 0; w < n; ++w) {
      if (!r(v, w)) continue;
      if (colour[w] == 1) return true;
      if (colour[w] == 0 && visit(w)) return true;
    }
    colour[v] = 2;
    return false;
  };
  for (Eigen::Index v = 0; v < n; ++v) {
    if (colour[v] == 0 && visit(v)) return true;
  }
  return false;
}

template <typename D, typename V = typename D::value_type>
int run_hoare(const D& d, const HoareEnv<V>& env, const Workspace& ws, const std::string& triple,
              const std::string& proof, const std::function<std::string(const V&)>& show,
              std::ostream& out) {
  if (!triple.empty()) {
    auto it = ws.programs.find(triple);
    if (it == ws.programs.end()) throw evaluation_error("unknown program '" + triple + "'");
    const HoareTriple t = parse_triple(it->second);
    const auto v = check_triple(t, env, d);
    out << t.to_string() << ": " << (v.holds ? "holds" : "FAILS");
    if (v.witness) out << " witness " << show(*v.witness);
    out << '\n';
    return v.holds ? ok : failure;
  }
  auto it = ws.proofs.find(proof);
  if (it == ws.proofs.end()) throw evaluation_error("unknown proof '" + proof + "'");
  const ProofCheck c = validate_proof(it->second, env, d);
  if (!c.valid) {
    out << "proof " << proof << " invalid at " << c.node << ": " << c.reason << '\n';
    return failure;
  }
  const auto v = check_triple(it->second.conclusion, env, d);
  out << "proof " << proof << " valid; conclusion " << it->second.conclusion.to_string() << ' '
      << (v.holds ? "holds" : "FAILS") << '\n';
  return v.holds ? ok : failure;
}

}  // namespace

int cmd_check(const std::string& source, const std::string& laws, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    static const std::vector<std::string> groups{"isemiring", "kleene", "tests", "domain",
                                                 "converse", "all"};
    if (std::find(groups.begin(), groups.end(), laws) == groups.end()) {
      throw parse_error("unknown law group '" + laws + "'");
    }
    const Workspace ws = load_source(source);
    if (!ws.semiring) throw missing_capability("workspace has no semiring tables");
    const FiniteSemiring& s = *ws.semiring;
    const bool all = laws == "all";
    int failed = 0;
    auto skip = [&](const std::string& group, const std::string& why) {
      if (!all) throw missing_capability(why);
      out << "[" << group << "]\n  n/a: " << why << '\n';
    };

    if (all || laws == "isemiring") {
      failed += print_reports(out, "isemiring", check_isemiring(s));
      failed += print_reports(out, "natural-order", check_natural_order(s));
    }
    if (all || laws == "kleene") {
      if (s.has_star()) failed += print_reports(out, "kleene", check_kleene(s));
      else skip("kleene", "no star table");
    }
    if (all || laws == "tests") {
      if (ws.tests) {
        failed += print_reports(out, "subidentities", check_subidentities(s));
        failed += print_reports(out, "tests", check_test_algebra(*ws.tests));
      } else {
        skip("tests", "no tests declared");
      }
    }
    if (all || laws == "domain") {
      if (ws.tests) {
        const DomainStructure d = compute_predomain(*ws.tests);
        failed += print_reports(out, "domain-axioms", check_domain_axioms(d));
        failed += print_reports(out, "predomain", check_predomain_calculus(d));
        failed += print_reports(out, "precodomain", check_precodomain_calculus(d));
        failed += print_reports(out, "image", check_image_laws(d));
        failed += print_reports(out, "locality", check_locality(d));
        if (d.has_star()) {
          failed += print_reports(out, "star-preimage", check_star_preimage_laws(d));
          failed += print_reports(out, "termination", check_termination_laws(d));
        }
      } else {
        skip("domain", "no tests declared");
      }
    }
    if (all || laws == "converse") {
      if (s.has_conv()) {
        failed += print_reports(out, "converse", check_converse(s));
        if (ws.tests) {
          failed += print_reports(out, "converse-duality",
                                  converse_duality_check(compute_predomain(*ws.tests)));
        }
      } else {
        skip("converse", "no converse table");
      }
    }
    out << (failed == 0 ? "all laws hold" : std::to_string(failed) + " law(s) fail") << '\n';
    return failed == 0 ? ok : failure;
  });
}

int cmd_reach(const std::string& source, const std::string& relation, const std::string& targets,
              const std::string& algo, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (algo != "naive" && algo != "efficient" && algo != "both") {
      throw parse_error("--algo must be naive, efficient or both");
    }
    const Workspace ws = load_source(source);
    const Relation& r = pick_relation(ws, relation);
    const int n = static_cast<int>(r.size());
    const RelationalDomain d(n);
    const Relation p = parse_targets(targets, n);
    std::optional<Relation> naive, efficient;
    if (algo != "efficient") {
      const auto res = reach_naive(d, r, p);
      out << "naive: " << state_set(res.result) << " iterations=" << res.iterations
          << " preimage-evaluations=" << res.preimage_evaluations << '\n';
      naive = res.result;
    }
    if (algo != "naive") {
      const auto res = reach_efficient(d, r, p);
      out << "efficient: " << state_set(res.result) << " iterations=" << res.iterations
          << " preimage-evaluations=" << res.preimage_evaluations << '\n';
      efficient = res.result;
    }
    if (naive && efficient) {
      if (!(*naive == *efficient)) {
        out << "DISAGREE\n";
        return failure;
      }
      out << "agree\n";
    }
    return ok;
  });
}

int cmd_hoare(const std::string& source, const std::string& triple, const std::string& proof,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (triple.empty() == proof.empty()) throw parse_error("give exactly one of --triple and --proof");
    const Workspace ws = load_source(source);
    if (!ws.relations.empty()) {
      const RelationalDomain d(ws.states());
      HoareEnv<Relation> env;
      auto bind = [&](const std::string& name, const Relation& r) {
        env.actions[name] = r;
        if (d.is_test(r)) env.tests[name] = r;
      };
      for (const auto& [name, r] : ws.relations) bind(name, r);
      for (const auto& [name, target] : ws.env) bind(name, pick_relation(ws, target));
      std::function<std::string(const Relation&)> show = [](const Relation& t) {
        return "state " + state_set(t);
      };
      return run_hoare(d, env, ws, triple, proof, show, out);
    }
    const DomainStructure d = workspace_domain(ws);
    HoareEnv<Element> env;
    for (const auto& [name, target] : ws.env) {
      Element e = 0;
      try {
        e = d.owner().index_of(target);
      } catch (const std::out_of_range&) {
        throw evaluation_error("env entry '" + name + "' names unknown element '" + target + "'");
      }
      env.actions[name] = e;
      if (d.is_test(e)) env.tests[name] = e;
    }
    std::function<std::string(const Element&)> show = [&](const Element& e) { return d.format(e); };
    return run_hoare(d, env, ws, triple, proof, show, out);
  });
}

int cmd_termination(const std::string& source, const std::string& relation, std::ostream& out,
                    std::ostream& err) {
  return guarded(err, [&] {
    const Workspace ws = load_source(source);
    const Relation& r = pick_relation(ws, relation);
    const RelationalDomain d(static_cast<int>(r.size()));
    const auto rep = termination_report(d, r);
    auto line = [&](const char* name, const Verdict<Relation>& v) {
      out << name << '=' << (v.value ? "true" : "false");
      if (v.witness) out << " witness " << state_set(*v.witness);
      if (!v.exhaustive) out << " (sampled)";
      out << '\n';
    };
    out << "relation " << r.to_string() << " on " << r.size() << " states\n";
    line("noetherian", rep.noetherian);
    line("well-founded", rep.well_founded);
    line("loebian", rep.loebian);
    const bool acyclic = !has_cycle(r);
    if (acyclic != rep.noetherian.value) {
      out << "oracle-discrepancy: cycle detection says " << (acyclic ? "acyclic" : "cyclic") << '\n';
      return failure;
    }
    out << "oracle-agree\n";
    return ok;
  });
}

}  // namespace kad::cli
