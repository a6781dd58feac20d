#pragma once

// Random while programs over relations, proofs for them built backwards from
// weakest preconditions, and a state-by-state interpreter used as the oracle
// for triple validity.

#include <string>

#include "kad/hoare.hpp"
#include "kad/relational_domain.hpp"
#include "support.hpp"

namespace kad::testing {

/// Final states of running `prog` from state s (1-based).
inline StateSet run(const Program& prog, const HoareEnv<Relation>& env, int s);

inline bool holds_in(const TestExpr& t, const HoareEnv<Relation>& env, int s) {
  switch (t.kind()) {
    case TestExpr::Kind::atom: return env.tests.at(t.name())(s - 1, s - 1);
    case TestExpr::Kind::truth: return true;
    case TestExpr::Kind::falsity: return false;
    case TestExpr::Kind::conj: return holds_in(t.lhs(), env, s) && holds_in(t.rhs(), env, s);
    case TestExpr::Kind::disj: return holds_in(t.lhs(), env, s) || holds_in(t.rhs(), env, s);
    case TestExpr::Kind::neg: return !holds_in(t.arg(), env, s);
  }
  return false;
}

inline StateSet run_all(const Program& prog, const HoareEnv<Relation>& env, const StateSet& from) {
  StateSet out;
  for (int s : from) {
    const auto r = run(prog, env, s);
    out.insert(r.begin(), r.end());
  }
  return out;
}

inline StateSet run(const Program& prog, const HoareEnv<Relation>& env, int s) {
  switch (prog.kind()) {
    case Program::Kind::prim: {
      StateSet out;
      const auto adj = successors(env.actions.at(prog.name()));
      for (int t : adj[s - 1]) out.insert(t + 1);
      return out;
    }
    case Program::Kind::skip: return {s};
    case Program::Kind::seq: return run_all(prog.second(), env, run(prog.first(), env, s));
    case Program::Kind::cond:
      return holds_in(prog.guard(), env, s) ? run(prog.first(), env, s) : run(prog.second(), env, s);
    case Program::Kind::loop: {
      // Explore the states where the guard holds; collect those where it fails.
      StateSet seen{s}, frontier{s}, out;
      while (!frontier.empty()) {
        StateSet next;
        for (int v : frontier) {
          if (!holds_in(prog.guard(), env, v)) {
            out.insert(v);
            continue;
          }
          for (int w : run(prog.body(), env, v)) {
            if (seen.insert(w).second) next.insert(w);
          }
        }
        frontier = std::move(next);
      }
      return out;
    }
  }
  return {};
}

/// {pre} prog {post} by running every pre-state.
inline bool triple_oracle(const HoareTriple& t, const HoareEnv<Relation>& env, int n) {
  for (int s = 1; s <= n; ++s) {
    if (!holds_in(t.pre, env, s)) continue;
    for (int f : run(t.prog, env, s)) {
      if (!holds_in(t.post, env, f)) return false;
    }
  }
  return true;
}

class ProofGenerator {
 public:
  ProofGenerator(const RelationalDomain& d, HoareEnv<Relation>& env, std::mt19937_64& rng)
      : d_(d), env_(env), rng_(rng) {}

  Program random_program(int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 4);
    switch (pick(rng_)) {
      case 0: return Program::prim(coin() ? "a" : "b");
      case 1: return coin() ? Program::skip() : Program::prim("a");
      case 2: return Program::seq(random_program(depth - 1), random_program(depth - 1));
      case 3: return Program::cond(random_guard(), random_program(depth - 1), random_program(depth - 1));
      default: return Program::loop(random_guard(), random_program(depth - 1));
    }
  }

  /// A valid derivation of {wlp(prog, post)} prog {post}.
  ProofTree prove(const Program& prog, const TestExpr& post) {
    const Relation q = eval_test(post, env_, d_);
    switch (prog.kind()) {
      case Program::Kind::prim:
      case Program::Kind::skip: {
        const auto pre = bind(wlp(d_, denote(prog, env_, d_), q));
        return leaf({pre, prog, post});
      }
      case Program::Kind::seq: {
        ProofTree right = prove(prog.second(), post);
        ProofTree left = prove(prog.first(), right.conclusion.pre);
        return node(Rule::composition, {left.conclusion.pre, prog, post}, {left, right});
      }
      case Program::Kind::cond: {
        const TestExpr& g = prog.guard();
        ProofTree l = prove(prog.first(), post);
        ProofTree r = prove(prog.second(), post);
        const Relation gv = eval_test(g, env_, d_);
        const auto pre = bind(d_.add(d_.mul(gv, eval_test(l.conclusion.pre, env_, d_)),
                                     d_.mul(d_.compl_of(gv), eval_test(r.conclusion.pre, env_, d_))));
        ProofTree lw = node(Rule::weakening, {g && pre, prog.first(), post}, {l});
        ProofTree rw = node(Rule::weakening, {!g && pre, prog.second(), post}, {r});
        return node(Rule::conditional, {pre, prog, post}, {lw, rw});
      }
      case Program::Kind::loop: {
        const TestExpr& g = prog.guard();
        const auto inv = bind(wlp(d_, denote(prog, env_, d_), q));
        ProofTree body = prove(prog.body(), inv);
        ProofTree bw = node(Rule::weakening, {g && inv, prog.body(), inv}, {body});
        ProofTree loop = node(Rule::loop, {inv, prog, !g && inv}, {bw});
        return node(Rule::weakening, {inv, prog, post}, {loop});
      }
    }
    throw std::logic_error("unreachable");
  }

  /// Wraps a proof in a weakening to a random stronger pre and weaker post.
  ProofTree weaken(ProofTree t) {
    const Relation pre = eval_test(t.conclusion.pre, env_, d_);
    const Relation post = eval_test(t.conclusion.post, env_, d_);
    const auto p2 = bind(d_.mul(pre, test_of(d_.states(), random_states(d_.states(), rng_))));
    const auto q2 = bind(d_.add(post, test_of(d_.states(), random_states(d_.states(), rng_))));
    HoareTriple c{p2, t.conclusion.prog, q2};
    return node(Rule::weakening, c, {std::move(t)});
  }

  TestExpr random_guard() {
    std::uniform_int_distribution<int> pick(0, 3);
    switch (pick(rng_)) {
      case 0: return TestExpr::atom("p");
      case 1: return TestExpr::atom("q");
      case 2: return !TestExpr::atom("p");
      default: return TestExpr::atom("p") && !TestExpr::atom("q");
    }
  }

  /// A fresh atomic test name bound to `value`.
  TestExpr bind(const Relation& value) {
    const std::string name = "t" + std::to_string(fresh_++);
    env_.tests[name] = value;
    return TestExpr::atom(name);
  }

 private:
  bool coin() { return std::bernoulli_distribution(0.5)(rng_); }

  static ProofTree leaf(HoareTriple c) { return ProofTree{Rule::axiom, std::move(c), {}, {}}; }
  static ProofTree node(Rule r, HoareTriple c, std::vector<ProofTree> ps) {
    return ProofTree{r, std::move(c), std::move(ps), {}};
  }

  const RelationalDomain& d_;
  HoareEnv<Relation>& env_;
  std::mt19937_64& rng_;
  int fresh_ = 0;
};

/// Actions a, b and tests p, q drawn at random on n states.
inline HoareEnv<Relation> random_env(int n, std::mt19937_64& rng) {
  HoareEnv<Relation> env;
  env.actions["a"] = random_digraph(n, rng);
  env.actions["b"] = random_digraph(n, rng);
  env.tests["p"] = test_of(n, random_states(n, rng));
  env.tests["q"] = test_of(n, random_states(n, rng));
  return env;
}

}  // namespace kad::testing
