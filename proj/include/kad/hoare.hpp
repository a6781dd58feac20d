#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kad/error.hpp"
#include "kad/law_report.hpp"
#include "kad/universe.hpp"

namespace kad {

/// Boolean expression over named atomic tests.
class TestExpr {
 public:
  enum class Kind { atom, truth, falsity, conj, disj, neg };

  /// The constant true.
  TestExpr();

  static TestExpr atom(std::string name);
  static TestExpr truth();
  static TestExpr falsity();
  friend TestExpr operator&&(const TestExpr& l, const TestExpr& r);
  friend TestExpr operator||(const TestExpr& l, const TestExpr& r);
  friend TestExpr operator!(const TestExpr& t);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const TestExpr& lhs() const { return node_->args.at(0); }
  const TestExpr& rhs() const { return node_->args.at(1); }
  const TestExpr& arg() const { return node_->args.at(0); }

  std::string to_string() const;
  friend bool operator==(const TestExpr& a, const TestExpr& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<TestExpr> args;
  };
  explicit TestExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static TestExpr make(Kind k, std::vector<TestExpr> args);
  std::shared_ptr<const Node> node_;
};

TestExpr operator&&(const TestExpr& l, const TestExpr& r);
TestExpr operator||(const TestExpr& l, const TestExpr& r);
TestExpr operator!(const TestExpr& t);

/// While programs over named primitive actions:
///   a ; b = ab,  if p then a else b = pa + p'b,  while p do a = (pa)* p'.
class Program {
 public:
  enum class Kind { prim, skip, seq, cond, loop };

  /// skip.
  Program();

  static Program prim(std::string name);
  static Program skip();
  static Program seq(Program a, Program b);
  static Program cond(TestExpr p, Program a, Program b);
  static Program loop(TestExpr p, Program a);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const TestExpr& guard() const { return *node_->guard; }
  const Program& first() const { return node_->args.at(0); }
  const Program& second() const { return node_->args.at(1); }
  const Program& body() const { return node_->args.at(0); }

  std::string to_string() const;
  /// Structural equality.
  friend bool operator==(const Program& a, const Program& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::optional<TestExpr> guard;
    std::vector<Program> args;
  };
  explicit Program(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// {pre} prog {post}
struct HoareTriple {
  TestExpr pre;
  Program prog;
  TestExpr post;

  std::string to_string() const;
};

enum class Rule { axiom, composition, conditional, loop, weakening };

std::string to_string(Rule r);

/// A derivation. Premises are ordered as in the rules: Composition
/// {p}a{q}, {q}b{r}; Conditional {p&q}a{r}, {!p&q}b{r}; While {p&q}a{q};
/// Weakening {p}a{q}. Axiom leaves are checked semantically.
struct ProofTree {
  Rule rule = Rule::axiom;
  HoareTriple conclusion;
  std::vector<ProofTree> premises;
  std::string label;
};

/// Parsing. Programs: `skip`, identifiers, `a ; b`, `if T then S else S`,
/// `while T do S`, parentheses. Tests: `true`, `false`, identifiers, `!`,
/// `&`, `|`, parentheses. Triples: `{T} S {T}`. Assignments are rejected.
/// All throw parse_error.
TestExpr parse_test(const std::string& text);
Program parse_program(const std::string& text);
HoareTriple parse_triple(const std::string& text);

/// Names bound to model values: primitive actions and atomic tests.
template <typename V>
struct HoareEnv {
  std::map<std::string, V> actions;
  std::map<std::string, V> tests;
};

/// Throws evaluation_error for unbound names or names bound to non-tests.
template <typename D, typename V = typename D::value_type>
V eval_test(const TestExpr& t, const HoareEnv<V>& env, const D& d) {
  switch (t.kind()) {
    case TestExpr::Kind::atom: {
      auto it = env.tests.find(t.name());
      if (it == env.tests.end()) throw evaluation_error("unresolved test '" + t.name() + "'");
      if (!d.is_test(it->second)) {
        throw evaluation_error("'" + t.name() + "' is not bound to a test");
      }
      return it->second;
    }
    case TestExpr::Kind::truth: return d.one();
    case TestExpr::Kind::falsity: return d.zero();
    case TestExpr::Kind::conj: return d.mul(eval_test(t.lhs(), env, d), eval_test(t.rhs(), env, d));
    case TestExpr::Kind::disj: return d.add(eval_test(t.lhs(), env, d), eval_test(t.rhs(), env, d));
    case TestExpr::Kind::neg: return d.compl_of(eval_test(t.arg(), env, d));
  }
  throw evaluation_error("unknown test node");
}

/// Throws evaluation_error for unresolved actions, missing_capability when a
/// loop needs an absent star.
template <typename D, typename V = typename D::value_type>
V denote(const Program& prog, const HoareEnv<V>& env, const D& d) {
  switch (prog.kind()) {
    case Program::Kind::prim: {
      auto it = env.actions.find(prog.name());
      if (it == env.actions.end()) {
        throw evaluation_error("unresolved action '" + prog.name() + "'");
      }
      return it->second;
    }
    case Program::Kind::skip: return d.one();
    case Program::Kind::seq: return d.mul(denote(prog.first(), env, d), denote(prog.second(), env, d));
    case Program::Kind::cond: {
      const V p = eval_test(prog.guard(), env, d);
      return d.add(d.mul(p, denote(prog.first(), env, d)),
                   d.mul(d.compl_of(p), denote(prog.second(), env, d)));
    }
    case Program::Kind::loop: {
      const V p = eval_test(prog.guard(), env, d);
      return d.mul(d.star(d.mul(p, denote(prog.body(), env, d))), d.compl_of(p));
    }
  }
  throw evaluation_error("unknown program node");
}

template <typename V>
struct TripleVerdict {
  bool holds = true;
  /// An atom of (pre : a) post' when the triple fails.
  std::optional<V> witness;
};

/// {p} a {q} holds iff p : a <= q.
template <typename D, typename V = typename D::value_type>
TripleVerdict<V> check_triple(const HoareTriple& t, const HoareEnv<V>& env, const D& d) {
  const V p = eval_test(t.pre, env, d);
  const V q = eval_test(t.post, env, d);
  const V out = d.image(p, denote(t.prog, env, d));
  TripleVerdict<V> v;
  if (d.leq(out, q)) return v;
  v.holds = false;
  const V bad = d.mul(out, d.compl_of(q));
  for (const auto& atom : d.atoms()) {
    if (d.leq(atom, bad)) {
      v.witness = atom;
      break;
    }
  }
  return v;
}

struct ProofCheck {
  bool valid = true;
  /// Path to the first failing node, e.g. "root/1/0", and why it fails.
  std::string node;
  std::string reason;
};

namespace detail {

template <typename D, typename V = typename D::value_type>
ProofCheck validate_node(const ProofTree& t, const HoareEnv<V>& env, const D& d,
                         const std::string& path) {
  auto fail = [&](std::string why) {
    std::string where = path;
    if (!t.label.empty()) where += " (" + t.label + ")";
    return ProofCheck{false, where, std::move(why)};
  };
  auto test_eq = [&](const TestExpr& x, const TestExpr& y) {
    return eval_test(x, env, d) == eval_test(y, env, d);
  };
  auto arity = [&](std::size_t n) {
    if (t.premises.size() != n) {
      throw invalid_structure(to_string(t.rule) + " at " + path + " needs " + std::to_string(n) +
                              " premises, got " + std::to_string(t.premises.size()));
    }
  };
  const HoareTriple& c = t.conclusion;
  switch (t.rule) {
    case Rule::axiom: {
      arity(0);
      if (!check_triple(c, env, d).holds) return fail("axiom triple does not hold");
      return {};
    }
    case Rule::composition: {
      arity(2);
      const HoareTriple& l = t.premises[0].conclusion;
      const HoareTriple& r = t.premises[1].conclusion;
      if (c.prog.kind() != Program::Kind::seq) return fail("conclusion is not a sequence");
      if (!(l.prog == c.prog.first()) || !(r.prog == c.prog.second())) {
        return fail("premise programs do not match the sequence");
      }
      if (!test_eq(l.pre, c.pre)) return fail("precondition differs from first premise");
      if (!test_eq(l.post, r.pre)) return fail("intermediate assertions differ");
      if (!test_eq(r.post, c.post)) return fail("postcondition differs from second premise");
      break;
    }
    case Rule::conditional: {
      arity(2);
      const HoareTriple& l = t.premises[0].conclusion;
      const HoareTriple& r = t.premises[1].conclusion;
      if (c.prog.kind() != Program::Kind::cond) return fail("conclusion is not a conditional");
      if (!(l.prog == c.prog.first()) || !(r.prog == c.prog.second())) {
        return fail("premise programs do not match the branches");
      }
      const TestExpr& p = c.prog.guard();
      if (!test_eq(l.pre, p && c.pre)) return fail("then-premise precondition is not guard & pre");
      if (!test_eq(r.pre, !p && c.pre)) return fail("else-premise precondition is not !guard & pre");
      if (!test_eq(l.post, c.post) || !test_eq(r.post, c.post)) {
        return fail("branch postconditions differ from the conclusion");
      }
      break;
    }
    case Rule::loop: {
      arity(1);
      const HoareTriple& b = t.premises[0].conclusion;
      if (c.prog.kind() != Program::Kind::loop) return fail("conclusion is not a loop");
      if (!(b.prog == c.prog.body())) return fail("premise program is not the loop body");
      const TestExpr& p = c.prog.guard();
      if (!test_eq(b.pre, p && c.pre)) return fail("body precondition is not guard & invariant");
      if (!test_eq(b.post, c.pre)) return fail("body postcondition is not the invariant");
      if (!test_eq(c.post, !p && c.pre)) return fail("postcondition is not !guard & invariant");
      break;
    }
    case Rule::weakening: {
      arity(1);
      const HoareTriple& b = t.premises[0].conclusion;
      if (!(b.prog == c.prog)) return fail("premise program differs");
      if (!d.leq(eval_test(c.pre, env, d), eval_test(b.pre, env, d))) {
        return fail("precondition is not stronger than the premise's");
      }
      if (!d.leq(eval_test(b.post, env, d), eval_test(c.post, env, d))) {
        return fail("postcondition is not weaker than the premise's");
      }
      break;
    }
  }
  for (std::size_t i = 0; i < t.premises.size(); ++i) {
    auto sub = validate_node(t.premises[i], env, d, path + "/" + std::to_string(i));
    if (!sub.valid) return sub;
  }
  return {};
}

}  // namespace detail

/// Checks every rule application; returns the first failing node.
/// Throws invalid_structure on wrong premise counts.
template <typename D, typename V = typename D::value_type>
ProofCheck validate_proof(const ProofTree& t, const HoareEnv<V>& env, const D& d) {
  return detail::validate_node(t, env, d, "root");
}

/// Weakest liberal precondition (a : p')': the states all of whose
/// a-successors satisfy p.
template <typename D, typename V = typename D::value_type>
V wlp(const D& d, const V& a, const V& p) {
  return d.compl_of(d.preimage(a, d.compl_of(p)));
}

/// The proof rules as implications between image inequalities, the
/// annihilator form of triples, and the Galois property of wlp.
template <typename D>
std::vector<LawReport> hoare_rule_laws(const D& d, const CheckBudget& budget = {}) {
  using V = typename D::value_type;
  const Universe<D> u(d);
  const auto a = u.element("a"), b = u.element("b");
  const auto p = u.test("p"), q = u.test("q"), r = u.test("r"), p1 = u.test("p1"),
             q1 = u.test("q1");
  const auto fmt = u.formatter();
  auto le = [&](const V& x, const V& y) { return d.leq(x, y); };
  auto img = [&](const V& t, const V& x) { return d.image(t, x); };
  auto cp = [&](const V& t) { return d.compl_of(t); };

  std::vector<LawReport> out;
  out.push_back(forall<V>("triple-annihilator-form", budget, fmt,
      [&](const V& x, const V& s, const V& t) {
        return le(img(s, x), t) == le(d.mul(d.mul(s, x), cp(t)), d.zero());
      }, a, p, q));
  out.push_back(forall<V>("composition-rule", budget, fmt,
      [&](const V& x, const V& y, const V& s, const V& t, const V& w) {
        return !(le(img(s, x), t) && le(img(t, y), w)) || le(img(s, d.mul(x, y)), w);
      }, a, b, p, q, r));
  out.push_back(forall<V>("conditional-rule", budget, fmt,
      [&](const V& x, const V& y, const V& s, const V& t, const V& w) {
        const bool prem = le(img(d.mul(s, t), x), w) && le(img(d.mul(cp(s), t), y), w);
        const V prog = d.add(d.mul(s, x), d.mul(cp(s), y));
        return !prem || le(img(t, prog), w);
      }, a, b, p, q, r));
  out.push_back(forall<V>("weakening-rule", budget, fmt,
      [&](const V& x, const V& s0, const V& s, const V& t, const V& t1) {
        return !(le(s0, s) && le(img(s, x), t) && le(t, t1)) || le(img(s0, x), t1);
      }, a, p1, p, q, q1));
  out.push_back(forall<V>("wlp-galois", budget, fmt,
      [&](const V& x, const V& s, const V& t) { return le(t, wlp(d, x, s)) == le(img(t, x), s); },
      a, p, q));
  if (d.has_star()) {
    out.push_back(forall<V>("while-rule", budget, fmt,
        [&](const V& x, const V& s, const V& t) {
          const V prog = d.mul(d.star(d.mul(s, x)), cp(s));
          return !le(img(d.mul(s, t), x), t) || le(img(t, prog), d.mul(cp(s), t));
        }, a, p, q));
  } else {
    out.push_back(not_applicable("while-rule", "no star"));
  }
  return out;
}

}  // namespace kad
