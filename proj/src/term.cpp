#include "kad/term.hpp"

#include "kad/error.hpp"

namespace kad {

Term Term::make(Kind k, std::vector<Term> args) {
  return Term(std::make_shared<const Node>(Node{k, {}, Sort::element, std::move(args)}));
}

Term Term::var(std::string name, Sort sort) {
  return Term(std::make_shared<const Node>(Node{Kind::var, std::move(name), sort, {}}));
}

Term Term::zero() { return make(Kind::zero, {}); }
Term Term::one() { return make(Kind::one, {}); }

Term operator+(const Term& l, const Term& r) { return Term::make(Term::Kind::add, {l, r}); }
Term operator*(const Term& l, const Term& r) { return Term::make(Term::Kind::mul, {l, r}); }
Term star(const Term& t) { return Term::make(Term::Kind::star, {t}); }
Term conv(const Term& t) { return Term::make(Term::Kind::conv, {t}); }
Term delta(const Term& t) { return Term::make(Term::Kind::delta, {t}); }
Term rho(const Term& t) { return Term::make(Term::Kind::rho, {t}); }
Term compl_(const Term& t) { return Term::make(Term::Kind::compl_, {t}); }

std::string Term::to_string() const {
  switch (kind()) {
    case Kind::var: return name();
    case Kind::zero: return "0";
    case Kind::one: return "1";
    case Kind::add: return "(" + lhs().to_string() + " + " + rhs().to_string() + ")";
    case Kind::mul: return "(" + lhs().to_string() + " " + rhs().to_string() + ")";
    case Kind::star: return arg().to_string() + "*";
    case Kind::conv: return arg().to_string() + "°";
    case Kind::delta: return "d(" + arg().to_string() + ")";
    case Kind::rho: return "r(" + arg().to_string() + ")";
    case Kind::compl_: return arg().to_string() + "'";
  }
  return "?";
}

Element eval_term(const Term& t, const Env& env, const EvalContext& ctx) {
  const FiniteSemiring& s = *ctx.semiring;
  const TestAlgebra* tests = ctx.tests ? ctx.tests : (ctx.domain ? &ctx.domain->test_algebra() : nullptr);
  auto ev = [&](const Term& x) { return eval_term(x, env, ctx); };
  switch (t.kind()) {
    case Term::Kind::var: {
      auto it = env.find(t.name());
      if (it == env.end()) throw evaluation_error("unbound variable '" + t.name() + "'");
      if (it->second >= s.size()) throw evaluation_error("variable '" + t.name() + "' out of range");
      return it->second;
    }
    case Term::Kind::zero: return s.zero();
    case Term::Kind::one: return s.one();
    case Term::Kind::add: return s.add(ev(t.lhs()), ev(t.rhs()));
    case Term::Kind::mul: return s.mul(ev(t.lhs()), ev(t.rhs()));
    case Term::Kind::star: return s.star(ev(t.arg()));
    case Term::Kind::conv: return s.conv(ev(t.arg()));
    case Term::Kind::delta:
      if (!ctx.domain) throw evaluation_error("domain requested without a domain structure");
      return ctx.domain->delta(ev(t.arg()));
    case Term::Kind::rho:
      if (!ctx.domain) throw evaluation_error("codomain requested without a domain structure");
      return ctx.domain->rho(ev(t.arg()));
    case Term::Kind::compl_:
      if (!tests) throw evaluation_error("complement requested without a test algebra");
      return tests->compl_of(ev(t.arg()));
  }
  throw evaluation_error("unknown term node");
}

namespace {

void collect_vars(const Term& t, std::map<std::string, Term::Sort>& out) {
  if (t.kind() == Term::Kind::var) {
    auto [it, fresh] = out.emplace(t.name(), t.sort());
    if (!fresh && it->second != t.sort()) {
      throw evaluation_error("variable '" + t.name() + "' used with two sorts");
    }
    return;
  }
  switch (t.kind()) {
    case Term::Kind::add:
    case Term::Kind::mul:
      collect_vars(t.lhs(), out);
      collect_vars(t.rhs(), out);
      break;
    case Term::Kind::star:
    case Term::Kind::conv:
    case Term::Kind::delta:
    case Term::Kind::rho:
    case Term::Kind::compl_:
      collect_vars(t.arg(), out);
      break;
    default:
      break;
  }
}

}  // namespace

LawReport check_equation(const std::string& law, const Term& lhs, Comparison rel,
                         const Term& rhs, const EvalContext& ctx) {
  const FiniteSemiring& s = *ctx.semiring;
  const TestAlgebra* tests = ctx.tests ? ctx.tests : (ctx.domain ? &ctx.domain->test_algebra() : nullptr);
  std::map<std::string, Term::Sort> vars;
  collect_vars(lhs, vars);
  collect_vars(rhs, vars);

  const auto elems = s.elements();
  std::vector<std::string> names;
  std::vector<const std::vector<Element>*> ranges;
  for (const auto& [name, sort] : vars) {
    if (sort == Term::Sort::test && !tests) {
      throw evaluation_error("test variable '" + name + "' without a test algebra");
    }
    names.push_back(name);
    ranges.push_back(sort == Term::Sort::test ? &tests->members() : &elems);
  }

  LawReport report;
  report.law = law;
  std::vector<std::size_t> idx(names.size(), 0);
  for (const auto* r : ranges) {
    if (r->empty()) return report;
  }
  Env env;
  while (true) {
    for (std::size_t i = 0; i < names.size(); ++i) env[names[i]] = (*ranges[i])[idx[i]];
    ++report.cases;
    const Element l = eval_term(lhs, env, ctx);
    const Element r = eval_term(rhs, env, ctx);
    const bool ok = rel == Comparison::eq ? l == r : s.leq(l, r);
    if (!ok) {
      report.status = LawStatus::fails;
      for (const auto& name : names) {
        report.witness.push_back(Binding{name, s.name(env[name]), env[name]});
      }
      return report;
    }
    std::size_t d = names.size();
    while (true) {
      if (d == 0) return report;
      --d;
      if (++idx[d] < ranges[d]->size()) break;
      idx[d] = 0;
    }
  }
}

}  // namespace kad
