#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "kad/domain.hpp"
#include "kad/finite_semiring.hpp"
#include "kad/law_report.hpp"
#include "kad/test_algebra.hpp"

namespace kad {

/// Syntax tree for stating equations over the algebra operations.
/// Variables carry a sort: element variables range over the whole carrier,
/// test variables over the declared tests.
class Term {
 public:
  enum class Kind { var, zero, one, add, mul, star, conv, delta, rho, compl_ };
  enum class Sort { element, test };

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  Sort sort() const { return node_->sort; }
  const Term& lhs() const { return node_->args.at(0); }
  const Term& rhs() const { return node_->args.at(1); }
  const Term& arg() const { return node_->args.at(0); }

  static Term var(std::string name, Sort sort = Sort::element);
  static Term test(std::string name) { return var(std::move(name), Sort::test); }
  static Term zero();
  static Term one();

  friend Term operator+(const Term& l, const Term& r);
  friend Term operator*(const Term& l, const Term& r);
  friend Term star(const Term& t);
  friend Term conv(const Term& t);
  friend Term delta(const Term& t);
  friend Term rho(const Term& t);
  friend Term compl_(const Term& t);

  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    Sort sort = Sort::element;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term make(Kind k, std::vector<Term> args);

  std::shared_ptr<const Node> node_;
};

Term operator+(const Term& l, const Term& r);
Term operator*(const Term& l, const Term& r);
Term star(const Term& t);
Term conv(const Term& t);
Term delta(const Term& t);
Term rho(const Term& t);
Term compl_(const Term& t);

using Env = std::map<std::string, Element>;

/// What a term may be evaluated against. `tests` and `domain` are optional;
/// nodes needing them raise evaluation_error when absent. When only `domain`
/// is given, its test algebra is used.
struct EvalContext {
  const FiniteSemiring* semiring = nullptr;
  const TestAlgebra* tests = nullptr;
  const DomainStructure* domain = nullptr;

  explicit EvalContext(const FiniteSemiring& s, const TestAlgebra* t = nullptr,
                       const DomainStructure* d = nullptr)
      : semiring(&s), tests(t), domain(d) {}
  explicit EvalContext(const DomainStructure& d)
      : semiring(&d.owner()), tests(&d.test_algebra()), domain(&d) {}
};

/// Throws evaluation_error for unbound variables, complements of non-tests and
/// domain nodes without a domain structure; missing_capability for absent
/// star or converse tables.
Element eval_term(const Term& t, const Env& env, const EvalContext& ctx);

enum class Comparison { eq, leq };

/// Checks lhs = rhs (or lhs <= rhs) for every assignment of carrier elements
/// to element variables and tests to test variables.
LawReport check_equation(const std::string& law, const Term& lhs, Comparison rel,
                         const Term& rhs, const EvalContext& ctx);

}  // namespace kad
