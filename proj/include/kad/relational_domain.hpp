#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kad/models/relation.hpp"

namespace kad {

/// The relational test semiring on n states with closed-form domain,
/// codomain, preimage and image. Tests are the subidentities; atoms are the
/// singleton subidentities. Unlike the tabulated rel_domain this scales to
/// large n; quantified checks enumerate tests up to `test_enumeration_limit`
/// states and elements up to 4 states, and sample beyond.
class RelationalDomain {
 public:
  using value_type = Relation;

  explicit RelationalDomain(int n, int test_enumeration_limit = 12);

  int states() const { return n_; }

  Relation add(const Relation& a, const Relation& b) const { return a + b; }
  Relation mul(const Relation& a, const Relation& b) const { return a * b; }
  Relation zero() const { return Relation::empty(n_); }
  Relation one() const { return Relation::identity(n_); }
  bool leq(const Relation& a, const Relation& b) const { return included(a, b); }
  bool has_star() const { return true; }
  Relation star(const Relation& a) const { return closure(a); }
  bool has_conv() const { return true; }
  Relation conv(const Relation& a) const { return transpose(a); }
  std::optional<Relation> top() const { return Relation::full(n_); }
  std::string format(const Relation& a) const { return a.to_string(); }
  bool is_local() const { return true; }

  bool enumerable_elements() const { return n_ <= 4; }
  std::vector<Relation> elements() const;
  Relation sample_element(std::mt19937_64& rng) const;

  bool enumerable_tests() const { return n_ <= test_limit_; }
  std::vector<Relation> tests() const;
  Relation sample_test(std::mt19937_64& rng) const;
  bool is_test(const Relation& a) const { return a.is_subidentity(); }
  /// Throws evaluation_error for non-tests.
  Relation compl_of(const Relation& p) const;
  std::vector<Relation> atoms() const;

  Relation delta(const Relation& a) const { return domain_of(a); }
  Relation rho(const Relation& a) const { return codomain_of(a); }
  /// States with an a-successor in p. Throws evaluation_error for non-tests.
  Relation preimage(const Relation& a, const Relation& p) const;
  /// States with an a-predecessor in p. Throws evaluation_error for non-tests.
  Relation image(const Relation& p, const Relation& a) const;

 private:
  int n_;
  int test_limit_;
};

}  // namespace kad
