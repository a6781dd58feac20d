#pragma once

#include <vector>

#include "kad/finite_semiring.hpp"
#include "kad/law_report.hpp"
#include "kad/test_algebra.hpp"
#include "kad/universe.hpp"

namespace kad {

// Law suites are written once against the semiring interface
// (value_type, add, mul, zero, one, leq, star, format) and instantiated for
// table models, relations and sampled infinite models.

/// Idempotent semiring axioms.
template <typename M>
std::vector<LawReport> isemiring_laws(const M& m, const CheckBudget& budget = {}) {
  using V = typename M::value_type;
  const Universe<M> u(m);
  const auto a = u.element("a"), b = u.element("b"), c = u.element("c");
  const auto fmt = u.formatter();
  std::vector<LawReport> out;
  out.push_back(forall<V>("add-associative", budget, fmt,
      [&](const V& x, const V& y, const V& z) {
        return m.add(m.add(x, y), z) == m.add(x, m.add(y, z));
      }, a, b, c));
  out.push_back(forall<V>("add-commutative", budget, fmt,
      [&](const V& x, const V& y) { return m.add(x, y) == m.add(y, x); }, a, b));
  out.push_back(forall<V>("add-unit", budget, fmt,
      [&](const V& x) { return m.add(m.zero(), x) == x && m.add(x, m.zero()) == x; }, a));
  out.push_back(forall<V>("add-idempotent", budget, fmt,
      [&](const V& x) { return m.add(x, x) == x; }, a));
  out.push_back(forall<V>("mul-associative", budget, fmt,
      [&](const V& x, const V& y, const V& z) {
        return m.mul(m.mul(x, y), z) == m.mul(x, m.mul(y, z));
      }, a, b, c));
  out.push_back(forall<V>("mul-unit", budget, fmt,
      [&](const V& x) { return m.mul(m.one(), x) == x && m.mul(x, m.one()) == x; }, a));
  out.push_back(forall<V>("left-distributive", budget, fmt,
      [&](const V& x, const V& y, const V& z) {
        return m.mul(x, m.add(y, z)) == m.add(m.mul(x, y), m.mul(x, z));
      }, a, b, c));
  out.push_back(forall<V>("right-distributive", budget, fmt,
      [&](const V& x, const V& y, const V& z) {
        return m.mul(m.add(x, y), z) == m.add(m.mul(x, z), m.mul(y, z));
      }, a, b, c));
  out.push_back(forall<V>("zero-annihilates", budget, fmt,
      [&](const V& x) { return m.mul(x, m.zero()) == m.zero() && m.mul(m.zero(), x) == m.zero(); },
      a));
  LawReport nontrivial;
  nontrivial.law = "zero-neq-one";
  nontrivial.cases = 1;
  if (m.zero() == m.one()) nontrivial.status = LawStatus::fails;
  out.push_back(nontrivial);
  return out;
}

/// Star unfold and induction axioms plus the standard derived star laws.
/// `max_power` bounds the powers compared against the star.
template <typename M>
std::vector<LawReport> kleene_laws(const M& m, std::size_t max_power,
                                   const CheckBudget& budget = {}) {
  using V = typename M::value_type;
  const Universe<M> u(m);
  const auto a = u.element("a"), b = u.element("b"), c = u.element("c");
  const auto fmt = u.formatter();
  const V one = m.one();
  auto s = [&](const V& x) { return m.star(x); };
  auto le = [&](const V& x, const V& y) { return m.leq(x, y); };
  std::vector<LawReport> out;

  out.push_back(forall<V>("star-unfold-left", budget, fmt,
      [&](const V& x) { return le(m.add(one, m.mul(x, s(x))), s(x)); }, a));
  out.push_back(forall<V>("star-unfold-right", budget, fmt,
      [&](const V& x) { return le(m.add(one, m.mul(s(x), x)), s(x)); }, a));
  out.push_back(forall<V>("star-induction-left", budget, fmt,
      [&](const V& x, const V& y, const V& z) {
        return !le(m.add(y, m.mul(x, z)), z) || le(m.mul(s(x), y), z);
      }, a, b, c));
  out.push_back(forall<V>("star-induction-right", budget, fmt,
      [&](const V& x, const V& y, const V& z) {
        return !le(m.add(y, m.mul(z, x)), z) || le(m.mul(y, s(x)), z);
      }, a, b, c));

  out.push_back(forall<V>("one-below-star", budget, fmt,
      [&](const V& x) { return le(one, s(x)); }, a));
  out.push_back(forall<V>("star-product-idempotent", budget, fmt,
      [&](const V& x) { return m.mul(s(x), s(x)) == s(x); }, a));
  out.push_back(forall<V>("powers-below-star", budget, fmt,
      [&](const V& x) {
        V power = one;
        for (std::size_t i = 0; i <= max_power; ++i) {
          if (!le(power, s(x))) return false;
          power = m.mul(power, x);
        }
        return true;
      }, a));
  out.push_back(forall<V>("star-star", budget, fmt,
      [&](const V& x) { return s(s(x)) == s(x); }, a));
  out.push_back(forall<V>("sliding", budget, fmt,
      [&](const V& x, const V& y) {
        return m.mul(s(m.mul(x, y)), x) == m.mul(x, s(m.mul(y, x)));
      }, a, b));
  out.push_back(forall<V>("denesting", budget, fmt,
      [&](const V& x, const V& y) {
        return s(m.add(x, y)) == m.mul(s(x), s(m.mul(y, s(x))));
      }, a, b));
  out.push_back(forall<V>("star-unfold-product", budget, fmt,
      [&](const V& x, const V& y) {
        const V lhs = m.mul(s(x), y);
        return lhs == m.add(y, m.mul(m.mul(s(x), x), y)) &&
               lhs == m.add(y, m.mul(m.mul(x, s(x)), y));
      }, a, b));
  out.push_back(forall<V>("subidentity-star-is-one", budget, fmt,
      [&](const V& x) { return !le(x, one) || s(x) == one; }, a));
  out.push_back(forall<V>("star-monotone", budget, fmt,
      [&](const V& x, const V& y) { return !le(x, y) || le(s(x), s(y)); }, a, b));
  out.push_back(forall<V>("simulation-left", budget, fmt,
      [&](const V& x, const V& y, const V& z) {
        return !le(m.mul(x, z), m.mul(z, y)) || le(m.mul(s(x), z), m.mul(z, s(y)));
      }, a, b, c));
  out.push_back(forall<V>("simulation-right", budget, fmt,
      [&](const V& x, const V& y, const V& z) {
        return !le(m.mul(z, x), m.mul(y, z)) || le(m.mul(z, s(x)), m.mul(s(y), z));
      }, a, b, c));
  return out;
}

/// Properties of the natural order: partial order, 0 least, monotonicity, join.
template <typename M>
std::vector<LawReport> natural_order_laws(const M& m, const CheckBudget& budget = {}) {
  using V = typename M::value_type;
  const Universe<M> u(m);
  const auto a = u.element("a"), b = u.element("b"), c = u.element("c");
  const auto fmt = u.formatter();
  auto le = [&](const V& x, const V& y) { return m.leq(x, y); };
  std::vector<LawReport> out;
  out.push_back(forall<V>("order-reflexive", budget, fmt, [&](const V& x) { return le(x, x); }, a));
  out.push_back(forall<V>("order-antisymmetric", budget, fmt,
      [&](const V& x, const V& y) { return !(le(x, y) && le(y, x)) || x == y; }, a, b));
  out.push_back(forall<V>("order-transitive", budget, fmt,
      [&](const V& x, const V& y, const V& z) { return !(le(x, y) && le(y, z)) || le(x, z); },
      a, b, c));
  out.push_back(forall<V>("zero-least", budget, fmt,
      [&](const V& x) { return le(m.zero(), x); }, a));
  out.push_back(forall<V>("add-monotone", budget, fmt,
      [&](const V& x, const V& y, const V& z) {
        return !le(x, y) || (le(m.add(x, z), m.add(y, z)) && le(m.add(z, x), m.add(z, y)));
      }, a, b, c));
  out.push_back(forall<V>("mul-monotone", budget, fmt,
      [&](const V& x, const V& y, const V& z) {
        return !le(x, y) || (le(m.mul(x, z), m.mul(y, z)) && le(m.mul(z, x), m.mul(z, y)));
      }, a, b, c));
  out.push_back(forall<V>("join-property", budget, fmt,
      [&](const V& x, const V& y, const V& z) {
        return (le(x, z) && le(y, z)) == le(m.add(x, y), z);
      }, a, b, c));
  return out;
}

// Finite-structure entry points. These never throw on law failures.

std::vector<LawReport> check_isemiring(const FiniteSemiring& s);
/// Throws missing_capability when `s` has no star table.
std::vector<LawReport> check_kleene(const FiniteSemiring& s);
std::vector<LawReport> check_natural_order(const FiniteSemiring& s);
/// Subidentities form a subsemiring, their products are lower bounds, and the
/// multiplicatively idempotent ones form a bounded distributive lattice.
std::vector<LawReport> check_subidentities(const FiniteSemiring& s);
/// Boolean-subalgebra invariants plus the preserver/annihilator equivalences,
/// quantified over the declared members only.
std::vector<LawReport> check_test_algebra(const TestAlgebra& t);

/// Sub-identities of `s` (elements below one).
std::vector<Element> subidentities(const FiniteSemiring& s);

}  // namespace kad
