#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kad/domain.hpp"
#include "kad/law_report.hpp"
#include "kad/universe.hpp"

namespace kad {

/// A yes/no answer with a test demonstrating a "no".
template <typename V>
struct Verdict {
  bool value = true;
  std::optional<V> witness;
  /// False when the answer comes from sampling tests.
  bool exhaustive = true;

  explicit operator bool() const { return value; }
};

namespace detail {

// Greatest x with x <= step(x), by descending iteration from 1. On a finite
// test algebra with a monotone step this is the join of all solutions of
// x <= step(x). Returns nullopt if the iteration does not settle.
template <typename D, typename Step, typename V = typename D::value_type>
std::optional<V> greatest_postfixpoint(const D& d, Step step, std::size_t max_steps) {
  V x = d.one();
  for (std::size_t i = 0; i <= max_steps; ++i) {
    V next = step(x);
    if (next == x) return x;
    x = std::move(next);
  }
  return std::nullopt;
}

template <typename D, typename Step, typename V = typename D::value_type>
Verdict<V> no_nonzero_postfixpoint(const D& d, Step step, const CheckBudget& budget) {
  Verdict<V> v;
  // The test lattice of n atoms has height n; one step per level suffices.
  std::size_t height = d.atoms().size() + 1;
  if (auto g = greatest_postfixpoint(d, step, height)) {
    if (!d.leq(*g, d.zero())) {
      v.value = false;
      v.witness = *g;
    }
    return v;
  }
  // Non-monotone maps: fall back to searching the tests.
  const Universe<D> u(d);
  std::optional<V> found;
  auto r = forall<V>("postfixpoint", budget, u.formatter(),
      [&](const V& p) {
        const bool ok = !d.leq(p, step(p)) || d.leq(p, d.zero());
        if (!ok) found = p;
        return ok;
      }, u.test("p"));
  v.exhaustive = r.exhaustive;
  if (r.fails()) {
    v.value = false;
    v.witness = found;
  }
  return v;
}

}  // namespace detail

/// No nonzero test p with p <= a : p.
template <typename D, typename V = typename D::value_type>
Verdict<V> is_noetherian(const D& d, const V& a, const CheckBudget& budget = {}) {
  return detail::no_nonzero_postfixpoint(d, [&](const V& x) { return d.preimage(a, x); }, budget);
}

/// No nonzero test p with p <= p : a.
template <typename D, typename V = typename D::value_type>
Verdict<V> is_well_founded(const D& d, const V& a, const CheckBudget& budget = {}) {
  return detail::no_nonzero_postfixpoint(d, [&](const V& x) { return d.image(x, a); }, budget);
}

/// Test difference p - q = p q'.
template <typename D, typename V = typename D::value_type>
V test_minus(const D& d, const V& p, const V& q) {
  return d.mul(p, d.compl_of(q));
}

/// a : p <= a : (p - a : p) for all tests p; sampled past the budget.
template <typename D, typename V = typename D::value_type>
Verdict<V> is_loebian(const D& d, const V& a, const CheckBudget& budget = {}) {
  const Universe<D> u(d);
  std::optional<V> found;
  const auto r = forall<V>("loebian", budget, u.formatter(),
      [&](const V& p) {
        const V ap = d.preimage(a, p);
        const bool ok = d.leq(ap, d.preimage(a, test_minus(d, p, ap)));
        if (!ok) found = p;
        return ok;
      }, u.test("p"));
  Verdict<V> v;
  v.exhaustive = r.exhaustive;
  if (r.fails()) {
    v.value = false;
    v.witness = found;
  }
  return v;
}

/// a+ = a a*. Throws missing_capability without a star.
template <typename D, typename V = typename D::value_type>
V transitive_closure(const D& d, const V& a) {
  return d.mul(a, d.star(a));
}

template <typename V>
struct TerminationReport {
  V subject;
  Verdict<V> noetherian;
  Verdict<V> well_founded;
  Verdict<V> loebian;
};

template <typename D, typename V = typename D::value_type>
TerminationReport<V> termination_report(const D& d, const V& a, const CheckBudget& budget = {}) {
  return TerminationReport<V>{a, is_noetherian(d, a, budget), is_well_founded(d, a, budget),
                              is_loebian(d, a, budget)};
}

/// Elementary Noethericity facts, the Löb correspondence and the preimage
/// identities behind it. All but the first two need locality and are reported as
/// not applicable otherwise.
template <typename D>
std::vector<LawReport> termination_laws(const D& d, const CheckBudget& budget = {}) {
  using V = typename D::value_type;
  const Universe<D> u(d);
  const auto a = u.element("a"), b = u.element("b");
  const auto p = u.test("p"), q = u.test("q");
  const auto fmt = u.formatter();
  auto le = [&](const V& x, const V& y) { return d.leq(x, y); };
  auto pre = [&](const V& x, const V& t) { return d.preimage(x, t); };
  std::map<V, bool> noeth_cache;
  auto noeth = [&](const V& x) {
    auto it = noeth_cache.find(x);
    if (it == noeth_cache.end()) it = noeth_cache.emplace(x, is_noetherian(d, x, budget).value).first;
    return it->second;
  };
  auto plus = [&](const V& x) { return transitive_closure(d, x); };
  auto minus = [&](const V& s, const V& t) { return test_minus(d, s, t); };
  const V zero = d.zero(), one = d.one();

  std::vector<LawReport> out;
  {
    LawReport r;
    r.law = "zero-noetherian";
    r.cases = 1;
    if (!noeth(zero)) r.status = LawStatus::fails;
    out.push_back(r);
  }
  out.push_back(forall<V>("nonzero-test-not-noetherian", budget, fmt,
      [&](const V& t) { return le(t, zero) || !noeth(t); }, p));
  if (!d.is_local()) {
    for (const char* law :
         {"noetherian-downward-closed", "noetherian-irreflexive", "noetherian-not-dense",
          "noetherian-iff-plus", "star-not-noetherian", "loebian-implies-noetherian",
          "noetherian-plus-preimage", "noetherian-transitive-loebian", "preimage-difference",
          "plus-preimage-unfold"}) {
      out.push_back(not_applicable(law, "needs locality"));
    }
    return out;
  }
  out.push_back(forall<V>("noetherian-downward-closed", budget, fmt,
      [&](const V& x, const V& y) { return !(le(x, y) && noeth(y)) || noeth(x); }, a, b));
  out.push_back(forall<V>("noetherian-irreflexive", budget, fmt,
      [&](const V& x, const V& y) {
        return !(noeth(x) && le(y, x) && le(y, one)) || le(y, zero);
      }, a, b));
  out.push_back(forall<V>("noetherian-not-dense", budget, fmt,
      [&](const V& x) { return !(noeth(x) && !le(x, zero)) || !le(x, d.mul(x, x)); }, a));
  out.push_back(forall<V>("noetherian-iff-plus", budget, fmt,
      [&](const V& x) { return noeth(x) == noeth(plus(x)); }, a));
  out.push_back(forall<V>("star-not-noetherian", budget, fmt,
      [&](const V& x) { return !noeth(d.star(x)); }, a));
  out.push_back(forall<V>("loebian-implies-noetherian", budget, fmt,
      [&](const V& x) { return !is_loebian(d, x, budget).value || noeth(x); }, a));
  out.push_back(forall<V>("noetherian-plus-preimage", budget, fmt,
      [&](const V& x, const V& t) {
        return !noeth(x) || le(pre(x, t), pre(plus(x), minus(t, pre(x, t))));
      }, a, p));
  out.push_back(forall<V>("noetherian-transitive-loebian", budget, fmt,
      [&](const V& x) {
        return !(noeth(x) && le(d.mul(x, x), x)) || is_loebian(d, x, budget).value;
      }, a));
  out.push_back(forall<V>("preimage-difference", budget, fmt,
      [&](const V& x, const V& s, const V& t) {
        return le(minus(pre(x, s), pre(x, t)), pre(x, minus(s, t)));
      }, a, p, q));
  out.push_back(forall<V>("plus-preimage-unfold", budget, fmt,
      [&](const V& x, const V& t) {
        const V pt = pre(plus(x), t);
        return pt == pre(x, d.add(t, pt));
      }, a, p));
  return out;
}

std::vector<LawReport> check_termination_laws(const DomainStructure& d);

}  // namespace kad
