#include "kad/domain.hpp"

#include <algorithm>
#include <map>

#include "kad/error.hpp"

namespace kad {

namespace {

bool all_pairs(std::size_t n, auto&& pred) {
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!pred(a, b)) return false;
    }
  }
  return true;
}

// Members ordered by the size of their lower set within the members, so the
// first preserver found is the least one whenever a least one exists.
std::vector<Element> by_lower_set(const FiniteSemiring& s, const std::vector<Element>& members) {
  std::vector<std::pair<std::size_t, Element>> keyed;
  for (Element p : members) {
    std::size_t below = 0;
    for (Element q : members) below += s.leq(q, p) ? 1 : 0;
    keyed.emplace_back(below, p);
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Element> out;
  for (const auto& [k, p] : keyed) out.push_back(p);
  return out;
}

// Least p in `order` with a <= p a, for every a.
std::vector<Element> least_left_preservers(const FiniteSemiring& s,
                                           const std::vector<Element>& order) {
  auto preserves = [&](Element a, Element p) { return s.leq(a, s.mul(p, a)); };
  std::vector<Element> out(s.size());
  for (Element a = 0; a < s.size(); ++a) {
    bool found = false;
    for (Element p : order) {
      if (!preserves(a, p)) continue;
      for (Element q : order) {
        if (preserves(a, q) && !s.leq(p, q)) {
          throw invalid_structure("element '" + s.name(a) + "' has no least preserver");
        }
      }
      out[a] = p;
      found = true;
      break;
    }
    if (!found) {
      throw invalid_structure("element '" + s.name(a) + "' has no preserver");
    }
  }
  return out;
}

}  // namespace

DomainStructure::DomainStructure(TestAlgebra tests, std::vector<Element> delta,
                                 std::vector<Element> rho)
    : tests_(std::move(tests)), delta_(std::move(delta)), rho_(std::move(rho)) {
  const FiniteSemiring& s = tests_.owner();
  const std::size_t n = s.size();
  if (delta_.size() != n || rho_.size() != n) {
    throw invalid_structure("domain tables must cover the carrier");
  }
  for (Element a = 0; a < n; ++a) {
    if (!tests_.contains(delta_[a])) throw invalid_structure("delta must land in the tests");
    if (!tests_.contains(rho_[a])) throw invalid_structure("rho must land in the tests");
  }
  const auto& ps = tests_.members();
  auto every_a_p = [&](auto&& pred) {
    for (Element a = 0; a < n; ++a) {
      for (Element p : ps) {
        if (!pred(a, p)) return false;
      }
    }
    return true;
  };
  auto every_a = [&](auto&& pred) {
    for (Element a = 0; a < n; ++a) {
      if (!pred(a)) return false;
    }
    return true;
  };
  flags_.d1 = every_a([&](Element a) { return s.leq(a, s.mul(delta_[a], a)); });
  flags_.d2 = every_a_p([&](Element a, Element p) { return s.leq(delta_[s.mul(p, a)], p); });
  flags_.dloc = all_pairs(n, [&](Element a, Element b) {
    return s.leq(delta_[s.mul(a, delta_[b])], delta_[s.mul(a, b)]);
  });
  flags_.cd1 = every_a([&](Element a) { return s.leq(a, s.mul(a, rho_[a])); });
  flags_.cd2 = every_a_p([&](Element a, Element p) { return s.leq(rho_[s.mul(a, p)], p); });
  flags_.cdloc = all_pairs(n, [&](Element a, Element b) {
    return s.leq(rho_[s.mul(rho_[a], b)], rho_[s.mul(a, b)]);
  });
  top_ = s.top();
}

Element DomainStructure::preimage(Element a, Element p) const {
  if (!is_test(p)) throw evaluation_error("preimage of non-test '" + format(p) + "'");
  return delta_[mul(a, p)];
}

Element DomainStructure::image(Element p, Element a) const {
  if (!is_test(p)) throw evaluation_error("image of non-test '" + format(p) + "'");
  return rho_[mul(p, a)];
}

DomainStructure DomainStructure::with_delta(std::vector<Element> delta) const {
  return DomainStructure(tests_, std::move(delta), rho_);
}

DomainStructure DomainStructure::with_rho(std::vector<Element> rho) const {
  return DomainStructure(tests_, delta_, std::move(rho));
}

DomainStructure compute_predomain(const TestAlgebra& tests) {
  const FiniteSemiring& s = tests.owner();
  const auto order = by_lower_set(s, tests.members());
  auto delta = least_left_preservers(s, order);
  // Codomain is predomain in the opposite semiring.
  auto rho = least_left_preservers(opposite(s), order);
  return DomainStructure(tests, std::move(delta), std::move(rho));
}

Element meet_of_left_preservers(const TestAlgebra& tests, Element a) {
  const FiniteSemiring& s = tests.owner();
  Element acc = s.one();
  for (Element p : tests.members()) {
    if (s.leq(a, s.mul(p, a))) acc = s.mul(acc, p);
  }
  return acc;
}

std::vector<LawReport> check_domain_axioms(const DomainStructure& d) {
  using V = Element;
  const CheckBudget budget;
  const FiniteSemiring& s = d.owner();
  const auto elems = s.elements();
  const auto& tests = d.tests();
  auto fmt = [&](Element e) { return s.name(e); };
  const Quantifier<V> a{"a", elems, {}}, b{"b", elems, {}}, p{"p", tests, {}};
  auto le = [&](Element x, Element y) { return s.leq(x, y); };
  auto dl = [&](Element x) { return d.delta(x); };
  auto rh = [&](Element x) { return d.rho(x); };
  auto cp = [&](Element x) { return d.test_algebra().compl_unchecked(x); };
  const Element zero = s.zero();

  std::vector<LawReport> out;
  out.push_back(forall<V>("d1", budget, fmt,
      [&](Element x) { return le(x, s.mul(dl(x), x)); }, a));
  out.push_back(forall<V>("d2", budget, fmt,
      [&](Element x, Element q) { return le(dl(s.mul(q, x)), q); }, a, p));
  out.push_back(forall<V>("dloc", budget, fmt,
      [&](Element x, Element y) { return le(dl(s.mul(x, dl(y))), dl(s.mul(x, y))); }, a, b));
  out.push_back(forall<V>("llp", budget, fmt,
      [&](Element x, Element q) { return le(dl(x), q) == le(x, s.mul(q, x)); }, a, p));
  out.push_back(forall<V>("gla", budget, fmt,
      [&](Element x, Element q) { return le(dl(x), q) == le(s.mul(cp(q), x), zero); }, a, p));
  out.push_back(forall<V>("cd1", budget, fmt,
      [&](Element x) { return le(x, s.mul(x, rh(x))); }, a));
  out.push_back(forall<V>("cd2", budget, fmt,
      [&](Element x, Element q) { return le(rh(s.mul(x, q)), q); }, a, p));
  out.push_back(forall<V>("cdloc", budget, fmt,
      [&](Element x, Element y) { return le(rh(s.mul(rh(x), y)), rh(s.mul(x, y))); }, a, b));
  out.push_back(forall<V>("lrp", budget, fmt,
      [&](Element x, Element q) { return le(rh(x), q) == le(x, s.mul(x, q)); }, a, p));
  out.push_back(forall<V>("gra", budget, fmt,
      [&](Element x, Element q) { return le(rh(x), q) == le(s.mul(x, cp(q)), zero); }, a, p));
  return out;
}

std::vector<LawReport> check_converse(const FiniteSemiring& s) {
  if (!s.has_conv()) throw missing_capability("converse laws need a converse table");
  using V = Element;
  const CheckBudget budget;
  const auto elems = s.elements();
  std::vector<Element> sid;
  for (Element x : elems) {
    if (s.leq(x, s.one())) sid.push_back(x);
  }
  auto fmt = [&](Element e) { return s.name(e); };
  const Quantifier<V> a{"a", elems, {}}, b{"b", elems, {}}, p{"p", sid, {}};
  auto cv = [&](Element x) { return s.conv(x); };
  auto le = [&](Element x, Element y) { return s.leq(x, y); };

  std::vector<LawReport> out;
  out.push_back(forall<V>("c1", budget, fmt, [&](Element x) { return cv(cv(x)) == x; }, a));
  out.push_back(forall<V>("c2", budget, fmt,
      [&](Element x, Element y) { return cv(s.add(x, y)) == s.add(cv(x), cv(y)); }, a, b));
  out.push_back(forall<V>("c3", budget, fmt,
      [&](Element x, Element y) { return cv(s.mul(x, y)) == s.mul(cv(y), cv(x)); }, a, b));
  out.push_back(forall<V>("c4", budget, fmt, [&](Element q) { return le(cv(q), q); }, p));
  out.push_back(forall<V>("c5", budget, fmt,
      [&](Element x) { return le(x, s.mul(s.mul(x, cv(x)), x)); }, a));
  {
    LawReport r;
    r.law = "conv-one";
    r.cases = 1;
    if (cv(s.one()) != s.one()) r.status = LawStatus::fails;
    out.push_back(r);
  }
  {
    LawReport r;
    r.law = "conv-zero";
    r.cases = 1;
    if (cv(s.zero()) != s.zero()) r.status = LawStatus::fails;
    out.push_back(r);
  }
  out.push_back(forall<V>("conv-order-iso", budget, fmt,
      [&](Element x, Element y) { return le(x, y) == le(cv(x), cv(y)); }, a, b));
  out.push_back(forall<V>("conv-subidentity-fixed", budget, fmt,
      [&](Element q) { return cv(q) == q; }, p));
  return out;
}

IntegralityResult is_integral(const FiniteSemiring& s) {
  IntegralityResult r;
  for (Element a = 0; a < s.size(); ++a) {
    for (Element b = 0; b < s.size(); ++b) {
      if (s.leq(s.mul(a, b), s.zero()) && !s.leq(a, s.zero()) && !s.leq(b, s.zero())) {
        r.integral = false;
        r.witness = std::make_pair(a, b);
        return r;
      }
    }
  }
  return r;
}

}  // namespace kad
