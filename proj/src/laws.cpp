#include "kad/laws.hpp"

#include "kad/error.hpp"

namespace kad {

std::vector<Element> subidentities(const FiniteSemiring& s) {
  std::vector<Element> out;
  for (Element a = 0; a < s.size(); ++a) {
    if (s.leq(a, s.one())) out.push_back(a);
  }
  return out;
}

std::vector<LawReport> check_isemiring(const FiniteSemiring& s) { return isemiring_laws(s); }

std::vector<LawReport> check_kleene(const FiniteSemiring& s) {
  if (!s.has_star()) throw missing_capability("kleene laws need a star table");
  // Powers of an element cycle within |carrier| steps.
  return kleene_laws(s, s.size());
}

std::vector<LawReport> check_natural_order(const FiniteSemiring& s) {
  return natural_order_laws(s);
}

std::vector<LawReport> check_subidentities(const FiniteSemiring& s) {
  using V = Element;
  const CheckBudget budget;
  const auto sid = subidentities(s);
  std::vector<Element> isid;
  for (Element p : sid) {
    if (s.mul(p, p) == p) isid.push_back(p);
  }
  auto fmt = [&](Element e) { return s.name(e); };
  const Quantifier<V> p{"p", sid, {}}, q{"q", sid, {}};
  const Quantifier<V> ip{"p", isid, {}}, iq{"q", isid, {}}, ir{"r", isid, {}};
  auto is_sid = [&](Element e) { return s.leq(e, s.one()); };
  auto is_isid = [&](Element e) { return is_sid(e) && s.mul(e, e) == e; };

  std::vector<LawReport> out;
  out.push_back(forall<V>("subidentities-contain-zero-one", budget, fmt,
      [&](Element) { return is_sid(s.zero()) && is_sid(s.one()); }, p));
  out.push_back(forall<V>("subidentities-closed", budget, fmt,
      [&](Element x, Element y) { return is_sid(s.add(x, y)) && is_sid(s.mul(x, y)); }, p, q));
  out.push_back(forall<V>("subidentity-product-lower-bound", budget, fmt,
      [&](Element x, Element y) { return s.leq(s.mul(x, y), x) && s.leq(s.mul(x, y), y); },
      p, q));
  out.push_back(forall<V>("idempotent-subidentities-closed", budget, fmt,
      [&](Element x, Element y) {
        return is_isid(s.zero()) && is_isid(s.one()) && is_isid(s.add(x, y)) &&
               is_isid(s.mul(x, y));
      }, ip, iq));
  out.push_back(forall<V>("idempotent-subidentities-commute", budget, fmt,
      [&](Element x, Element y) { return s.mul(x, y) == s.mul(y, x); }, ip, iq));
  out.push_back(forall<V>("idempotent-subidentities-distributive", budget, fmt,
      [&](Element x, Element y, Element z) {
        return s.mul(x, s.add(y, z)) == s.add(s.mul(x, y), s.mul(x, z)) &&
               s.add(x, s.mul(y, z)) == s.mul(s.add(x, y), s.add(x, z));
      }, ip, iq, ir));
  return out;
}

std::vector<LawReport> check_test_algebra(const TestAlgebra& t) {
  using V = Element;
  const CheckBudget budget;
  const FiniteSemiring& s = t.owner();
  const auto& members = t.members();
  const auto elems = s.elements();
  auto fmt = [&](Element e) { return s.name(e); };
  const Quantifier<V> p{"p", members, {}}, q{"q", members, {}};
  const Quantifier<V> a{"a", elems, {}};
  auto cp = [&](Element x) { return t.compl_unchecked(x); };
  auto le = [&](Element x, Element y) { return s.leq(x, y); };
  const Element zero = s.zero();

  std::vector<LawReport> out;
  out.push_back(forall<V>("tests-below-one", budget, fmt,
      [&](Element x) { return le(x, s.one()); }, p));
  {
    LawReport r;
    r.law = "tests-contain-zero-one";
    r.cases = 1;
    if (!t.contains(s.zero()) || !t.contains(s.one())) r.status = LawStatus::fails;
    out.push_back(r);
  }
  out.push_back(forall<V>("tests-closed", budget, fmt,
      [&](Element x, Element y) { return t.contains(s.add(x, y)) && t.contains(s.mul(x, y)); },
      p, q));
  out.push_back(forall<V>("complement-join", budget, fmt,
      [&](Element x) { return s.add(x, cp(x)) == s.one(); }, p));
  out.push_back(forall<V>("complement-meet", budget, fmt,
      [&](Element x) { return s.mul(x, cp(x)) == zero && s.mul(cp(x), x) == zero; }, p));
  out.push_back(forall<V>("tests-mul-commutative", budget, fmt,
      [&](Element x, Element y) { return s.mul(x, y) == s.mul(y, x); }, p, q));
  out.push_back(forall<V>("tests-mul-idempotent", budget, fmt,
      [&](Element x) { return s.mul(x, x) == x; }, p));
  out.push_back(forall<V>("left-preservation-equivalences", budget, fmt,
      [&](Element x, Element y, Element z) {
        const Element ya = s.mul(y, x);
        const bool e1 = le(ya, s.mul(x, z));
        const bool e2 = le(s.mul(x, cp(z)), s.mul(cp(y), x));
        const bool e3 = le(s.mul(ya, cp(z)), zero);
        const bool e4 = ya == s.mul(ya, z);
        return e1 == e2 && e2 == e3 && e3 == e4;
      }, a, p, q));
  out.push_back(forall<V>("right-preservation-equivalences", budget, fmt,
      [&](Element x, Element y, Element z) {
        const Element ay = s.mul(x, y);
        const bool e1 = le(ay, s.mul(z, x));
        const bool e2 = le(s.mul(cp(z), x), s.mul(x, cp(y)));
        const bool e3 = le(s.mul(cp(z), ay), zero);
        const bool e4 = ay == s.mul(z, ay);
        return e1 == e2 && e2 == e3 && e3 == e4;
      }, a, p, q));
  return out;
}

}  // namespace kad
