#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kad/domain.hpp"
#include "kad/law_report.hpp"
#include "kad/universe.hpp"

namespace kad {

// Law suites over any domain model D: the semiring interface plus tests(),
// compl_of, delta, rho, preimage, image, top() and is_local(). They are
// instantiated for the tabulated DomainStructure and for RelationalDomain.

/// The opposite semiring of a domain model: products reversed, so domain and
/// codomain (and preimage and image) swap roles.
template <typename D>
class Opposite {
 public:
  using value_type = typename D::value_type;
  using V = value_type;

  explicit Opposite(const D& d) : d_(&d) {}

  V add(const V& a, const V& b) const { return d_->add(a, b); }
  V mul(const V& a, const V& b) const { return d_->mul(b, a); }
  V zero() const { return d_->zero(); }
  V one() const { return d_->one(); }
  bool leq(const V& a, const V& b) const { return d_->leq(a, b); }
  bool has_star() const { return d_->has_star(); }
  V star(const V& a) const { return d_->star(a); }
  bool has_conv() const { return d_->has_conv(); }
  V conv(const V& a) const { return d_->conv(a); }
  std::optional<V> top() const { return d_->top(); }
  std::string format(const V& a) const { return d_->format(a); }
  bool is_local() const { return d_->is_local(); }

  auto elements() const { return d_->elements(); }
  auto tests() const { return d_->tests(); }
  bool enumerable_elements() const
    requires requires(const D& x) { x.enumerable_elements(); }
  {
    return d_->enumerable_elements();
  }
  bool enumerable_tests() const
    requires requires(const D& x) { x.enumerable_tests(); }
  {
    return d_->enumerable_tests();
  }
  V sample_element(std::mt19937_64& rng) const
    requires requires(const D& x, std::mt19937_64& r) { x.sample_element(r); }
  {
    return d_->sample_element(rng);
  }
  V sample_test(std::mt19937_64& rng) const
    requires requires(const D& x, std::mt19937_64& r) { x.sample_test(r); }
  {
    return d_->sample_test(rng);
  }

  bool is_test(const V& a) const { return d_->is_test(a); }
  V compl_of(const V& p) const { return d_->compl_of(p); }
  V delta(const V& a) const { return d_->rho(a); }
  V rho(const V& a) const { return d_->delta(a); }
  V preimage(const V& a, const V& p) const { return d_->image(p, a); }
  V image(const V& p, const V& a) const { return d_->preimage(a, p); }

 private:
  const D* d_;
};

namespace detail {

inline LawReport single_case(std::string law, bool ok) {
  LawReport r;
  r.law = std::move(law);
  r.cases = 1;
  if (!ok) r.status = LawStatus::fails;
  return r;
}

}  // namespace detail

/// Strictness, additivity, monotonicity, identity on tests, idempotence,
/// left invariance, import/export, decomposition, complement commutation and
/// the Galois connection with top. `prefix` names the operator in reports.
template <typename D>
std::vector<LawReport> predomain_calculus_laws(const D& d, const std::string& prefix = "delta",
                                               const CheckBudget& budget = {}) {
  using V = typename D::value_type;
  const Universe<D> u(d);
  const auto a = u.element("a"), b = u.element("b");
  const auto p = u.test("p");
  const auto fmt = u.formatter();
  auto le = [&](const V& x, const V& y) { return d.leq(x, y); };
  auto dl = [&](const V& x) { return d.delta(x); };
  const V zero = d.zero();
  auto name = [&](const char* law) { return prefix + "-" + law; };

  std::vector<LawReport> out;
  out.push_back(forall<V>(name("strict"), budget, fmt,
      [&](const V& x) { return le(dl(x), zero) == le(x, zero); }, a));
  out.push_back(forall<V>(name("additive"), budget, fmt,
      [&](const V& x, const V& y) { return dl(d.add(x, y)) == d.add(dl(x), dl(y)); }, a, b));
  out.push_back(forall<V>(name("monotone"), budget, fmt,
      [&](const V& x, const V& y) { return !le(x, y) || le(dl(x), dl(y)); }, a, b));
  out.push_back(forall<V>(name("identity-on-tests"), budget, fmt,
      [&](const V& q) { return dl(q) == q; }, p));
  out.push_back(forall<V>(name("idempotent"), budget, fmt,
      [&](const V& x) { return dl(dl(x)) == dl(x); }, a));
  out.push_back(forall<V>(name("left-invariant"), budget, fmt,
      [&](const V& x) { return d.mul(dl(x), x) == x; }, a));
  out.push_back(forall<V>(name("import-export"), budget, fmt,
      [&](const V& q, const V& x) { return dl(d.mul(q, x)) == d.mul(q, dl(x)); }, p, a));
  out.push_back(forall<V>(name("decomposition"), budget, fmt,
      [&](const V& x, const V& y) { return le(dl(d.mul(x, y)), dl(d.mul(x, dl(y)))); }, a, b));
  out.push_back(forall<V>(name("complement"), budget, fmt,
      [&](const V& q) { return d.compl_of(dl(q)) == dl(d.compl_of(q)); }, p));
  if (auto top = d.top()) {
    const V t = *top;
    out.push_back(forall<V>(name("galois-top"), budget, fmt,
        [&](const V& x, const V& q) { return le(dl(x), q) == le(x, d.mul(q, t)); }, a, p));
  } else {
    out.push_back(not_applicable(name("galois-top"), "no greatest element"));
  }
  return out;
}

/// Preimage and image laws. Equalities that need locality are reported as
/// not applicable on non-local models.
template <typename D>
std::vector<LawReport> image_laws(const D& d, const CheckBudget& budget = {}) {
  using V = typename D::value_type;
  const Universe<D> u(d);
  const auto a = u.element("a"), b = u.element("b");
  const auto p = u.test("p"), q = u.test("q");
  const auto fmt = u.formatter();
  auto le = [&](const V& x, const V& y) { return d.leq(x, y); };
  auto pre = [&](const V& x, const V& t) { return d.preimage(x, t); };
  auto img = [&](const V& t, const V& x) { return d.image(t, x); };
  auto cp = [&](const V& t) { return d.compl_of(t); };
  const V zero = d.zero(), one = d.one();
  const bool local = d.is_local();

  std::vector<LawReport> out;
  out.push_back(forall<V>("preimage-of-one", budget, fmt,
      [&](const V& x) { return pre(x, one) == d.delta(x); }, a));
  out.push_back(forall<V>("image-of-one", budget, fmt,
      [&](const V& x) { return img(one, x) == d.rho(x); }, a));
  out.push_back(forall<V>("preimage-llp", budget, fmt,
      [&](const V& x, const V& s, const V& t) {
        return le(pre(x, s), t) == le(d.mul(x, s), d.mul(t, x));
      }, a, p, q));
  out.push_back(forall<V>("preimage-gla", budget, fmt,
      [&](const V& x, const V& s, const V& t) {
        return le(pre(x, s), t) == le(d.mul(d.mul(cp(t), x), s), zero);
      }, a, p, q));
  out.push_back(forall<V>("image-lrp", budget, fmt,
      [&](const V& x, const V& s, const V& t) {
        return le(img(s, x), t) == le(d.mul(s, x), d.mul(x, t));
      }, a, p, q));
  out.push_back(forall<V>("preimage-import-export", budget, fmt,
      [&](const V& x, const V& s, const V& t) {
        return d.mul(s, pre(x, t)) == pre(d.mul(s, x), t);
      }, a, p, q));
  out.push_back(forall<V>("exchange", budget, fmt,
      [&](const V& x, const V& s, const V& t) {
        return le(pre(x, s), t) == le(img(cp(t), x), cp(s));
      }, a, p, q));
  out.push_back(forall<V>("image-preimage-coupling", budget, fmt,
      [&](const V& x, const V& s, const V& t) {
        return le(d.mul(img(s, x), t), zero) == le(d.mul(s, pre(x, t)), zero);
      }, a, p, q));
  out.push_back(forall<V>("image-decomposition", budget, fmt,
      [&](const V& s, const V& x, const V& y) {
        return le(img(s, d.mul(x, y)), img(img(s, x), y));
      }, p, a, b));
  out.push_back(forall<V>("preimage-decomposition", budget, fmt,
      [&](const V& x, const V& y, const V& s) {
        return le(pre(d.mul(x, y), s), pre(x, pre(y, s)));
      }, a, b, p));
  if (local) {
    out.push_back(forall<V>("image-decomposition-eq", budget, fmt,
        [&](const V& s, const V& x, const V& y) {
          return img(s, d.mul(x, y)) == img(img(s, x), y);
        }, p, a, b));
    out.push_back(forall<V>("preimage-decomposition-eq", budget, fmt,
        [&](const V& x, const V& y, const V& s) {
          return pre(d.mul(x, y), s) == pre(x, pre(y, s));
        }, a, b, p));
    out.push_back(forall<V>("delta-product-preimage", budget, fmt,
        [&](const V& x, const V& y) { return d.delta(d.mul(x, y)) == pre(x, d.delta(y)); }, a, b));
    out.push_back(forall<V>("rho-product-image", budget, fmt,
        [&](const V& x, const V& y) { return d.rho(d.mul(x, y)) == img(d.rho(x), y); }, a, b));
  } else {
    for (const char* law : {"image-decomposition-eq", "preimage-decomposition-eq",
                            "delta-product-preimage", "rho-product-image"}) {
      out.push_back(not_applicable(law, "needs locality"));
    }
  }
  return out;
}

/// Domain/codomain duality through converse. Reports not-applicable when the
/// model has no converse.
template <typename D>
std::vector<LawReport> converse_duality_laws(const D& d, const CheckBudget& budget = {}) {
  using V = typename D::value_type;
  std::vector<LawReport> out;
  const char* names[] = {"delta-of-converse", "rho-of-converse", "delta-converse-test",
                         "rho-converse-test"};
  if (!d.has_conv()) {
    for (const char* law : names) out.push_back(not_applicable(law, "no converse"));
    return out;
  }
  const Universe<D> u(d);
  const auto a = u.element("a");
  const auto p = u.test("p");
  const auto fmt = u.formatter();
  auto cv = [&](const V& x) { return d.conv(x); };
  out.push_back(forall<V>(names[0], budget, fmt,
      [&](const V& x) { return d.delta(cv(x)) == d.rho(x); }, a));
  out.push_back(forall<V>(names[1], budget, fmt,
      [&](const V& x) { return d.rho(cv(x)) == d.delta(x); }, a));
  out.push_back(forall<V>(names[2], budget, fmt,
      [&](const V& x, const V& s) { return d.delta(d.mul(cv(x), s)) == d.rho(d.mul(s, x)); },
      a, p));
  out.push_back(forall<V>(names[3], budget, fmt,
      [&](const V& x, const V& s) { return d.rho(d.mul(cv(x), s)) == d.delta(d.mul(s, x)); },
      a, p));
  return out;
}

/// The zero-product criterion ab <= 0 <=> rho(a) delta(b) <= 0.
template <typename D>
LawReport zero_product_criterion(const D& d, const CheckBudget& budget = {}) {
  using V = typename D::value_type;
  const Universe<D> u(d);
  const auto a = u.element("a"), b = u.element("b");
  const V zero = d.zero();
  return forall<V>("zero-product-criterion", budget, u.formatter(),
      [&](const V& x, const V& y) {
        return d.leq(d.mul(x, y), zero) == d.leq(d.mul(d.rho(x), d.delta(y)), zero);
      }, a, b);
}

// Tabulated entry points.

std::vector<LawReport> check_predomain_calculus(const DomainStructure& d);
std::vector<LawReport> check_precodomain_calculus(const DomainStructure& d);
std::vector<LawReport> check_image_laws(const DomainStructure& d);
/// Converse duality on the owner's converse table; not-applicable reports
/// when there is none.
std::vector<LawReport> converse_duality_check(const DomainStructure& d);
/// The zero-product criterion holds exactly when dloc holds, and dloc and
/// cdloc agree.
std::vector<LawReport> check_locality(const DomainStructure& d);

}  // namespace kad
