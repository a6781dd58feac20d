#pragma once

#include <deque>
#include <vector>

#include "kad/domain.hpp"
#include "kad/error.hpp"
#include "kad/law_report.hpp"
#include "kad/universe.hpp"

namespace kad {

/// Outcome of computing a* : p. `preimage_evaluations` counts preimages of
/// single atoms, the unit of work of both algorithms.
template <typename V>
struct ReachResult {
  V result;
  std::size_t iterations = 0;
  std::size_t preimage_evaluations = 0;
  /// Accumulated test after each step, when requested.
  std::vector<V> trace;
};

enum class WorklistOrder { fifo, lifo };

namespace detail {

template <typename D, typename V = typename D::value_type>
std::vector<V> atoms_below(const D& d, const std::vector<V>& atoms, const V& x) {
  std::vector<V> out;
  for (const auto& r : atoms) {
    if (d.leq(r, x)) out.push_back(r);
  }
  return out;
}

template <typename D, typename V = typename D::value_type>
void require_test(const D& d, const V& p) {
  if (!d.is_test(p)) throw evaluation_error("reach target " + d.format(p) + " is not a test");
}

}  // namespace detail

/// Least fixed point of x |-> p + a : x by ascending iteration from p, where
/// a : x is evaluated as the sum of a : r over the atoms r below x.
/// `iterations` counts the steps that enlarged x.
template <typename D, typename V = typename D::value_type>
ReachResult<V> reach_naive(const D& d, const V& a, const V& p, bool keep_trace = false) {
  detail::require_test(d, p);
  const auto atoms = d.atoms();
  ReachResult<V> r{p, 0, 0, {}};
  if (keep_trace) r.trace.push_back(p);
  while (true) {
    V next = p;
    for (const auto& atom : detail::atoms_below(d, atoms, r.result)) {
      next = d.add(next, d.preimage(a, atom));
      ++r.preimage_evaluations;
    }
    if (next == r.result) return r;
    r.result = std::move(next);
    ++r.iterations;
    if (keep_trace) r.trace.push_back(r.result);
  }
}

/// a* : p = p + (a p')* : (a : p) as a worklist over atoms: every atom of the
/// accumulated test is expanded at most once and only new atoms are queued.
/// Stops as soon as the accumulated test is 1. Throws missing_capability
/// ("requires locality") on models without dloc.
template <typename D, typename V = typename D::value_type>
ReachResult<V> reach_efficient(const D& d, const V& a, const V& p,
                               WorklistOrder order = WorklistOrder::fifo, bool keep_trace = false) {
  if (!d.is_local()) throw missing_capability("efficient reachability requires locality");
  detail::require_test(d, p);
  const auto atoms = d.atoms();
  const V one = d.one();
  ReachResult<V> r{p, 0, 0, {}};
  if (keep_trace) r.trace.push_back(p);
  std::deque<V> work;
  for (auto& atom : detail::atoms_below(d, atoms, p)) work.push_back(std::move(atom));
  while (!work.empty() && !(r.result == one)) {
    V atom;
    if (order == WorklistOrder::fifo) {
      atom = std::move(work.front());
      work.pop_front();
    } else {
      atom = std::move(work.back());
      work.pop_back();
    }
    const V reached = d.preimage(a, atom);
    ++r.preimage_evaluations;
    ++r.iterations;
    const V fresh = d.mul(reached, d.compl_of(r.result));
    if (d.leq(fresh, d.zero())) continue;
    r.result = d.add(r.result, fresh);
    if (keep_trace) r.trace.push_back(r.result);
    for (auto& n : detail::atoms_below(d, atoms, fresh)) work.push_back(std::move(n));
  }
  return r;
}

/// Star and preimage: delta(a)* = 1, delta(a*) = 1, the unfold inequalities
/// and, on local models, their equalities, invariant induction, the
/// star-induction and efficient-unfold forms and the simulation rule.
template <typename D>
std::vector<LawReport> star_preimage_laws(const D& d, const CheckBudget& budget = {}) {
  using V = typename D::value_type;
  const Universe<D> u(d);
  const auto a = u.element("a"), b = u.element("b"), c = u.element("c");
  const auto p = u.test("p"), q = u.test("q");
  const auto fmt = u.formatter();
  auto le = [&](const V& x, const V& y) { return d.leq(x, y); };
  auto pre = [&](const V& x, const V& t) { return d.preimage(x, t); };
  auto s = [&](const V& x) { return d.star(x); };
  auto cp = [&](const V& t) { return d.compl_of(t); };
  const V one = d.one();

  std::vector<LawReport> out;
  out.push_back(forall<V>("delta-star-is-one", budget, fmt,
      [&](const V& x) { return s(d.delta(x)) == one; }, a));
  out.push_back(forall<V>("delta-of-star-is-one", budget, fmt,
      [&](const V& x) { return d.delta(s(x)) == one; }, a));
  out.push_back(forall<V>("star-preimage-unfold-left", budget, fmt,
      [&](const V& x, const V& t) { return le(d.add(t, pre(s(x), pre(x, t))), pre(s(x), t)); },
      a, p));
  out.push_back(forall<V>("star-preimage-unfold-right", budget, fmt,
      [&](const V& x, const V& t) { return le(d.add(t, pre(x, pre(s(x), t))), pre(s(x), t)); },
      a, p));
  if (!d.is_local()) {
    for (const char* law : {"star-preimage-unfold-eq", "preimage-invariant",
                            "preimage-star-induction", "preimage-star-complement-unfold",
                            "preimage-star-efficient-unfold", "preimage-star-simulation"}) {
      out.push_back(not_applicable(law, "needs locality"));
    }
    return out;
  }
  out.push_back(forall<V>("star-preimage-unfold-eq", budget, fmt,
      [&](const V& x, const V& t) {
        const V st = pre(s(x), t);
        return d.add(t, pre(s(x), pre(x, t))) == st && d.add(t, pre(x, st)) == st;
      }, a, p));
  out.push_back(forall<V>("preimage-invariant", budget, fmt,
      [&](const V& x, const V& t) { return !le(pre(x, t), t) || le(pre(s(x), t), t); }, a, p));
  out.push_back(forall<V>("preimage-star-induction", budget, fmt,
      [&](const V& x, const V& t, const V& w) {
        return !le(d.add(pre(x, t), w), t) || le(pre(s(x), w), t);
      }, a, p, q));
  out.push_back(forall<V>("preimage-star-complement-unfold", budget, fmt,
      [&](const V& x, const V& t) {
        return le(pre(s(x), t), d.add(t, pre(s(x), d.mul(cp(t), pre(x, t)))));
      }, a, p));
  out.push_back(forall<V>("preimage-star-efficient-unfold", budget, fmt,
      [&](const V& x, const V& t) {
        return pre(s(x), t) == d.add(t, pre(s(d.mul(x, cp(t))), pre(x, t)));
      }, a, p));
  out.push_back(forall<V>("preimage-star-simulation", budget, fmt,
      [&](const V& x, const V& y, const V& z, const V& t, const V& w) {
        const V ct = pre(z, t);
        return !le(d.add(pre(d.mul(x, z), t), pre(y, w)), ct) || le(pre(d.mul(s(x), y), w), ct);
      }, a, b, c, p, q));
  return out;
}

std::vector<LawReport> check_star_preimage_laws(const DomainStructure& d);

}  // namespace kad
