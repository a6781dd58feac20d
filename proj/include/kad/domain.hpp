#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kad/finite_semiring.hpp"
#include "kad/law_report.hpp"
#include "kad/test_algebra.hpp"

namespace kad {

struct DomainFlags {
  bool d1 = false, d2 = false, dloc = false;
  bool cd1 = false, cd2 = false, cdloc = false;
};

/// A finite semiring with a test algebra and domain/codomain maps into it.
/// The flags are computed exhaustively on construction; arbitrary maps are
/// accepted so that counterexample structures can be represented.
class DomainStructure {
 public:
  using value_type = Element;

  /// Throws invalid_structure unless both tables are total and land in the tests.
  DomainStructure(TestAlgebra tests, std::vector<Element> delta, std::vector<Element> rho);

  const FiniteSemiring& owner() const { return tests_.owner(); }
  const TestAlgebra& test_algebra() const { return tests_; }
  const DomainFlags& flags() const { return flags_; }
  bool is_local() const { return flags_.dloc; }

  std::size_t size() const { return owner().size(); }
  std::vector<Element> elements() const { return owner().elements(); }
  Element add(Element a, Element b) const { return owner().add(a, b); }
  Element mul(Element a, Element b) const { return owner().mul(a, b); }
  Element zero() const { return owner().zero(); }
  Element one() const { return owner().one(); }
  bool leq(Element a, Element b) const { return owner().leq(a, b); }
  bool has_star() const { return owner().has_star(); }
  Element star(Element a) const { return owner().star(a); }
  bool has_conv() const { return owner().has_conv(); }
  Element conv(Element a) const { return owner().conv(a); }
  std::string format(Element a) const { return owner().name(a); }
  std::optional<Element> top() const { return top_; }

  const std::vector<Element>& tests() const { return tests_.members(); }
  bool is_test(Element a) const { return tests_.contains(a); }
  /// Throws evaluation_error for non-tests.
  Element compl_of(Element p) const { return tests_.compl_of(p); }
  std::vector<Element> atoms() const { return tests_.atoms(); }

  Element delta(Element a) const { return delta_[a]; }
  Element rho(Element a) const { return rho_[a]; }
  /// a : p = delta(a p). Throws evaluation_error when p is not a test.
  Element preimage(Element a, Element p) const;
  /// p : a = rho(p a). Throws evaluation_error when p is not a test.
  Element image(Element p, Element a) const;

  const std::vector<Element>& delta_table() const { return delta_; }
  const std::vector<Element>& rho_table() const { return rho_; }

  DomainStructure with_delta(std::vector<Element> delta) const;
  DomainStructure with_rho(std::vector<Element> rho) const;

 private:
  TestAlgebra tests_;
  std::vector<Element> delta_, rho_;
  DomainFlags flags_;
  std::optional<Element> top_;
};

/// The least left preserver of each element over the given tests, and the
/// least right preserver (computed in the opposite semiring) for codomain.
/// Throws invalid_structure if some element has no least preserver, which
/// only happens when the tests do not form a Boolean algebra.
DomainStructure compute_predomain(const TestAlgebra& tests);

/// Meet (test product) of all left preservers of `a`; agrees with delta(a)
/// whenever the least left preserver exists.
Element meet_of_left_preservers(const TestAlgebra& tests, Element a);

/// d1, d2, dloc, llp, gla and the codomain duals cd1, cd2, cdloc, lrp, gra.
std::vector<LawReport> check_domain_axioms(const DomainStructure& d);

/// c1-c5 and the derived converse laws. Throws missing_capability without a
/// converse table.
std::vector<LawReport> check_converse(const FiniteSemiring& s);

struct IntegralityResult {
  bool integral = true;
  /// A zero-divisor pair when not integral.
  std::optional<std::pair<Element, Element>> witness;
};

/// No zero divisors: ab <= 0 implies a <= 0 or b <= 0.
IntegralityResult is_integral(const FiniteSemiring& s);

}  // namespace kad
