#pragma once

#include <map>
#include <vector>

#include "kad/finite_semiring.hpp"

namespace kad {

/// A designated set of subidentities with a complement map. Construction only
/// checks that members and complements are valid carrier indices; the Boolean
/// algebra laws are reported by check_test_algebra.
class TestAlgebra {
 public:
  TestAlgebra(FiniteSemiring owner, std::vector<Element> members,
              const std::map<Element, Element>& complement);

  /// The two-element test algebra {0, 1}.
  static TestAlgebra discrete(const FiniteSemiring& s);
  /// Given members, derives each complement as the unique member q with
  /// p + q = 1 and pq = 0. Throws invalid_structure when a member has none.
  static TestAlgebra from_members(const FiniteSemiring& s, std::vector<Element> members);
  /// All subidentities of `s`, complemented via from_members.
  static TestAlgebra of_subidentities(const FiniteSemiring& s);

  const FiniteSemiring& owner() const { return owner_; }
  const std::vector<Element>& members() const { return members_; }
  bool contains(Element e) const { return e < is_member_.size() && is_member_[e]; }
  /// Throws evaluation_error for non-members.
  Element compl_of(Element p) const;
  /// Unchecked complement; only valid for members.
  Element compl_unchecked(Element p) const { return compl_[p]; }

  /// Members that are atoms of the test order (minimal non-zero members).
  std::vector<Element> atoms() const;
  bool is_discrete() const { return members_.size() == 2; }

 private:
  FiniteSemiring owner_;
  std::vector<Element> members_;
  std::vector<Element> compl_;
  std::vector<char> is_member_;
};

}  // namespace kad
