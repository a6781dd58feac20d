#include "kad/test_algebra.hpp"

#include <algorithm>
#include <limits>

#include "kad/error.hpp"

namespace kad {

namespace {
constexpr Element kNone = std::numeric_limits<Element>::max();
}

TestAlgebra::TestAlgebra(FiniteSemiring owner, std::vector<Element> members,
                         const std::map<Element, Element>& complement)
    : owner_(std::move(owner)), members_(std::move(members)) {
  const std::size_t n = owner_.size();
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  is_member_.assign(n, 0);
  compl_.assign(n, kNone);
  for (Element m : members_) {
    if (m >= n) throw invalid_structure("test member out of range");
    is_member_[m] = 1;
  }
  for (Element m : members_) {
    auto it = complement.find(m);
    if (it == complement.end()) throw invalid_structure("test member without complement");
    if (it->second >= n || !is_member_[it->second]) {
      throw invalid_structure("complement of a test must be a test");
    }
    compl_[m] = it->second;
  }
}

TestAlgebra TestAlgebra::discrete(const FiniteSemiring& s) {
  return TestAlgebra(s, {s.zero(), s.one()}, {{s.zero(), s.one()}, {s.one(), s.zero()}});
}

TestAlgebra TestAlgebra::from_members(const FiniteSemiring& s, std::vector<Element> members) {
  std::map<Element, Element> compl_map;
  for (Element p : members) {
    Element found = kNone;
    for (Element q : members) {
      if (s.add(p, q) == s.one() && s.mul(p, q) == s.zero() && s.mul(q, p) == s.zero()) {
        found = q;
        break;
      }
    }
    if (found == kNone) {
      throw invalid_structure("test '" + s.name(p) + "' has no complement among the members");
    }
    compl_map[p] = found;
  }
  return TestAlgebra(s, std::move(members), compl_map);
}

TestAlgebra TestAlgebra::of_subidentities(const FiniteSemiring& s) {
  std::vector<Element> sid;
  for (Element a = 0; a < s.size(); ++a) {
    if (s.leq(a, s.one())) sid.push_back(a);
  }
  return from_members(s, std::move(sid));
}

Element TestAlgebra::compl_of(Element p) const {
  if (!contains(p)) throw evaluation_error("complement of non-test '" + owner_.name(p) + "'");
  return compl_[p];
}

std::vector<Element> TestAlgebra::atoms() const {
  std::vector<Element> out;
  for (Element p : members_) {
    if (p == owner_.zero()) continue;
    bool minimal = true;
    for (Element q : members_) {
      if (q != p && q != owner_.zero() && owner_.leq(q, p)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(p);
  }
  return out;
}

}  // namespace kad
