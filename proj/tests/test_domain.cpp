#include <gtest/gtest.h>

#include "kad/domain.hpp"
#include "kad/domain_laws.hpp"
#include "kad/error.hpp"
#include "kad/models/conway.hpp"
#include "kad/relational_domain.hpp"
#include "support.hpp"

namespace kad {
namespace {

using testing::states_of;
using testing::successors;

Element el(const FiniteSemiring& s, const char* name) { return s.index_of(name); }

DomainStructure conway_domain(const std::string& name) {
  return compute_predomain(TestAlgebra::discrete(conway_model(name)));
}

void expect_all_hold(const std::vector<LawReport>& rs, const std::string& where) {
  for (const auto& r : rs) EXPECT_FALSE(r.fails()) << where << ": " << r;
}

TEST(DomainAxioms, ConstantOneSatisfiesOnlyD1) {
  const auto d = conway_domain("A2");
  const auto one = d.with_delta({d.one(), d.one()});
  EXPECT_TRUE(one.flags().d1);
  EXPECT_FALSE(one.flags().d2);
  const auto zero = d.with_delta({d.zero(), d.zero()});
  EXPECT_FALSE(zero.flags().d1);
  EXPECT_TRUE(zero.flags().d2);
}

TEST(DomainAxioms, ReportsWitnessForBrokenD2) {
  const auto d = conway_domain("A2").with_delta({1, 1});
  const auto rs = check_domain_axioms(d);
  const LawReport* r = find_law(rs, "d2");
  ASSERT_NE(r, nullptr);
  ASSERT_TRUE(r->fails());
  // delta(p a) <= p fails only for p = 0.
  EXPECT_EQ(r->witness_id("p"), d.zero());
}

TEST(DomainAxioms, NonTestValuesAreRejected) {
  const auto d = conway_domain("A3_1");
  const Element a = el(d.owner(), "a");
  EXPECT_THROW(d.with_delta({d.zero(), a, d.one()}), invalid_structure);
  EXPECT_THROW(d.with_delta({d.zero()}), invalid_structure);
}

TEST(DomainAxioms, A32IsPredomainWithoutLocality) {
  const auto d = conway_domain("A3_2");
  EXPECT_TRUE(d.flags().d1);
  EXPECT_TRUE(d.flags().d2);
  EXPECT_FALSE(d.flags().dloc);
  EXPECT_FALSE(d.is_local());
  const auto rs = check_domain_axioms(d);
  const LawReport* r = find_law(rs, "dloc");
  ASSERT_NE(r, nullptr);
  ASSERT_TRUE(r->fails());
  const Element a = el(d.owner(), "a");
  EXPECT_EQ(r->witness_id("a"), a);
  EXPECT_EQ(r->witness_id("b"), a);
  // delta(a delta(a)) = delta(a) = 1 but delta(a a) = delta(0) = 0.
  EXPECT_EQ(d.delta(d.mul(a, d.delta(a))), d.one());
  EXPECT_EQ(d.delta(d.mul(a, a)), d.zero());
}

TEST(DomainAxioms, A32HasZeroDivisors) {
  const auto s = conway_model("A3_2");
  const auto res = is_integral(s);
  EXPECT_FALSE(res.integral);
  ASSERT_TRUE(res.witness.has_value());
  EXPECT_EQ(res.witness->first, el(s, "a"));
  EXPECT_EQ(res.witness->second, el(s, "a"));
}

TEST(DomainAxioms, A33IsLocalAndIntegral) {
  const auto d = conway_domain("A3_3");
  EXPECT_TRUE(d.flags().dloc);
  EXPECT_TRUE(d.flags().cdloc);
  EXPECT_TRUE(is_integral(d.owner()).integral);
}

// Zero divisor search straight from the definition.
bool integral_oracle(const FiniteSemiring& s) {
  for (Element a : s.elements()) {
    for (Element b : s.elements()) {
      if (s.mul(a, b) == s.zero() && a != s.zero() && b != s.zero()) return false;
    }
  }
  return true;
}

TEST(DiscreteDomain, LocalExactlyWhenIntegral) {
  for (const auto& name : conway_model_names()) {
    const auto d = conway_domain(name);
    EXPECT_EQ(d.is_local(), integral_oracle(d.owner())) << name;
    EXPECT_EQ(is_integral(d.owner()).integral, integral_oracle(d.owner())) << name;
  }
}

// Over {0,1} tests the only domain map sends 0 to 0 and everything else to 1.
TEST(DiscreteDomain, UniqueMapSatisfyingBothAxioms) {
  for (const auto& name : conway_model_names()) {
    const auto d = conway_domain(name);
    const std::size_t n = d.size();
    std::vector<Element> expected(n, d.one());
    expected[d.zero()] = d.zero();
    EXPECT_EQ(d.delta_table(), expected) << name;
    int solutions = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<Element> m(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = (mask >> i) & 1 ? d.one() : d.zero();
      const auto candidate = d.with_delta(m);
      if (candidate.flags().d1 && candidate.flags().d2) {
        ++solutions;
        EXPECT_EQ(m, expected) << name;
      }
    }
    EXPECT_EQ(solutions, 1) << name;
  }
}

TEST(DiscreteDomain, MeetOfPreserversAgrees) {
  for (const auto& name : conway_model_names()) {
    const auto d = conway_domain(name);
    for (Element a : d.elements()) {
      EXPECT_EQ(meet_of_left_preservers(d.test_algebra(), a), d.delta(a)) << name;
    }
  }
}

TEST(RelationalDomainMaps, SmallExamples) {
  const auto& d = testing::rel2();
  const auto r = Relation::from_pairs(2, {{1, 2}});
  EXPECT_EQ(rel_value(2, d.delta(rel_index(r))), Relation::from_pairs(2, {{1, 1}}));
  EXPECT_EQ(rel_value(2, d.rho(rel_index(r))), Relation::from_pairs(2, {{2, 2}}));
  const auto p = Relation::test(2, {2});
  EXPECT_EQ(rel_value(2, d.preimage(rel_index(r), rel_index(p))), Relation::test(2, {1}));
  EXPECT_EQ(rel_value(2, d.image(rel_index(Relation::test(2, {1})), rel_index(r))),
            Relation::test(2, {2}));
}

// Domain, codomain, preimage and image against successor lists.
TEST(RelationalDomainMaps, AgreeWithSuccessorOracle) {
  const auto& tab = testing::rel3();
  const RelationalDomain rd(3);
  for (Element e : tab.elements()) {
    const Relation r = rel_value(3, e);
    const auto adj = successors(r);
    testing::StateSet dom, cod;
    for (int i = 0; i < 3; ++i) {
      if (!adj[i].empty()) dom.insert(i + 1);
      for (int j : adj[i]) cod.insert(j + 1);
    }
    EXPECT_EQ(states_of(rel_value(3, tab.delta(e))), dom);
    EXPECT_EQ(states_of(rel_value(3, tab.rho(e))), cod);
    EXPECT_EQ(states_of(rd.delta(r)), dom);
    EXPECT_EQ(states_of(rd.rho(r)), cod);
    for (Element pe : tab.tests()) {
      const Relation p = rel_value(3, pe);
      const auto ps = states_of(p);
      testing::StateSet pre, img;
      for (int i = 0; i < 3; ++i) {
        for (int j : adj[i]) {
          if (ps.count(j + 1)) pre.insert(i + 1);
          if (ps.count(i + 1)) img.insert(j + 1);
        }
      }
      EXPECT_EQ(states_of(rel_value(3, tab.preimage(e, pe))), pre);
      EXPECT_EQ(states_of(rd.preimage(r, p)), pre);
      EXPECT_EQ(states_of(rd.image(p, r)), img);
    }
  }
}

TEST(RelationalDomainMaps, PreimageRejectsNonTests) {
  const RelationalDomain rd(2);
  const auto r = Relation::from_pairs(2, {{1, 2}});
  EXPECT_THROW(rd.preimage(r, r), evaluation_error);
  EXPECT_THROW(rd.compl_of(r), evaluation_error);
}

TEST(RelationalDomainMaps, TabulatedFlags) {
  for (int n = 1; n <= 3; ++n) {
    const auto d = rel_domain(n);
    const auto& f = d.flags();
    EXPECT_TRUE(f.d1 && f.d2 && f.dloc && f.cd1 && f.cd2 && f.cdloc) << n;
  }
}

TEST(Calculus, ConwayModels) {
  for (const auto& name : conway_model_names()) {
    const auto d = conway_domain(name);
    expect_all_hold(check_predomain_calculus(d), name);
    expect_all_hold(check_precodomain_calculus(d), name);
    expect_all_hold(check_image_laws(d), name);
    expect_all_hold(check_locality(d), name);
  }
}

TEST(Calculus, NonLocalModelSkipsLocalEqualities) {
  const auto rs = check_image_laws(conway_domain("A3_2"));
  const LawReport* r = find_law(rs, "delta-product-preimage");
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->status, LawStatus::not_applicable);
}

TEST(Calculus, RelationsUpToThreeStates) {
  for (int n = 1; n <= 3; ++n) {
    const auto d = n == 3 ? testing::rel3() : rel_domain(n);
    const std::string where = "rel" + std::to_string(n);
    expect_all_hold(check_domain_axioms(d), where);
    expect_all_hold(check_predomain_calculus(d), where);
    expect_all_hold(check_precodomain_calculus(d), where);
    expect_all_hold(check_image_laws(d), where);
    expect_all_hold(check_locality(d), where);
    for (const auto& r : check_image_laws(d)) EXPECT_TRUE(r.exhaustive) << r;
  }
}

TEST(Calculus, SampledOnEightStates) {
  const RelationalDomain d(8);
  CheckBudget budget;
  budget.samples = 1000;
  expect_all_hold(predomain_calculus_laws(d, "delta", budget), "rel8");
  expect_all_hold(predomain_calculus_laws(Opposite<RelationalDomain>(d), "rho", budget), "rel8");
  expect_all_hold(image_laws(d, budget), "rel8");
  expect_all_hold(converse_duality_laws(d, budget), "rel8");
  expect_all_hold({zero_product_criterion(d, budget)}, "rel8");
}

TEST(Converse, RelationsHold) {
  const auto& d = testing::rel2();
  expect_all_hold(check_converse(d.owner()), "rel2");
  expect_all_hold(converse_duality_check(d), "rel2");
}

TEST(Converse, IdentityConverseOnBooleans) {
  const auto a2 = conway_model("A2").with_conv(std::vector<Element>{0, 1});
  expect_all_hold(check_converse(a2), "A2");
  const auto d = compute_predomain(TestAlgebra::discrete(a2));
  expect_all_hold(converse_duality_check(d), "A2");
}

TEST(Converse, MissingTable) {
  EXPECT_THROW(check_converse(conway_model("A2")), missing_capability);
  const auto rs = converse_duality_check(conway_domain("A2"));
  for (const auto& r : rs) EXPECT_EQ(r.status, LawStatus::not_applicable);
}

TEST(Converse, BrokenInvolutionIsCaught) {
  const auto a41 = conway_model("A4_1");
  // Swapping a and b is not order preserving on a chain.
  const auto bad = a41.with_conv(std::vector<Element>{el(a41, "0"), el(a41, "b"), el(a41, "1"), el(a41, "a")});
  EXPECT_FALSE(all_hold(check_converse(bad)));
}

TEST(Opposite, SwapsDomainAndCodomain) {
  const auto& d = testing::rel2();
  const Opposite<DomainStructure> op(d);
  for (Element a : d.elements()) {
    EXPECT_EQ(op.delta(a), d.rho(a));
    for (Element p : d.tests()) EXPECT_EQ(op.preimage(a, p), d.image(p, a));
  }
}

}  // namespace
}  // namespace kad
