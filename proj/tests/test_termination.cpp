#include <gtest/gtest.h>

#include "kad/models/conway.hpp"
#include "kad/relational_domain.hpp"
#include "kad/termination.hpp"
#include "support.hpp"

namespace kad {
namespace {

using testing::has_cycle;
using testing::states_of;
using testing::union_of_powers;

bool transitive_oracle(const Relation& r) {
  const auto pairs = union_of_powers(r, false);
  const auto own = r.pairs();
  return pairs.size() == own.size();
}

// Diamond-form Löb holds on a finite frame exactly when it is transitive and
// has no cycles.
bool loebian_oracle(const Relation& r) { return transitive_oracle(r) && !has_cycle(r); }

Relation successor(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Relation::from_pairs(n, edges);
}

TEST(Noetherian, SuccessorRelation) {
  const RelationalDomain d(4);
  EXPECT_TRUE(is_noetherian(d, successor(4)).value);
  EXPECT_TRUE(is_well_founded(d, successor(4)).value);
  const auto v = is_noetherian(d, successor(4) + Relation::from_pairs(4, {{4, 2}}));
  EXPECT_FALSE(v.value);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(states_of(*v.witness), (testing::StateSet{1, 2, 3, 4}));
}

TEST(Noetherian, ZeroAndOne) {
  const RelationalDomain d(3);
  EXPECT_TRUE(is_noetherian(d, d.zero()).value);
  EXPECT_FALSE(is_noetherian(d, d.one()).value);
  EXPECT_FALSE(is_noetherian(d, Relation::from_pairs(3, {{2, 2}})).value);
}

TEST(Noetherian, RandomGraphsAgreeWithCycleSearch) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 6;
    const RelationalDomain d(n);
    const auto r = testing::random_digraph(n, rng);
    const auto v = is_noetherian(d, r);
    EXPECT_EQ(v.value, !has_cycle(r)) << r.to_string();
    EXPECT_TRUE(v.exhaustive);
    if (!v.value) {
      // Every state of the witness has a successor inside it.
      ASSERT_TRUE(v.witness.has_value());
      EXPECT_FALSE(v.witness->diagonal_states().empty());
      EXPECT_TRUE(d.leq(*v.witness, d.preimage(r, *v.witness)));
    }
    EXPECT_EQ(is_well_founded(d, r).value, is_noetherian(d, transpose(r)).value);
  }
}

TEST(Noetherian, TabulatedAgreesOnThreeStates) {
  const auto& d = testing::rel3();
  for (Element a : d.elements()) {
    const Relation r = rel_value(3, a);
    EXPECT_EQ(is_noetherian(d, a).value, !has_cycle(r)) << r.to_string();
    EXPECT_EQ(is_well_founded(d, a).value, !has_cycle(r)) << r.to_string();
  }
}

TEST(Loeb, Examples) {
  const RelationalDomain d(3);
  const auto chain = successor(3);
  EXPECT_FALSE(is_loebian(d, chain).value);
  EXPECT_TRUE(is_loebian(d, transitive_closure(d, chain)).value);
  EXPECT_FALSE(is_loebian(d, Relation::from_pairs(3, {{1, 1}})).value);
  EXPECT_TRUE(is_loebian(d, d.zero()).value);
}

TEST(Loeb, RandomGraphsAgreeWithOracle) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 5;
    const RelationalDomain d(n);
    auto r = testing::random_digraph(n, rng);
    if (trial % 2) r = transitive_closure(d, r);
    const auto v = is_loebian(d, r);
    EXPECT_EQ(v.value, loebian_oracle(r)) << r.to_string();
    if (!v.value) {
      ASSERT_TRUE(v.witness.has_value());
      const Relation& p = *v.witness;
      const auto ap = d.preimage(r, p);
      EXPECT_FALSE(d.leq(ap, d.preimage(r, test_minus(d, p, ap))));
    }
  }
}

TEST(Loeb, SampledBeyondEnumeration) {
  const RelationalDomain d(20, 12);
  const auto v = is_loebian(d, transitive_closure(d, successor(20)));
  EXPECT_TRUE(v.value);
  EXPECT_FALSE(v.exhaustive);
}

TEST(TransitiveClosure, MatchesPowers) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 6;
    const RelationalDomain d(n);
    const auto r = testing::random_digraph(n, rng);
    const auto plus = transitive_closure(d, r);
    const auto v = plus.pairs();
    EXPECT_EQ((std::set<std::pair<int, int>>(v.begin(), v.end())), union_of_powers(r, false));
  }
}

TEST(Report, CollectsAllThree) {
  const RelationalDomain d(3);
  const auto rep = termination_report(d, successor(3));
  EXPECT_TRUE(rep.noetherian.value);
  EXPECT_TRUE(rep.well_founded.value);
  EXPECT_FALSE(rep.loebian.value);
}

void expect_all_hold(const std::vector<LawReport>& rs, const std::string& where) {
  for (const auto& r : rs) EXPECT_FALSE(r.fails()) << where << ": " << r;
}

TEST(TerminationLaws, RelationsUpToThreeStates) {
  expect_all_hold(check_termination_laws(rel_domain(1)), "rel1");
  expect_all_hold(check_termination_laws(testing::rel2()), "rel2");
  const auto rs = check_termination_laws(testing::rel3());
  expect_all_hold(rs, "rel3");
  for (const auto& r : rs) EXPECT_TRUE(r.exhaustive) << r;
}

TEST(TerminationLaws, ConwayModels) {
  for (const auto& name : conway_model_names()) {
    const auto d = compute_predomain(TestAlgebra::discrete(conway_model(name)));
    const auto rs = check_termination_laws(d);
    expect_all_hold(rs, name);
    if (!d.is_local()) {
      const LawReport* r = find_law(rs, "noetherian-iff-plus");
      ASSERT_NE(r, nullptr);
      EXPECT_EQ(r->status, LawStatus::not_applicable) << name;
    }
  }
}

TEST(TerminationLaws, SampledOnFiveStates) {
  CheckBudget budget;
  budget.samples = 1000;
  expect_all_hold(termination_laws(RelationalDomain(5), budget), "rel5");
}

// In a discrete model only 0 is Noetherian: any a != 0 has a : 1 = 1.
TEST(TerminationLaws, DiscreteModelsOnlyZeroTerminates) {
  for (const auto& name : conway_model_names()) {
    const auto d = compute_predomain(TestAlgebra::discrete(conway_model(name)));
    for (Element a : d.elements()) {
      EXPECT_EQ(is_noetherian(d, a).value, a == d.zero()) << name << ' ' << d.format(a);
    }
  }
}

}  // namespace
}  // namespace kad
