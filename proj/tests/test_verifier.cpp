#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "rainbow/verifier.hpp"

using namespace rainbow;

TEST(Catalog, EveryIdHasOneEntry) {
  ASSERT_EQ(catalog().size(), statement_count);
  std::set<std::string_view> names;
  for (std::size_t i = 0; i < catalog().size(); ++i) {
    const auto& s = catalog()[i];
    EXPECT_EQ(static_cast<std::size_t>(s.id), i);
    EXPECT_TRUE(names.insert(s.name).second);
    EXPECT_EQ(parse_statement_id(s.name), s.id);
    EXPECT_TRUE(s.hypothesis && s.conclusion && s.recheck && s.exhaustive && s.sample);
    EXPECT_NO_THROW(s.check_random(s.default_random)) << s.name;
  }
  EXPECT_FALSE(parse_statement_id("DRISKO").has_value());
  std::size_t theorems = 0;
  for (const auto& s : catalog()) theorems += s.kind == StatementKind::theorem;
  EXPECT_EQ(theorems, 10U);
}

TEST(Catalog, SamplersStayInTheirDomain) {
  for (const auto& s : catalog()) {
    for (std::uint64_t t = 0; t < 5; ++t) {
      Rng rng(derive_seed(3, t));
      const auto inst = s.sample(rng, s.default_random);
      EXPECT_EQ(inst.index(), static_cast<std::size_t>(s.domain)) << s.name;
      EXPECT_EQ(instance_from_json(s.domain, to_json(inst)), inst) << s.name;
    }
  }
}

TEST(Verify, ShippedExamples) {
  auto r = verify(StatementId::ETA_GE_PSI_2_5, Scope::exhaustive_scope({6}));
  EXPECT_EQ(r.instances_checked, 1U + 1 + 2 + 4 + 11 + 34 + 156);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_TRUE(r.passed());
  r = verify(StatementId::STRONG_CAMWAN_1_12, Scope::exhaustive_scope({4}));
  EXPECT_EQ(r.instances_checked, 13824U);
  EXPECT_EQ(r.hypothesis_hits, 13824U);
  EXPECT_TRUE(r.passed());
  r = verify(StatementId::CAMWAN_1_10, Scope::exhaustive_scope({4}));
  EXPECT_EQ(r.hypothesis_hits, 576U);
  EXPECT_TRUE(r.passed());
}

TEST(Verify, ConjectureReportsAreSound) {
  const auto r = verify(StatementId::CONJ_FRACD_5_1, Scope::exhaustive_scope({3, 2}));
  EXPECT_EQ(r.undecided, 0U);
  EXPECT_EQ(r.inconsistent, 0U);
  EXPECT_GT(r.hypothesis_hits, 0U);
  for (const auto& v : r.violations) {
    const auto h = hypergraph_from_json(v.instance);
    EXPECT_TRUE(statement(StatementId::CONJ_FRACD_5_1).hypothesis(h));
    EXPECT_LT(oracle::nu(h), 2U);
  }
}

TEST(Verify, RejectsScopesBeyondCaps) {
  EXPECT_THROW(verify(StatementId::STRONG_CAMWAN_1_12, Scope::exhaustive_scope({5})), ScopeError);
  EXPECT_THROW(verify(StatementId::ETA_GE_PSI_2_5, Scope::exhaustive_scope({8})), ScopeError);
  EXPECT_THROW(verify(StatementId::DRISKO_1_5, Scope::exhaustive_scope({3})), ScopeError);
  EXPECT_THROW(verify(StatementId::DRISKO_1_5, Scope::exhaustive_scope({4, 5})), ScopeError);
  EXPECT_THROW(verify(StatementId::CAMWAN_1_10, Scope::randomized_scope(10, 1, {40})), ScopeError);
  EXPECT_THROW(verify(StatementId::CAMWAN_1_10, Scope::supplied_scope()), ScopeError);
}

TEST(Verify, ReportsAreDeterministicAndSchedulingIndependent) {
  const auto scope = Scope::randomized_scope(300, 42, {3, 4});
  const auto a = verify(StatementId::CONJ_AB_1_4, scope);
  const auto b = verify(StatementId::CONJ_AB_1_4, scope);
  RunOptions parallel;
  parallel.jobs = 4;
  const auto c = verify(StatementId::CONJ_AB_1_4, scope, parallel);
  for (const auto* r : {&b, &c}) {
    EXPECT_EQ(r->instances_checked, a.instances_checked);
    EXPECT_EQ(r->hypothesis_hits, a.hypothesis_hits);
    EXPECT_EQ(r->violations.size(), a.violations.size());
  }
}

TEST(Verify, VacuousInstancesAreCountedNotJudged) {
  auto st = statement(StatementId::CAMWAN_1_10);
  st.conclusion = [](const Instance&) { return Verdict::fails; };
  st.recheck = st.conclusion;
  const auto r = run_statement(st, Scope::exhaustive_scope({3}));
  EXPECT_EQ(r.hypothesis_hits, 12U);
  EXPECT_EQ(r.violations.size(), 12U);
  auto strong = statement(StatementId::STRONG_CAMWAN_1_12);
  strong.hypothesis = [](const Instance& i) { return std::get<LatinSquare>(i).is_latin(); };
  strong.conclusion = st.conclusion;
  strong.recheck = st.conclusion;
  const auto s = run_statement(strong, Scope::exhaustive_scope({3}));
  EXPECT_EQ(s.instances_checked, 36U);
  EXPECT_EQ(s.hypothesis_hits, 2U);
}

TEST(Verify, PlantedViolationIsDetected) {
  auto st = statement(StatementId::DRISKO_1_5);
  // Demand one more edge than the theorem promises.
  st.conclusion = [](const Instance& i) {
    const auto& f = std::get<MatchingFamily>(i);
    return find_rainbow_matching(f, (f.size() + 1) / 2 + 1).feasible ? Verdict::holds : Verdict::fails;
  };
  st.recheck = [](const Instance& i) {
    const auto& f = std::get<MatchingFamily>(i);
    return oracle::rainbow(f) >= (f.size() + 1) / 2 + 1 ? Verdict::holds : Verdict::fails;
  };
  std::vector<Violation> seen;
  RunOptions opt;
  opt.on_violation = [&](const Statement&, const Violation& v) { seen.push_back(v); };
  const auto r = run_statement(st, Scope::exhaustive_scope({2, 2}), opt);
  EXPECT_GT(r.violations.size(), 0U);
  EXPECT_EQ(seen.size(), r.violations.size());
  EXPECT_FALSE(r.passed());
  for (const auto& v : r.violations) EXPECT_LT(oracle::rainbow(family_from_json(v.instance)), 3U);
}

TEST(Verify, DisagreeingRecheckIsInconsistentNotAViolation) {
  auto st = statement(StatementId::DRISKO_1_5);
  st.conclusion = [](const Instance&) { return Verdict::fails; };
  const auto r = run_statement(st, Scope::exhaustive_scope({2, 2}));
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.inconsistent, r.hypothesis_hits);
  EXPECT_FALSE(r.passed());
}

TEST(Accommodating, BothDirections) {
  auto r = check_accommodating({1, 2, 2}, 2, Scope::randomized_scope(500, 7));
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.hypothesis_hits, 500U);
  r = check_accommodating({1, 2, 2}, 2, Scope::exhaustive_scope({3}));
  EXPECT_TRUE(r.passed());
  r = check_accommodating({0, 2, 2}, 2, Scope::randomized_scope(1, 7));
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.hypothesis_hits, 1U);
  r = check_accommodating({1, 2, 3, 3, 3}, 3, Scope::randomized_scope(300, 8));
  EXPECT_TRUE(r.passed());
  EXPECT_THROW(check_accommodating({2, 1, 2}, 2, Scope::randomized_scope(1, 1)), std::invalid_argument);
}

TEST(Hunt, ConjectureExamples) {
  auto r = hunt(StatementId::CONJ_AB_1_4, 10000, 2024, {3, 4});
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.hypothesis_hits, 10000U);
  EXPECT_EQ(r.to_json()["note"], "no counterexample found in budget");
  r = hunt(StatementId::CONJ_SYM_1_3, 10000, 2025, {3});
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.hypothesis_hits, 10000U);
  EXPECT_THROW(hunt(StatementId::DRISKO_1_5, 10, 1), ScopeError);
}

TEST(Hunt, EveryNonTheoremSamplerMeetsItsHypothesisOften) {
  for (const auto& s : catalog()) {
    if (s.kind == StatementKind::theorem) continue;
    const auto r = hunt(s.id, 100, 77);
    EXPECT_GT(r.hypothesis_hits, 0U) << s.name;
    EXPECT_EQ(r.undecided, 0U) << s.name;
    EXPECT_EQ(r.inconsistent, 0U) << s.name;
  }
}

TEST(Suite, TheoremScopesAreClean) {
  for (const auto& [id, scope] : theorem_suite()) {
    const auto r = verify(id, scope);
    EXPECT_TRUE(r.passed()) << r.to_json().dump();
    EXPECT_GT(r.hypothesis_hits, 0U) << r.name;
  }
}
