#include <gtest/gtest.h>

#include "lfgt/verify.hpp"
#include "support.hpp"

namespace lfgt {
namespace {

using test::raised;

TEST(Instances, GenerationIsAPureFunctionOfTheSpec) {
  InstanceSpec spec{42, 12, 6, std::nullopt};
  for (std::size_t i = 0; i < 20; ++i) {
    InstanceSpec s = case_spec(spec, i);
    EXPECT_EQ(instance_to_json(gen_instance(s)), instance_to_json(gen_instance(s)));
  }
  EXPECT_NE(case_spec(spec, 0).seed, case_spec(spec, 1).seed);
}

TEST(Instances, RespectBoundsAndShape) {
  InstanceSpec spec{3, 8, 4, std::nullopt};
  for (std::size_t i = 0; i < 60; ++i) {
    Instance in = gen_instance(case_spec(spec, i));
    EXPECT_LE(in.group->size(), 8u);
    EXPECT_LE(in.lattice->size(), 4u);
    EXPECT_TRUE(is_lsubgroup_of(in.eta, in.mu).holds);
    if (in.hints.chain_only) {
      EXPECT_TRUE(is_upper_well_ordered(*in.lattice));
    }
    if (in.hints.with_hom) {
      ASSERT_TRUE(in.hom.has_value());
      EXPECT_TRUE(in.hom->surjective());
    }
  }
}

TEST(Instances, ForcedHints) {
  ShapeHints h;
  h.chain_only = true;
  h.with_hom = true;
  InstanceSpec spec{5, 12, 5, h};
  for (std::size_t i = 0; i < 20; ++i) {
    Instance in = gen_instance(case_spec(spec, i));
    EXPECT_EQ(in.hints, h);
    EXPECT_TRUE(is_upper_well_ordered(*in.lattice));
    EXPECT_TRUE(in.hom.has_value());
  }
}

TEST(Instances, RejectBadBounds) {
  EXPECT_EQ(raised([] { gen_instance(InstanceSpec{1, 0, 3, std::nullopt}); }), ErrorKind::BadSpec);
  EXPECT_EQ(raised([] { gen_instance(InstanceSpec{1, 6, -1, std::nullopt}); }), ErrorKind::BadSpec);
  EXPECT_EQ(raised([] { run_suite(InstanceSpec{}, 0); }), ErrorKind::BadSpec);
}

TEST(Instances, JsonRoundTripReplaysTheSameResults) {
  InstanceSpec spec{11, 12, 6, std::nullopt};
  for (std::size_t i = 0; i < 10; ++i) {
    Instance in = gen_instance(case_spec(spec, i));
    auto doc = instance_to_json(in);
    Instance back = instance_from_json(doc);
    EXPECT_EQ(instance_to_json(back), doc);
    for (const char *name : {"normal-implies-pronormal", "level-monotonicity", "conjugate-levels-are-conjugate-subgroups"}) {
      PropertyResult a = run_property(name, in), b = run_property(name, back);
      EXPECT_EQ(a.applicable, b.applicable);
      EXPECT_EQ(a.failure, b.failure);
    }
  }
  EXPECT_EQ(raised([] { instance_from_json(nlohmann::ordered_json{{"seed", 1}}); }), ErrorKind::BadSpec);
}

TEST(Suite, UnknownEntryName) {
  Instance in = gen_instance(InstanceSpec{});
  EXPECT_EQ(raised([&] { run_property("no-such-entry", in); }), ErrorKind::BadParam);
}

TEST(Suite, SmallRunIsGreenAndDeterministic) {
  InstanceSpec spec{7, 8, 4, std::nullopt};
  SuiteReport a = run_suite(spec, 40), b = run_suite(spec, 40);
  EXPECT_EQ(a.entries.size(), theorem_suite().size());
  EXPECT_TRUE(a.failures.empty()) << to_json(a, false).dump(2);
  EXPECT_EQ(to_json(a, false), to_json(b, false));
  std::size_t applicable = 0;
  for (const auto &e : a.entries)
    applicable += e.applicable;
  EXPECT_GT(applicable, 40u);
}

TEST(Suite, ReportJsonRoundTrip) {
  SuiteReport r = run_suite(InstanceSpec{9, 6, 3, std::nullopt}, 5);
  Instance in = gen_instance(case_spec(r.spec, 2));
  r.failures.push_back({"level-monotonicity", 2, "synthetic", instance_to_json(in)});
  auto doc = to_json(r, false);
  SuiteReport back = suite_report_from_json(doc);
  EXPECT_EQ(to_json(back, false), doc);
  // A recorded failure replays from its stored instance.
  Instance replay = instance_from_json(back.failures.front().instance);
  EXPECT_EQ(instance_to_json(replay), instance_to_json(in));
  EXPECT_EQ(raised([] { suite_report_from_json(nlohmann::ordered_json::object()); }), ErrorKind::BadSpec);
}

TEST(Oracles, GenerateMatchesExhaustiveIntersection) {
  InstanceSpec spec{13, 6, 3, std::nullopt};
  for (std::size_t i = 0; i < 40; ++i) {
    Instance in = gen_instance(case_spec(spec, i));
    LSubset oracle = oracle_generate(in.eta, in.mu);
    EXPECT_EQ(oracle, check::closure(in.eta));
    if (has_sup_property(in.eta) || is_distributive(*in.lattice)) {
      EXPECT_EQ(generate(in.eta, in.mu), oracle);
    }
    EXPECT_TRUE(contains(oracle, in.eta));
  }
}

TEST(Oracles, NormalizerIsTheLargestNormalizingSubgroup) {
  InstanceSpec spec{17, 6, 3, std::nullopt};
  for (std::size_t i = 0; i < 40; ++i) {
    Instance in = gen_instance(case_spec(spec, i));
    if (!is_distributive(*in.lattice))
      continue;
    EXPECT_EQ(normalizer(in.eta, in.mu), oracle_normalizer_maximality(in.eta, in.mu));
  }
}

TEST(Oracles, SmallEnumerations) {
  auto z2 = test::group("C(2)");
  EXPECT_EQ(enumerate_lsubgroups(constant_lsubset(z2, test::lattice("chain(2)"), Value{1})).size(), 3u);
  auto c3 = test::lattice("chain(3)");
  EXPECT_EQ(enumerate_lsubgroups(constant_lsubset(z2, c3, c3->top())).size(), 6u);
  test::Example ex;
  EXPECT_EQ(raised([&] { oracle_generate(ex.eta(), ex.mu()); }), ErrorKind::OracleCapExceeded);
  EXPECT_EQ(raised([&] { enumerate_lsubgroups(ex.mu()); }), ErrorKind::OracleCapExceeded);
}

TEST(Checkers, PronormalVerdictsRevalidate) {
  test::Example ex;
  Verdict v = is_pronormal(ex.eta(), ex.mu());
  EXPECT_EQ(check::pronormal_verdict(ex.eta(), ex.mu(), v), std::nullopt);
  Verdict tampered = v;
  tampered.witness.pop_back();
  EXPECT_NE(check::pronormal_verdict(ex.eta(), ex.mu(), tampered), std::nullopt);
  tampered = v;
  tampered.witness.front().certificate = ex.point("u@(1 2 3)");
  EXPECT_NE(check::pronormal_verdict(ex.eta(), ex.mu(), tampered), std::nullopt);
}

// Skipping the conjugate comparison must be caught by the independent checker.
TEST(Checkers, WeakCertificateCheckIsDetected) {
  test::Example ex;
  auto c2 = test::lattice("chain(2)");
  LSubset h = characteristic(ex.s4, c2, test::generated(*ex.s4, {"(1 3)"}));
  LSubset k = characteristic(ex.s4, c2, ex.d1);
  PronormalOptions weak;
  weak.weak_certificate_check = true;
  Verdict v = is_pronormal(h, k, weak);
  EXPECT_TRUE(v.holds);
  EXPECT_NE(check::pronormal_verdict(h, k, v), std::nullopt);
  EXPECT_FALSE(crisp_pronormal(*ex.s4, ex.d1, test::generated(*ex.s4, {"(1 3)"})).holds);
}

TEST(Checkers, MaximalCounterexampleRevalidates) {
  auto z2 = test::group("C(2)");
  auto c3 = test::lattice("chain(3)");
  LSubset eta = make_lsubset(z2, c3, {{"0", "1"}}, "0");
  LSubset mu = constant_lsubset(z2, c3, c3->top());
  Verdict v = is_maximal(eta, mu);
  EXPECT_EQ(check::maximal_counterexample(eta, mu, v), std::nullopt);
  v.counterexample->subset = mu;
  EXPECT_NE(check::maximal_counterexample(eta, mu, v), std::nullopt);
}

TEST(Checkers, AxiomsAndConjugates) {
  test::Example ex;
  EXPECT_TRUE(check::axioms(ex.eta()));
  EXPECT_FALSE(check::axioms(make_lsubset(ex.s4, ex.m, {{"(1 2)", "u"}}, "l")));
  LPoint p = ex.point("d@(1 2 3)");
  EXPECT_EQ(check::conjugate(ex.eta(), p), conjugate(ex.eta(), p, ex.mu()));
  EXPECT_EQ(check::closure(ex.eta()), ex.eta());
}

} // namespace
} // namespace lfgt
