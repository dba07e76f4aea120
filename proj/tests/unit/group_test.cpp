#include <gtest/gtest.h>

#include "lfgt/permutation.hpp"
#include "support.hpp"

namespace lfgt {
namespace {

using test::elements;
using test::everything;
using test::generated;
using test::perm_group;
using test::raised;

TEST(Permutation, ComposeAppliesRightFactorFirst) {
  Permutation p = parse_cycles("(1 2)", 3), q = parse_cycles("(2 3)", 3);
  EXPECT_EQ(format_cycles(compose(p, q)), "(1 2 3)");
  EXPECT_EQ(parse_cycles("(1 2)(2 3)", 3), compose(p, q));
  EXPECT_EQ(format_cycles(inverse(compose(p, q))), "(1 3 2)");
  EXPECT_TRUE(is_identity(compose(p, inverse(p))));
}

TEST(Permutation, CanonicalCycleText) {
  EXPECT_EQ(format_cycles(parse_cycles("(3 1)(4 2)", 4)), "(1 3)(2 4)");
  EXPECT_EQ(format_cycles(parse_cycles("e", 4)), "e");
  EXPECT_EQ(format_cycles(parse_cycles("(2 3 1)", 4)), "(1 2 3)");
}

TEST(Permutation, RejectsBadCycles) {
  EXPECT_EQ(raised([] { parse_cycles("(1 5)", 4); }), ErrorKind::BadCycle);
  EXPECT_EQ(raised([] { parse_cycles("(1 2", 4); }), ErrorKind::BadCycle);
  EXPECT_EQ(raised([] { parse_cycles("(1 1)", 4); }), ErrorKind::BadCycle);
}

TEST(Group, TrivialAndCyclicTables) {
  FiniteGroup t = build_group_table({"e"}, {{"e"}});
  EXPECT_EQ(t.size(), 1u);
  FiniteGroup z3 = build_group_table({"0", "1", "2"}, {{"0", "1", "2"}, {"1", "2", "0"}, {"2", "0", "1"}});
  EXPECT_EQ(z3.name(z3.identity()), "0");
  EXPECT_EQ(z3.name(z3.inv(z3.element("1"))), "2");
  EXPECT_EQ(z3.element("e"), z3.identity());
}

TEST(Group, TableValidation) {
  EXPECT_EQ(raised([] { build_group_table({"0", "1"}, {{"0", "1"}, {"1", "1"}}); }),
            ErrorKind::MalformedTable);
  EXPECT_EQ(raised([] { build_group_table({"0", "1"}, {{"0", "1"}}); }), ErrorKind::MalformedTable);
  EXPECT_EQ(raised([] { build_group_table({"0", "1"}, {{"0", "2"}, {"1", "0"}}); }),
            ErrorKind::MalformedTable);
  EXPECT_EQ(raised([] { build_group_table({"0", "1", "2"}, {{"0", "2", "1"}, {"2", "1", "0"}, {"1", "0", "2"}}); }),
            ErrorKind::NoIdentity);
  // A Latin square with identity that is not associative (order 5 loop).
  EXPECT_EQ(raised([] {
              build_group_table({"e", "a", "b", "c", "d"}, {{"e", "a", "b", "c", "d"},
                                                            {"a", "e", "c", "d", "b"},
                                                            {"b", "d", "e", "a", "c"},
                                                            {"c", "b", "d", "e", "a"},
                                                            {"d", "c", "a", "b", "e"}});
            }),
            ErrorKind::NotAssociative);
}

TEST(Group, PermutationGroups) {
  auto d4 = perm_group(4, {"(2 4)", "(1 2 3 4)"});
  EXPECT_EQ(d4->size(), 8u);
  auto s4 = perm_group(4, {"(1 2)", "(1 2 3 4)"});
  EXPECT_EQ(s4->size(), 24u);
  EXPECT_EQ(perm_group(3, {})->size(), 1u);
  EXPECT_EQ(raised([] { build_group_perm(4, std::vector<std::string>{"(1 5)"}); }), ErrorKind::BadCycle);
  EXPECT_EQ(raised([] { build_group_perm(5, std::vector<std::string>{"(1 2)", "(1 2 3 4 5)"}, "", 100); }),
            ErrorKind::OrderCap);
}

TEST(Group, BreadthFirstElementOrder) {
  auto a = perm_group(4, {"(1 2)", "(1 2 3 4)"});
  auto b = perm_group(4, {"(1 2)", "(1 2 3 4)"});
  EXPECT_EQ(a->names(), b->names());
  EXPECT_EQ(a->identity().id, 0u);
  EXPECT_EQ(a->name(Element{0}), "e");
  // Layer one is the generators, sorted by image vector.
  EXPECT_EQ(a->name(Element{1}), "(1 2)");
  EXPECT_EQ(a->name(Element{2}), "(1 2 3 4)");
  // Any cycle spelling resolves to the same element.
  EXPECT_EQ(a->element("(2 3 4 1)"), a->element("(1 2 3 4)"));
  EXPECT_EQ(raised([&] { a->element("(1 5)"); }), ErrorKind::UnknownElement);
}

TEST(Group, SubgroupClosure) {
  auto s4 = perm_group(4, {"(1 2)", "(1 2 3 4)"});
  ElementSet d4 = generated(*s4, {"(2 4)", "(1 2 3 4)"});
  EXPECT_EQ(d4.size(), 8u);
  EXPECT_TRUE(is_subgroup(*s4, d4));
  EXPECT_EQ(subgroup_closure(*s4, ElementSet(s4->size())).size(), 1u);
  EXPECT_EQ(subgroup_closure(*s4, d4), d4);
  EXPECT_FALSE(is_subgroup(*s4, elements(*s4, {"e", "(1 2 3)"})));
  EXPECT_FALSE(is_subgroup(*s4, ElementSet(s4->size())));
}

TEST(Group, ConjugateSubgroups) {
  test::Example ex;
  const FiniteGroup &g = *ex.s4;
  EXPECT_EQ(conjugate_subgroup(g, ex.d1, g.inv(g.element("(1 2 3)"))), ex.d3);
  auto s3 = perm_group(3, {"(1 2)", "(1 2 3)"});
  EXPECT_EQ(conjugate_subgroup(*s3, elements(*s3, {"e", "(1 2)"}), s3->element("(1 3)")),
            elements(*s3, {"e", "(2 3)"}));
  EXPECT_EQ(raised([&] { conjugate_subgroup(g, elements(g, {"(1 2)"}), g.identity()); }),
            ErrorKind::NotASubgroup);
}

TEST(Group, CrispPredicates) {
  test::Example ex;
  const FiniteGroup &g = *ex.s4;
  auto all = everything(g);
  auto p = crisp_predicates(g, all, ex.v4);
  EXPECT_TRUE(p.is_subgroup && p.is_normal_in_k);
  p = crisp_predicates(g, all, ex.d1);
  EXPECT_TRUE(p.is_subgroup);
  EXPECT_FALSE(p.is_normal_in_k);
  p = crisp_predicates(g, all, ElementSet(g.size()));
  EXPECT_FALSE(p.is_subgroup || p.is_normal_in_k);
}

TEST(Group, CrispPronormality) {
  auto s3 = perm_group(3, {"(1 2)", "(1 2 3)"});
  EXPECT_TRUE(crisp_pronormal(*s3, everything(*s3), generated(*s3, {"(1 2)"})).holds);

  test::Example ex;
  const FiniteGroup &g = *ex.s4;
  auto v = crisp_pronormal(g, ex.d1, generated(g, {"(1 3)"}));
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.counterexample.has_value());
  EXPECT_TRUE(ex.d1.contains(*v.counterexample));

  v = crisp_pronormal(g, ex.d1, ex.d1);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.witness.size(), 8u);
  for (auto [x, y] : v.witness)
    EXPECT_EQ(y, g.identity());

  EXPECT_EQ(raised([&] { crisp_pronormal(g, ex.v4, ex.d1); }), ErrorKind::NotContained);
  EXPECT_EQ(raised([&] { crisp_pronormal(g, ex.d1, elements(g, {"e", "(1 3)", "(2 4)"})); }),
            ErrorKind::NotASubgroup);
}

TEST(Group, SubgroupCounts) {
  EXPECT_EQ(enumerate_subgroups(builtin_group("S(4)")).size(), 30u);
  EXPECT_EQ(enumerate_subgroups(builtin_group("S(3)")).size(), 6u);
  EXPECT_EQ(enumerate_subgroups(builtin_group("D(4)")).size(), 10u);
  EXPECT_EQ(enumerate_subgroups(builtin_group("Q8")).size(), 6u);
  EXPECT_EQ(enumerate_subgroups(build_group_perm(4, std::vector<std::string>{"(1 2 3)", "(1 2)(3 4)"})).size(),
            10u);
  auto subs = enumerate_subgroups(builtin_group("S(4)"));
  EXPECT_EQ(subs.front().size(), 1u);
  EXPECT_EQ(subs.back().size(), 24u);
  for (std::size_t i = 1; i < subs.size(); ++i)
    EXPECT_LE(subs[i - 1].size(), subs[i].size());
}

TEST(Group, NormalSubgroupsArePronormal) {
  for (auto ref : {"S(3)", "S(4)", "D(4)", "Q8", "D(5)"}) {
    FiniteGroup g = builtin_group(ref);
    auto subs = enumerate_subgroups(g);
    for (const auto &k : subs)
      for (const auto &h : subs) {
        if (!h.subset_of(k))
          continue;
        if (crisp_predicates(g, k, h).is_normal_in_k) {
          EXPECT_TRUE(crisp_pronormal(g, k, h).holds) << ref;
        }
      }
  }
}

// In a nilpotent group a subgroup is pronormal exactly when it is normal.
TEST(Group, PronormalEqualsNormalInNilpotentGroups) {
  for (auto ref : {"D(4)", "Q8", "C(8)", "V4"}) {
    FiniteGroup g = builtin_group(ref);
    auto all = everything(g);
    for (const auto &h : enumerate_subgroups(g))
      EXPECT_EQ(crisp_pronormal(g, all, h).holds, crisp_predicates(g, all, h).is_normal_in_k) << ref;
  }
}

TEST(Group, SylowSubgroupsOfS4ArePronormal) {
  FiniteGroup g = builtin_group("S(4)");
  auto all = everything(g);
  for (const auto &h : enumerate_subgroups(g))
    if (h.size() == 8 || h.size() == 3) {
      EXPECT_TRUE(crisp_pronormal(g, all, h).holds);
    }
}

TEST(Group, ClosureAndConjugationLaws) {
  FiniteGroup g = builtin_group("S(4)");
  auto subs = enumerate_subgroups(g);
  for (const auto &h : subs) {
    EXPECT_EQ(subgroup_closure(g, h), h);
    for (Element w : g.elements()) {
      ElementSet c = conjugate_subgroup(g, h, w);
      EXPECT_EQ(c.size(), h.size());
      EXPECT_EQ(conjugate_subgroup(g, c, g.inv(w)), h);
    }
  }
  ElementSet a = generated(g, {"(1 2)"}), b = generated(g, {"(1 2)", "(3 4)"});
  EXPECT_TRUE(subgroup_closure(g, a).subset_of(subgroup_closure(g, b)));
}

TEST(Group, Catalog) {
  EXPECT_EQ(builtin_group("S(4)").size(), 24u);
  EXPECT_EQ(builtin_group("C(1)").size(), 1u);
  EXPECT_EQ(builtin_group("trivial").size(), 1u);
  EXPECT_EQ(builtin_group("D(5)").size(), 10u);
  EXPECT_EQ(builtin_group("V4").size(), 4u);
  FiniteGroup q8 = builtin_group("Q8");
  EXPECT_EQ(q8.size(), 8u);
  for (const auto &h : enumerate_subgroups(q8))
    EXPECT_TRUE(crisp_predicates(q8, everything(q8), h).is_normal_in_k);
  EXPECT_EQ(raised([] { builtin_group("S(6)"); }), ErrorKind::BadParam);
  EXPECT_EQ(raised([] { builtin_group("C(0)"); }), ErrorKind::BadParam);
  EXPECT_EQ(raised([] { builtin_group("A(4)"); }), ErrorKind::UnknownCatalogKey);
}

TEST(Hom, IdentityAndSign) {
  auto s4 = test::group("S(4)");
  GroupHom id = identity_hom(s4);
  EXPECT_TRUE(id.surjective());
  EXPECT_TRUE(id.injective());

  GroupHom f = test::sign_hom(3);
  EXPECT_TRUE(f.surjective());
  EXPECT_FALSE(f.injective());
}

TEST(Hom, RejectsNonHomomorphism) {
  auto s3 = test::group("S(3)");
  auto z3 = test::group("C(3)");
  std::vector<Element> map;
  for (Element x : s3->elements())
    map.push_back(z3->element(test::parity(s3->permutation(x)) ? "1" : "0"));
  EXPECT_EQ(raised([&] { build_hom(s3, z3, map); }), ErrorKind::NotAHomomorphism);
  map.pop_back();
  EXPECT_EQ(raised([&] { build_hom(s3, z3, map); }), ErrorKind::CarrierMismatch);
}

TEST(Hom, QuotientByKleinFour) {
  test::Example ex;
  auto [q, proj] = quotient(ex.s4, ex.v4);
  EXPECT_EQ(q->size(), 6u);
  EXPECT_TRUE(proj.surjective());
  for (Element x : ex.s4->elements())
    EXPECT_EQ(proj(x) == q->identity(), ex.v4.contains(x));
  EXPECT_EQ(q->name(q->identity()), "[e]");
  EXPECT_EQ(raised([&] { quotient(ex.s4, ex.d1); }), ErrorKind::NotASubgroup);
}

TEST(Hom, DirectProduct) {
  FiniteGroup p = direct_product(builtin_group("C(2)"), builtin_group("C(3)"));
  EXPECT_EQ(p.size(), 6u);
  EXPECT_EQ(p.name(p.identity()), "(0,0)");
  Element x = p.element("(1,1)");
  Element y = x;
  int order = 1;
  while (y != p.identity()) {
    y = p.mul(y, x);
    ++order;
  }
  EXPECT_EQ(order, 6);
}

} // namespace
} // namespace lfgt
