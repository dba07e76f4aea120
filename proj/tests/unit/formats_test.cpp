#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "lfgt/formats.hpp"
#include "support.hpp"

namespace lfgt {
namespace {

using test::raised;

std::string slurp(const std::string &relative) {
  std::ifstream in(std::string(LFGT_TEST_DATA) + "/" + relative);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::optional<int> line_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.line();
  }
  return std::nullopt;
}

TEST(Formats, ExampleFixturesLoad) {
  Workspace ws;
  auto m = std::make_shared<const Lattice>(parse_lattice_file(slurp("fixtures/s4_m/M.lat")));
  auto s4 = std::make_shared<const FiniteGroup>(parse_group_file(slurp("fixtures/s4_m/S4.grp")));
  EXPECT_EQ(m->name(), "M");
  EXPECT_EQ(s4->name(), "S4");
  EXPECT_EQ(s4->size(), 24u);
  ws.add_lattice(m);
  ws.add_group(s4);
  LSubset eta = parse_lsubset_file(slurp("fixtures/s4_m/eta.lsub"), ws);
  LSubset mu = parse_lsubset_file(slurp("fixtures/s4_m/mu.lsub"), ws);

  test::Example ex;
  EXPECT_EQ(eta.values(), ex.eta().values());
  EXPECT_EQ(mu.values(), ex.mu().values());
  EXPECT_EQ(raised([&] { ws.add_group(s4); }), ErrorKind::BadParam);
}

TEST(Formats, CatalogReferences) {
  Workspace ws;
  LSubset s = parse_lsubset_file("[lsubset]\ngroup = S(3)\nlattice = chain(3)\ndefault = 0\nmap = e:1, (1 2):m\n", ws);
  EXPECT_EQ(s.group().size(), 6u);
  EXPECT_EQ(test::at(s, "(1 2)"), "m");
  EXPECT_EQ(raised([&] { ws.group("nope"); }), ErrorKind::UnknownReference);
  EXPECT_EQ(raised([&] { ws.lattice("nope"); }), ErrorKind::UnknownReference);
}

TEST(Formats, TableGroups) {
  FiniteGroup z2 = parse_group_file("[group]\nname = Z2\nkind = table\nelements = 0 1\ntable = 0 1 / 1 0\n");
  EXPECT_EQ(z2.size(), 2u);
  EXPECT_EQ(z2.name(z2.identity()), "0");
  EXPECT_EQ(line_of([] { parse_group_file("[group]\nkind = table\nelements = 0 1\ntable = 0 1 / 1 1\n"); }), 4);
}

TEST(Formats, HomFiles) {
  Workspace ws;
  GroupHom f = parse_hom_file(
      "[hom]\nname = sign\nsource = S(3)\ntarget = C(2)\n"
      "map = e:0, (1 2 3):0, (1 3 2):0, (1 2):1, (1 3):1, (2 3):1\n",
      ws);
  EXPECT_TRUE(f.surjective());
  EXPECT_EQ(f.name(), "sign");
  EXPECT_EQ(line_of([&] {
              parse_hom_file("[hom]\nsource = S(3)\ntarget = C(2)\n\nmap = e:0, (1 2):1\n", ws);
            }),
            5);
  EXPECT_EQ(raised([&] {
              parse_hom_file("[hom]\nsource = S(3)\ntarget = C(3)\n"
                             "map = e:0, (1 2 3):0, (1 3 2):0, (1 2):1, (1 3):1, (2 3):1\n",
                             ws);
            }),
            ErrorKind::NotAHomomorphism);
}

TEST(Formats, ErrorsCarryLineNumbers) {
  Workspace ws;
  EXPECT_EQ(line_of([] { parse_lattice_file("[lattice]\nelements = 0 1\ncovers = 0<2\n"); }), 3);
  EXPECT_EQ(line_of([] { parse_lattice_file("# c\n[lattice]\nelements = 0 1 2\ncovers = 0<1 0<2\n"); }), 3);
  EXPECT_EQ(line_of([] { parse_lattice_file("[lattice]\nelements = 0 1\ncolour = red\n"); }), 3);
  EXPECT_EQ(line_of([] { parse_lattice_file("elements = 0 1\n"); }), 1);
  EXPECT_EQ(line_of([] { parse_group_file("[group]\nkind = permutation\ndegree = 3\ngenerators = (1 4)\n"); }), 4);
  EXPECT_EQ(line_of([&] {
              parse_lsubset_file("[lsubset]\ngroup = S(3)\nlattice = chain(2)\ndefault = 0\nmap = e:1,\n"
                                 "  (1 2):7\n",
                                 ws);
            }),
            6);
  EXPECT_EQ(line_of([] {
              parse_group_file("[group]\nkind = permutation\ndegree = 3\ngenerators = (1 2),\n  (1 2 4)\n");
            }),
            5);
  EXPECT_EQ(line_of([&] { parse_lsubset_file("[lsubset]\ngroup = S(9)\nlattice = chain(2)\n", ws); }), 2);
}

TEST(Formats, ErrorKinds) {
  Workspace ws;
  EXPECT_EQ(raised([] { parse_lattice_file("[lattice]\nelements = a b\ncovers = a<b b<a\n"); }),
            ErrorKind::NotAPartialOrder);
  EXPECT_EQ(raised([] { parse_lattice_file("[lattice]\nelements = a b\ncovers = ab\n"); }),
            ErrorKind::SyntaxError);
  EXPECT_EQ(raised([] { parse_lattice_file("[lattice]\nelements = a\n[lattice]\n"); }), ErrorKind::SyntaxError);
  EXPECT_EQ(raised([] { parse_group_file("[group]\nkind = cayley\n"); }), ErrorKind::SyntaxError);
  EXPECT_EQ(raised([&] {
              parse_lsubset_file("[lsubset]\ngroup = S(3)\nlattice = chain(2)\ndefault = 0\nmap = e:1, e:0\n", ws);
            }),
            ErrorKind::DuplicateAssignment);
  EXPECT_EQ(raised([&] { parse_lsubset_file("[lsubset]\ngroup = S(3)\nlattice = chain(2)\nmap = e:1\n", ws); }),
            ErrorKind::SyntaxError);
  EXPECT_EQ(raised([&] { parse_lsubset_file("[lsubset]\ngroup = S(3)\nlattice = chain(2)\nmap = e1\n", ws); }),
            ErrorKind::SyntaxError);
}

TEST(Formats, RoundTrips) {
  test::Example ex;
  for (auto ref : {"example_M", "chain(4)", "boolean(2)", "pentagon_N5"}) {
    Lattice l = builtin_lattice(ref);
    EXPECT_TRUE(parse_lattice_file(serialize_lattice(l)) == l) << ref;
  }
  for (auto ref : {"S(4)", "D(5)", "Q8", "C(6)", "trivial"}) {
    FiniteGroup g = builtin_group(ref);
    EXPECT_TRUE(parse_group_file(serialize_group(g)) == g) << ref;
  }
  // Quotient and product element names contain spaces and commas.
  auto [q, proj] = quotient(ex.s4, ex.v4);
  EXPECT_TRUE(parse_group_file(serialize_group(*q)) == *q);
  FiniteGroup p = direct_product(builtin_group("C(2)"), builtin_group("S(3)"));
  EXPECT_TRUE(parse_group_file(serialize_group(p)) == p);

  Workspace ws;
  ws.add_group(ex.s4);
  ws.add_lattice(std::make_shared<const Lattice>(builtin_lattice("example_M")));
  for (const LSubset &s : {ex.eta(), ex.mu(), normalizer(ex.eta(), ex.mu())}) {
    LSubset back = parse_lsubset_file(serialize_lsubset(s, "x"), ws);
    EXPECT_EQ(back.values(), s.values());
  }
  GroupHom sign = test::sign_hom(3);
  Workspace hw;
  GroupHom back = parse_hom_file(serialize_hom(sign), hw);
  EXPECT_EQ(back.map(), sign.map());
}

TEST(Formats, PeekFields) {
  std::string text = slurp("fixtures/s4_m/eta.lsub");
  EXPECT_EQ(peek_name(text), "eta");
  EXPECT_EQ(peek_field(text, "group"), "S4");
  EXPECT_EQ(peek_field(text, "missing"), "");
}

} // namespace
} // namespace lfgt
