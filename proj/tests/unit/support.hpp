#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lfgt/error.hpp"
#include "lfgt/group.hpp"
#include "lfgt/lattice.hpp"
#include "lfgt/lsubgroup.hpp"
#include "lfgt/lsubset.hpp"

namespace lfgt {
inline void PrintTo(ErrorKind kind, std::ostream *os) { *os << to_string(kind); }
} // namespace lfgt

namespace lfgt::test {

/// Kind of the Error thrown by `f`, or nullopt when it returns normally.
inline std::optional<ErrorKind> raised(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.kind();
  }
  return std::nullopt;
}

inline LatticePtr lattice(std::string_view ref) { return std::make_shared<const Lattice>(builtin_lattice(ref)); }
inline GroupPtr group(std::string_view ref) { return std::make_shared<const FiniteGroup>(builtin_group(ref)); }

inline GroupPtr perm_group(int degree, const std::vector<std::string> &generators, std::string name = {}) {
  return std::make_shared<const FiniteGroup>(build_group_perm(degree, generators, std::move(name)));
}

inline ElementSet elements(const FiniteGroup &g, std::initializer_list<std::string_view> names) {
  ElementSet out(g.size());
  for (auto n : names)
    out.insert(g.element(n));
  return out;
}

inline ElementSet generated(const FiniteGroup &g, std::initializer_list<std::string_view> names) {
  return subgroup_closure(g, elements(g, names));
}

inline ElementSet everything(const FiniteGroup &g) { return ElementSet(g.size(), g.elements()); }

inline Value val(const LatticePtr &l, std::string_view name) { return l->value(name); }

/// The S4 / lattice M example: μ is u on V4 and d elsewhere; η is u at e, d on
/// V4\{e}, a/b/c on the three dihedral subgroups outside V4, f elsewhere.
struct Example {
  GroupPtr s4 = perm_group(4, {"(1 2)", "(1 2 3 4)"}, "S4");
  LatticePtr m = lattice("example_M");
  ElementSet v4 = elements(*s4, {"e", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"});
  ElementSet d1 = generated(*s4, {"(2 4)", "(1 2 3 4)"});
  ElementSet d2 = generated(*s4, {"(1 2)", "(1 3 2 4)"});
  ElementSet d3 = generated(*s4, {"(2 3)", "(1 3 4 2)"});

  LSubset by_sets(std::string_view fallback,
                  std::initializer_list<std::pair<const ElementSet *, std::string_view>> layers) const {
    // Later layers win; each layer is applied outside the previous ones.
    std::vector<Value> values(s4->size(), m->value(fallback));
    for (auto [set, v] : layers)
      for (Element x : set->elements())
        values[x.id] = m->value(v);
    return LSubset(s4, m, std::move(values));
  }

  LSubset mu() const { return by_sets("d", {{&v4, "u"}}); }

  LSubset eta() const {
    ElementSet e = elements(*s4, {"e"});
    return by_sets("f", {{&d1, "a"}, {&d2, "b"}, {&d3, "c"}, {&v4, "d"}, {&e, "u"}});
  }

  LPoint point(std::string_view text) const { return parse_lpoint(*s4, *m, text); }
};

inline int parity(const Permutation &p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      inversions += p[i] > p[j];
  return inversions % 2;
}

/// S(n) -> C(2) by parity.
inline GroupHom sign_hom(int n) {
  auto s = group("S(" + std::to_string(n) + ")");
  auto z2 = group("C(2)");
  std::vector<Element> map;
  for (Element x : s->elements())
    map.push_back(z2->element(std::to_string(parity(s->permutation(x)))));
  return build_hom(s, z2, map, "sign");
}

/// Values of an L-subset by element name, for readable expectations.
inline std::string at(const LSubset &s, std::string_view element) {
  return s.lattice().name(s(s.group().element(element)));
}

} // namespace lfgt::test
