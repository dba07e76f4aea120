#include "lfgt/group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "lfgt/error.hpp"
#include "parse_util.hpp"

namespace lfgt {

namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

Element make_element(std::size_t i) { return Element{static_cast<std::uint32_t>(i)}; }

} // namespace

ElementSet::ElementSet(std::size_t universe, std::span<const Element> members) : bits_(universe, false) {
  for (Element x : members)
    insert(x);
}

void ElementSet::insert(Element x) {
  if (!bits_[x.id]) {
    bits_[x.id] = true;
    ++count_;
  }
}

void ElementSet::erase(Element x) {
  if (bits_[x.id]) {
    bits_[x.id] = false;
    --count_;
  }
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i])
      out.push_back(make_element(i));
  return out;
}

bool ElementSet::subset_of(const ElementSet &other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.bits_[i])
      return false;
  return true;
}

std::vector<Element> FiniteGroup::elements() const {
  std::vector<Element> out(size());
  for (std::size_t i = 0; i < size(); ++i)
    out[i] = make_element(i);
  return out;
}

std::optional<Element> FiniteGroup::find(std::string_view name) const {
  name = detail::trim(name);
  if (auto it = by_name_.find(std::string(name)); it != by_name_.end())
    return Element{it->second};
  if (is_permutation_group()) {
    try {
      auto canonical = format_cycles(parse_cycles(name, degree_));
      if (auto it = by_name_.find(canonical); it != by_name_.end())
        return Element{it->second};
    } catch (const Error &) {
      return std::nullopt;
    }
    return std::nullopt;
  }
  if (name == "e")
    return identity_;
  return std::nullopt;
}

Element FiniteGroup::element(std::string_view name) const {
  if (auto x = find(name))
    return *x;
  throw Error(ErrorKind::UnknownElement, "'" + std::string(name) + "' is not an element of group " +
                                             (name_.empty() ? std::string("<anonymous>") : name_));
}

FiniteGroup build_group_table(const std::vector<std::string> &names,
                              const std::vector<std::vector<std::string>> &table, std::string name) {
  const std::size_t n = names.size();
  if (n == 0)
    throw Error(ErrorKind::MalformedTable, "a group needs at least one element");

  FiniteGroup g;
  g.name_ = std::move(name);
  g.names_ = names;
  for (std::size_t i = 0; i < n; ++i)
    if (!g.by_name_.emplace(names[i], static_cast<std::uint32_t>(i)).second)
      throw Error(ErrorKind::MalformedTable, "duplicate element name '" + names[i] + "'");

  if (table.size() != n)
    throw Error(ErrorKind::MalformedTable, "expected " + std::to_string(n) + " rows, got " +
                                               std::to_string(table.size()));
  g.table_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw Error(ErrorKind::MalformedTable, "row " + std::to_string(i + 1) + " has " +
                                                 std::to_string(table[i].size()) + " entries");
    for (std::size_t j = 0; j < n; ++j) {
      auto it = g.by_name_.find(table[i][j]);
      if (it == g.by_name_.end())
        throw Error(ErrorKind::MalformedTable, "unknown entry '" + table[i][j] + "'");
      g.table_[i * n + j] = it->second;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      if (row[g.table_[i * n + j]])
        throw Error(ErrorKind::MalformedTable, "row " + names[i] + " repeats an element");
      if (col[g.table_[j * n + i]])
        throw Error(ErrorKind::MalformedTable, "column " + names[i] + " repeats an element");
      row[g.table_[i * n + j]] = true;
      col[g.table_[j * n + i]] = true;
    }
  }

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = g.table_[e * n + x] == x && g.table_[x * n + e] == x;
    if (ok)
      identity = e;
  }
  if (!identity)
    throw Error(ErrorKind::NoIdentity, "no two-sided identity");
  g.identity_ = make_element(*identity);

  g.inverse_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    std::optional<std::size_t> inv;
    for (std::size_t y = 0; y < n && !inv; ++y)
      if (g.table_[x * n + y] == *identity && g.table_[y * n + x] == *identity)
        inv = y;
    if (!inv)
      throw Error(ErrorKind::NoInverse, names[x] + " has no two-sided inverse");
    g.inverse_[x] = static_cast<std::uint32_t>(*inv);
  }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto xy = g.table_[x * n + y];
      for (std::size_t z = 0; z < n; ++z)
        if (g.table_[xy * n + z] != g.table_[x * n + g.table_[y * n + z]])
          throw Error(ErrorKind::NotAssociative,
                      "(" + names[x] + "·" + names[y] + ")·" + names[z] + " differs from " +
                          names[x] + "·(" + names[y] + "·" + names[z] + ")");
    }
  return g;
}

FiniteGroup build_group_perm(int degree, const std::vector<Permutation> &generators, std::string name,
                             std::size_t order_cap) {
  if (degree < 1)
    throw Error(ErrorKind::BadCycle, "degree must be positive");
  for (const auto &gen : generators) {
    if (gen.size() != static_cast<std::size_t>(degree))
      throw Error(ErrorKind::BadCycle, "generator degree does not match group degree");
    std::vector<bool> hit(gen.size(), false);
    for (auto v : gen) {
      if (v >= gen.size() || hit[v])
        throw Error(ErrorKind::BadCycle, "generator is not a permutation");
      hit[v] = true;
    }
  }

  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
  std::vector<Permutation> perms;
  std::vector<Permutation> layer{identity_permutation(degree)};
  index.emplace(layer.front(), 0);
  perms.push_back(layer.front());
  while (!layer.empty()) {
    std::vector<Permutation> next;
    std::unordered_set<Permutation, PermutationHash> fresh;
    for (const auto &x : layer)
      for (const auto &gen : generators) {
        Permutation y = compose(x, gen);
        if (!index.contains(y) && fresh.insert(y).second)
          next.push_back(std::move(y));
      }
    std::sort(next.begin(), next.end());
    for (const auto &y : next) {
      if (perms.size() >= order_cap)
        throw Error(ErrorKind::OrderCap, "closure exceeds " + std::to_string(order_cap) + " elements");
      index.emplace(y, static_cast<std::uint32_t>(perms.size()));
      perms.push_back(y);
    }
    layer = std::move(next);
  }

  const std::size_t n = perms.size();
  FiniteGroup g;
  g.name_ = std::move(name);
  g.degree_ = degree;
  g.generators_ = generators;
  g.identity_ = Element{0};
  g.table_.resize(n * n);
  g.inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.names_.push_back(format_cycles(perms[i]));
    g.by_name_.emplace(g.names_.back(), static_cast<std::uint32_t>(i));
    for (std::size_t j = 0; j < n; ++j)
      g.table_[i * n + j] = index.at(compose(perms[i], perms[j]));
    g.inverse_[i] = index.at(inverse(perms[i]));
  }
  g.perms_ = std::move(perms);
  return g;
}

FiniteGroup build_group_perm(int degree, const std::vector<std::string> &generators, std::string name,
                             std::size_t order_cap) {
  std::vector<Permutation> perms;
  for (const auto &text : generators)
    perms.push_back(parse_cycles(text, degree));
  return build_group_perm(degree, perms, std::move(name), order_cap);
}

ElementSet subgroup_closure(const FiniteGroup &group, std::span<const Element> generators) {
  for (Element x : generators)
    if (x.id >= group.size())
      throw Error(ErrorKind::UnknownElement, "generator out of range");
  ElementSet result(group.size());
  std::deque<Element> queue{group.identity()};
  result.insert(group.identity());
  // In a finite group closing {e} under right multiplication by the
  // generators already yields inverses.
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (Element s : generators) {
      Element y = group.mul(x, s);
      if (!result.contains(y)) {
        result.insert(y);
        queue.push_back(y);
      }
    }
  }
  return result;
}

ElementSet subgroup_closure(const FiniteGroup &group, const ElementSet &generators) {
  if (generators.universe() != group.size())
    throw Error(ErrorKind::UnknownElement, "set does not belong to this group");
  auto members = generators.elements();
  return subgroup_closure(group, std::span<const Element>(members));
}

bool is_subgroup(const FiniteGroup &group, const ElementSet &h) {
  if (h.universe() != group.size() || h.empty())
    return false;
  auto members = h.elements();
  for (Element x : members) {
    if (!h.contains(group.inv(x)))
      return false;
    for (Element y : members)
      if (!h.contains(group.mul(x, y)))
        return false;
  }
  return true;
}

ElementSet conjugate_subgroup(const FiniteGroup &group, const ElementSet &h, Element w) {
  if (w.id >= group.size())
    throw Error(ErrorKind::UnknownElement, "conjugating element out of range");
  if (!is_subgroup(group, h))
    throw Error(ErrorKind::NotASubgroup, "cannot conjugate a non-subgroup");
  ElementSet out(group.size());
  for (Element x : h.elements())
    out.insert(group.conj(w, x));
  return out;
}

CrispPredicates crisp_predicates(const FiniteGroup &group, const ElementSet &k, const ElementSet &h) {
  CrispPredicates out;
  out.is_subgroup = is_subgroup(group, h);
  if (!out.is_subgroup || !is_subgroup(group, k) || !h.subset_of(k))
    return out;
  auto members = h.elements();
  out.is_normal_in_k = true;
  for (Element g : k.elements()) {
    for (Element x : members)
      if (!h.contains(group.conj(g, x))) {
        out.is_normal_in_k = false;
        return out;
      }
  }
  return out;
}

CrispPronormalVerdict crisp_pronormal(const FiniteGroup &group, const ElementSet &k, const ElementSet &h) {
  if (!is_subgroup(group, h) || !is_subgroup(group, k))
    throw Error(ErrorKind::NotASubgroup, "pronormality needs subgroups H <= K");
  if (!h.subset_of(k))
    throw Error(ErrorKind::NotContained, "H is not contained in K");

  CrispPronormalVerdict verdict;
  auto h_members = h.elements();
  for (Element g : k.elements()) {
    ElementSet hg = conjugate_subgroup(group, h, g);
    auto gens = h_members;
    for (Element x : hg.elements())
      gens.push_back(x);
    ElementSet join = subgroup_closure(group, std::span<const Element>(gens));
    std::optional<Element> found;
    for (Element y : join.elements())
      if (conjugate_subgroup(group, h, y) == hg) {
        found = y;
        break;
      }
    if (!found) {
      verdict.holds = false;
      verdict.witness.clear();
      verdict.counterexample = g;
      return verdict;
    }
    verdict.witness.emplace_back(g, *found);
  }
  verdict.holds = true;
  return verdict;
}

std::vector<ElementSet> enumerate_subgroups(const FiniteGroup &group) {
  struct Found {
    ElementSet set;
    std::vector<Element> gens;
  };
  std::vector<Found> found;
  std::unordered_set<std::vector<bool>> seen;

  auto key = [&](const ElementSet &s) {
    std::vector<bool> bits(group.size(), false);
    for (Element x : s.elements())
      bits[x.id] = true;
    return bits;
  };

  ElementSet trivial(group.size());
  trivial.insert(group.identity());
  found.push_back({trivial, {}});
  seen.insert(key(trivial));
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Element g : group.elements()) {
      if (found[i].set.contains(g))
        continue;
      auto gens = found[i].gens;
      gens.push_back(g);
      ElementSet closure = subgroup_closure(group, std::span<const Element>(gens));
      if (seen.insert(key(closure)).second)
        found.push_back({std::move(closure), std::move(gens)});
    }
  }

  std::vector<ElementSet> out;
  for (auto &f : found)
    out.push_back(std::move(f.set));
  std::stable_sort(out.begin(), out.end(), [](const ElementSet &a, const ElementSet &b) {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a.elements() < b.elements();
  });
  return out;
}

GroupHom build_hom(GroupPtr source, GroupPtr target, std::vector<Element> map, std::string name) {
  if (!source || !target)
    throw Error(ErrorKind::CarrierMismatch, "homomorphism needs a source and a target");
  if (map.size() != source->size())
    throw Error(ErrorKind::CarrierMismatch, "map is not total on the source group");
  for (Element y : map)
    if (y.id >= target->size())
      throw Error(ErrorKind::UnknownElement, "map value outside the target group");
  for (Element x : source->elements())
    for (Element y : source->elements())
      if (map[source->mul(x, y).id] != target->mul(map[x.id], map[y.id]))
        throw Error(ErrorKind::NotAHomomorphism, "f(" + source->name(x) + "·" + source->name(y) +
                                                     ") != f(" + source->name(x) + ")·f(" +
                                                     source->name(y) + ")");
  GroupHom f;
  std::vector<bool> hit(target->size(), false);
  for (Element y : map)
    hit[y.id] = true;
  f.surjective_ = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  std::vector<Element> sorted = map;
  std::sort(sorted.begin(), sorted.end());
  f.injective_ = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.map_ = std::move(map);
  f.name_ = std::move(name);
  return f;
}

GroupHom identity_hom(const GroupPtr &group) {
  return build_hom(group, group, group->elements(), "id");
}

std::pair<GroupPtr, GroupHom> quotient(const GroupPtr &group, const ElementSet &normal) {
  ElementSet all(group->size(), group->elements());
  if (!crisp_predicates(*group, all, normal).is_normal_in_k)
    throw Error(ErrorKind::NotASubgroup, "quotient needs a normal subgroup");

  const std::size_t n = group->size();
  std::vector<std::int64_t> coset_of(n, -1);
  std::vector<Element> reps;
  for (Element x : group->elements()) {
    if (coset_of[x.id] >= 0)
      continue;
    for (Element m : normal.elements())
      coset_of[group->mul(x, m).id] = static_cast<std::int64_t>(reps.size());
    reps.push_back(x);
  }
  std::vector<std::string> names;
  for (Element r : reps)
    names.push_back("[" + group->name(r) + "]");
  std::vector<std::vector<std::string>> table(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j)
      table[i].push_back(names[coset_of[group->mul(reps[i], reps[j]).id]]);
  auto q = std::make_shared<const FiniteGroup>(build_group_table(
      names, table, group->name() + "/" + std::to_string(normal.size())));
  std::vector<Element> map(n);
  for (Element x : group->elements())
    map[x.id] = Element{static_cast<std::uint32_t>(coset_of[x.id])};
  GroupHom f = build_hom(group, q, std::move(map), "projection");
  return {q, std::move(f)};
}

FiniteGroup direct_product(const FiniteGroup &g, const FiniteGroup &h) {
  std::vector<std::string> names;
  for (Element x : g.elements())
    for (Element y : h.elements())
      names.push_back("(" + g.name(x) + "," + h.name(y) + ")");
  const std::size_t m = h.size();
  std::vector<std::vector<std::string>> table(names.size());
  for (Element x1 : g.elements())
    for (Element y1 : h.elements())
      for (Element x2 : g.elements())
        for (Element y2 : h.elements())
          table[x1.id * m + y1.id].push_back(names[g.mul(x1, x2).id * m + h.mul(y1, y2).id]);
  return build_group_table(names, table, g.name() + "x" + h.name());
}

namespace {

FiniteGroup cyclic(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    names.push_back(std::to_string(i));
  std::vector<std::vector<std::string>> table(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[i].push_back(names[(i + j) % n]);
  return build_group_table(names, table, "C(" + std::to_string(n) + ")");
}

FiniteGroup quaternion() {
  // Units 1, i, j, k with signs; unit products follow i² = j² = k² = ijk = -1.
  static const int unit_product[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static const char *unit_name[4] = {"1", "i", "j", "k"};
  auto name = [](int sign, int unit) { return std::string(sign < 0 ? "-" : "") + unit_name[unit]; };
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> elems;
  for (int u = 0; u < 4; ++u)
    for (int s : {1, -1}) {
      names.push_back(name(s, u));
      elems.emplace_back(s, u);
    }
  std::vector<std::vector<std::string>> table(8);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      auto [sa, ua] = elems[a];
      auto [sb, ub] = elems[b];
      table[a].push_back(name(sa * sb * unit_sign[ua][ub], unit_product[ua][ub]));
    }
  return build_group_table(names, table, "Q8");
}

std::string cycle_of(int from, int to) {
  std::string s = "(";
  for (int i = from; i <= to; ++i) {
    if (i > from)
      s += ' ';
    s += std::to_string(i);
  }
  return s + ")";
}

} // namespace

FiniteGroup builtin_group(std::string_view name, std::span<const int> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw Error(ErrorKind::BadParam, std::string(name) + " expects " + std::to_string(count) +
                                           " parameter(s)");
  };
  auto label = [&](int n) { return std::string(name) + "(" + std::to_string(n) + ")"; };

  if (name == "S") {
    need(1);
    const int n = params[0];
    if (n < 1 || n > 5)
      throw Error(ErrorKind::BadParam, "S(n) requires 1 <= n <= 5");
    if (n == 1)
      return build_group_perm(1, std::vector<Permutation>{}, label(n));
    if (n == 2)
      return build_group_perm(2, std::vector<std::string>{"(1 2)"}, label(n));
    return build_group_perm(n, std::vector<std::string>{"(1 2)", cycle_of(1, n)}, label(n));
  }
  if (name == "C") {
    need(1);
    if (params[0] < 1 || params[0] > 1000)
      throw Error(ErrorKind::BadParam, "C(n) requires 1 <= n <= 1000");
    return cyclic(params[0]);
  }
  if (name == "D") {
    need(1);
    const int n = params[0];
    if (n < 1 || n > 100)
      throw Error(ErrorKind::BadParam, "D(n) requires 1 <= n <= 100");
    if (n == 1)
      return build_group_perm(2, std::vector<std::string>{"(1 2)"}, label(n));
    if (n == 2)
      return build_group_perm(4, std::vector<std::string>{"(1 2)(3 4)", "(1 3)(2 4)"}, label(n));
    // Rotation i -> i+1 and reflection i -> 2 - i (mod n), on points 1..n.
    Permutation reflection(n);
    for (int i = 0; i < n; ++i)
      reflection[i] = static_cast<std::uint16_t>((n - i) % n);
    return build_group_perm(n, std::vector<Permutation>{parse_cycles(cycle_of(1, n), n), reflection},
                            label(n));
  }
  if (name == "V4") {
    need(0);
    return build_group_perm(4, std::vector<std::string>{"(1 2)(3 4)", "(1 3)(2 4)"}, "V4");
  }
  if (name == "Q8") {
    need(0);
    return quaternion();
  }
  if (name == "trivial") {
    need(0);
    return build_group_table({"e"}, {{"e"}}, "trivial");
  }
  throw Error(ErrorKind::UnknownCatalogKey, "no builtin group named '" + std::string(name) + "'");
}

FiniteGroup builtin_group(std::string_view reference) {
  auto [key, params] = detail::parse_catalog_reference(reference);
  return builtin_group(key, params);
}

std::vector<std::string> builtin_group_keys() {
  return {"S(n) for n <= 5", "C(n)", "D(n)", "V4", "Q8", "trivial"};
}

} // namespace lfgt
