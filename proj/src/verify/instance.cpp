#include <map>
#include <mutex>
#include <sstream>

#include "lfgt/error.hpp"
#include "lfgt/formats.hpp"
#include "lfgt/verify.hpp"
#include "rng.hpp"

namespace lfgt {

namespace {

using detail::Rng;
using detail::splitmix;

bool prime_power(std::size_t n) {
  if (n < 2)
    return false;
  std::size_t p = 2;
  while (n % p != 0)
    ++p;
  while (n % p == 0)
    n /= p;
  return n == 1;
}

std::mutex cache_mutex;

const std::vector<GroupPtr> &catalog_groups() {
  static const std::vector<GroupPtr> groups = [] {
    std::vector<std::string> refs{"trivial", "V4", "Q8", "S(3)", "S(4)"};
    for (int n = 2; n <= 12; ++n)
      refs.push_back("C(" + std::to_string(n) + ")");
    for (int n = 3; n <= 6; ++n)
      refs.push_back("D(" + std::to_string(n) + ")");
    std::vector<GroupPtr> out;
    for (const auto &r : refs)
      out.push_back(std::make_shared<const FiniteGroup>(builtin_group(r)));
    return out;
  }();
  return groups;
}

const std::vector<ElementSet> &subgroups_of(const GroupPtr &g) {
  static std::map<const FiniteGroup *, std::pair<GroupPtr, std::vector<ElementSet>>> cache;
  std::lock_guard lock(cache_mutex);
  auto it = cache.find(g.get());
  if (it == cache.end())
    it = cache.emplace(g.get(), std::make_pair(g, enumerate_subgroups(*g))).first;
  return it->second.second;
}

LatticePtr random_poset_lattice(Rng &rng, int size, std::uint64_t seed) {
  std::ostringstream name;
  name << "poset_" << std::hex << (seed & 0xffffffffull);
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<std::string> elements{"0"};
    for (int i = 1; i + 1 < size; ++i)
      elements.push_back("p" + std::to_string(i));
    elements.push_back("1");
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 1; i + 1 < size; ++i) {
      covers.emplace_back("0", elements[i]);
      covers.emplace_back(elements[i], "1");
      for (int j = i + 1; j + 1 < size; ++j)
        if (rng.chance(1, 3))
          covers.emplace_back(elements[i], elements[j]);
    }
    try {
      return std::make_shared<const Lattice>(build_lattice(elements, covers, name.str()));
    } catch (const Error &e) {
      if (e.kind() != ErrorKind::NotALattice)
        throw;
    }
  }
  return std::make_shared<const Lattice>(builtin_lattice("chain(" + std::to_string(size) + ")"));
}

LatticePtr pick_lattice(Rng &rng, const InstanceSpec &spec, const ShapeHints &hints) {
  const int max = spec.max_lattice_size;
  auto chain = [&] {
    int n = max < 2 ? 1 : 2 + static_cast<int>(rng.below(static_cast<std::size_t>(max - 1)));
    return std::make_shared<const Lattice>(builtin_lattice("chain(" + std::to_string(n) + ")"));
  };
  if (hints.chain_only || max < 4)
    return chain();
  std::vector<std::string> named{"boolean(2)"};
  if (max >= 5) {
    named.push_back("diamond_M3");
    named.push_back("pentagon_N5");
  }
  if (max >= 7)
    named.push_back("example_M");
  switch (rng.below(3)) {
  case 0:
    return chain();
  case 1:
    return std::make_shared<const Lattice>(builtin_lattice(rng.pick(named)));
  default: {
    int size = 4 + static_cast<int>(rng.below(static_cast<std::size_t>(max - 3)));
    return random_poset_lattice(rng, size, spec.seed);
  }
  }
}

bool abelian(const FiniteGroup &g) {
  for (Element x : g.elements())
    for (Element y : g.elements())
      if (g.mul(x, y) != g.mul(y, x))
        return false;
  return true;
}

GroupPtr pick_group(Rng &rng, const InstanceSpec &spec, const ShapeHints &hints) {
  std::vector<GroupPtr> eligible;
  for (const auto &g : catalog_groups()) {
    if (g->size() > static_cast<std::size_t>(spec.max_group_order))
      continue;
    if (hints.nilpotent_ambient && !prime_power(g->size()))
      continue;
    eligible.push_back(g);
  }
  if (eligible.empty())
    return catalog_groups().front();
  // The catalog is mostly cyclic; give the non-abelian groups half the draws.
  std::vector<GroupPtr> nonabelian;
  for (const auto &g : eligible)
    if (!abelian(*g))
      nonabelian.push_back(g);
  if (!nonabelian.empty() && rng.chance(1, 2))
    return rng.pick(nonabelian);
  return rng.pick(eligible);
}

/// A strictly increasing chain starting at `start`, climbing through upper
/// covers that stay below `cap`. Takes at least one step when it can; with
/// `reach_cap` the climb only stops at cap.
std::vector<Value> value_chain(Rng &rng, const Lattice &l, Value start, Value cap, bool reach_cap) {
  std::vector<Value> chain{start};
  while (true) {
    if (chain.back() == cap || (!reach_cap && chain.size() > 1 && !rng.chance(2, 3)))
      break;
    std::vector<Value> next;
    for (Value w : l.upper_covers(chain.back()))
      if (l.leq(w, cap))
        next.push_back(w);
    if (next.empty())
      break;
    chain.push_back(rng.pick(next));
  }
  return chain;
}

/// value(x) = c_i for the deepest H_i containing x, along a descending chain
/// of subgroups G = H_0 ⊇ H_1 ⊇ ... ; every level is one of the H_i.
LSubset chain_valued(Rng &rng, const GroupPtr &g, const LatticePtr &l, const std::vector<Value> &values,
                     unsigned strict_in_4) {
  const auto &subgroups = subgroups_of(g);
  std::vector<ElementSet> chain{subgroups.back()};
  for (std::size_t i = 1; i < values.size(); ++i) {
    std::vector<ElementSet> proper;
    for (const auto &h : subgroups)
      if (h.subset_of(chain.back()) && !(h == chain.back()))
        proper.push_back(h);
    chain.push_back(!proper.empty() && rng.chance(strict_in_4, 4) ? rng.pick(proper) : chain.back());
  }
  std::vector<Value> out(g->size(), values.front());
  for (std::size_t i = 1; i < values.size(); ++i)
    for (Element x : chain[i].elements())
      out[x.id] = values[i];
  return LSubset(g, l, std::move(out));
}

Value random_start(Rng &rng, const Lattice &l) {
  return rng.chance(1, 2) ? l.bottom() : rng.pick(l.values());
}

} // namespace

InstanceSpec case_spec(const InstanceSpec &spec, std::size_t index) {
  InstanceSpec out = spec;
  out.seed = splitmix(spec.seed ^ splitmix(static_cast<std::uint64_t>(index) + 1));
  return out;
}

Instance gen_instance(const InstanceSpec &spec) {
  if (spec.max_group_order < 1 || spec.max_lattice_size < 1)
    throw Error(ErrorKind::BadSpec, "instance bounds must be positive");
  Rng rng(spec.seed);

  ShapeHints hints;
  if (spec.hints) {
    hints = *spec.hints;
  } else {
    hints.chain_only = rng.chance(1, 3);
    hints.with_hom = rng.chance(1, 3);
    hints.nilpotent_ambient = rng.chance(1, 4);
  }

  GroupPtr g = pick_group(rng, spec, hints);
  LatticePtr l = pick_lattice(rng, spec, hints);

  LSubset mu = chain_valued(rng, g, l, value_chain(rng, *l, random_start(rng, *l), l->top(), false), 1);
  if (rng.chance(1, 3)) {
    LSubset other = chain_valued(rng, g, l, value_chain(rng, *l, random_start(rng, *l), l->top(), false), 1);
    mu = combine({mu, other}, CombineMode::Intersection);
  }

  auto [tip, tail] = extrema(mu);
  auto draw_eta = [&] {
    std::vector<Value> rho_values;
    if (hints.nilpotent_ambient)
      rho_values = value_chain(rng, *l, tail, tip, true);
    else
      rho_values = value_chain(rng, *l, rng.chance(2, 3) ? l->bottom() : rng.pick(l->values()), l->top(),
                               rng.chance(1, 2));
    return combine({mu, chain_valued(rng, g, l, rho_values, 4)}, CombineMode::Intersection);
  };
  // η = μ makes most properties trivial; redraw a few times.
  LSubset eta = draw_eta();
  for (int attempt = 0; attempt < 6 && eta == mu; ++attempt)
    eta = draw_eta();

  std::optional<GroupHom> hom;
  if (hints.with_hom) {
    std::vector<ElementSet> normals;
    ElementSet all(g->size(), g->elements());
    for (const auto &h : subgroups_of(g))
      if (crisp_predicates(*g, all, h).is_normal_in_k)
        normals.push_back(h);
    hom = quotient(g, rng.pick(normals)).second;
  }

  return Instance{spec.seed, hints, g, l, std::move(mu), std::move(eta), std::move(hom)};
}

nlohmann::ordered_json instance_to_json(const Instance &instance) {
  nlohmann::ordered_json doc;
  doc["seed"] = instance.seed;
  doc["hints"] = {{"chain_only", instance.hints.chain_only},
                  {"with_hom", instance.hints.with_hom},
                  {"nilpotent_ambient", instance.hints.nilpotent_ambient}};
  doc["lattice"] = serialize_lattice(*instance.lattice);
  doc["group"] = serialize_group(*instance.group);
  doc["mu"] = serialize_lsubset(instance.mu, "mu");
  doc["eta"] = serialize_lsubset(instance.eta, "eta");
  if (instance.hom) {
    doc["hom_target"] = serialize_group(*instance.hom->target());
    doc["hom"] = serialize_hom(*instance.hom);
  }
  return doc;
}

Instance instance_from_json(const nlohmann::ordered_json &doc) {
  try {
    Workspace ws;
    auto lattice = std::make_shared<const Lattice>(parse_lattice_file(doc.at("lattice").get<std::string>()));
    auto group = std::make_shared<const FiniteGroup>(parse_group_file(doc.at("group").get<std::string>()));
    ws.add_lattice(lattice);
    ws.add_group(group);
    std::optional<GroupHom> hom;
    if (doc.contains("hom")) {
      ws.add_group(std::make_shared<const FiniteGroup>(parse_group_file(doc.at("hom_target").get<std::string>())));
      hom = parse_hom_file(doc.at("hom").get<std::string>(), ws);
    }
    LSubset mu = parse_lsubset_file(doc.at("mu").get<std::string>(), ws);
    LSubset eta = parse_lsubset_file(doc.at("eta").get<std::string>(), ws);
    const auto &h = doc.at("hints");
    ShapeHints hints{h.at("chain_only").get<bool>(), h.at("with_hom").get<bool>(),
                     h.at("nilpotent_ambient").get<bool>()};
    return Instance{doc.at("seed").get<std::uint64_t>(), hints, group, lattice, std::move(mu),
                    std::move(eta), std::move(hom)};
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorKind::BadSpec, std::string("malformed instance document: ") + e.what());
  }
}

} // namespace lfgt
