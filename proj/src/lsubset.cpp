#include "lfgt/lsubset.hpp"

#include "lfgt/error.hpp"
#include "parse_util.hpp"

namespace lfgt {

namespace {

bool same_group(const GroupPtr &a, const GroupPtr &b) { return a == b || (a && b && *a == *b); }

bool same_lattice(const LatticePtr &a, const LatticePtr &b) { return a == b || (a && b && *a == *b); }

} // namespace

LSubset::LSubset(GroupPtr group, LatticePtr lattice, std::vector<Value> values)
    : group_(std::move(group)), lattice_(std::move(lattice)), values_(std::move(values)) {
  if (!group_ || !lattice_)
    throw Error(ErrorKind::CarrierMismatch, "an L-subset needs a group and a lattice");
  if (values_.size() != group_->size())
    throw Error(ErrorKind::CarrierMismatch, "value map is not total on the group");
  for (Value v : values_)
    if (v.id >= lattice_->size())
      throw Error(ErrorKind::UnknownValue, "value outside the lattice");
}

bool LSubset::operator==(const LSubset &other) const {
  return values_ == other.values_ && same_carriers(*this, other);
}

bool same_carriers(const LSubset &a, const LSubset &b) {
  return same_group(a.group_ptr(), b.group_ptr()) && same_lattice(a.lattice_ptr(), b.lattice_ptr());
}

void require_same_carriers(const LSubset &a, const LSubset &b) {
  if (!same_carriers(a, b))
    throw Error(ErrorKind::MixedCarriers, "L-subsets live over different groups or lattices");
}

LSubset make_lsubset(GroupPtr group, LatticePtr lattice,
                     const std::vector<std::pair<Element, Value>> &assignments, Value fallback) {
  if (fallback.id >= lattice->size())
    throw Error(ErrorKind::UnknownValue, "default value outside the lattice");
  std::vector<Value> values(group->size(), fallback);
  std::vector<bool> assigned(group->size(), false);
  for (auto [x, v] : assignments) {
    if (x.id >= group->size())
      throw Error(ErrorKind::UnknownElement, "element outside the group");
    if (v.id >= lattice->size())
      throw Error(ErrorKind::UnknownValue, "value outside the lattice");
    if (assigned[x.id])
      throw Error(ErrorKind::DuplicateAssignment, group->name(x) + " is assigned twice");
    assigned[x.id] = true;
    values[x.id] = v;
  }
  return LSubset(std::move(group), std::move(lattice), std::move(values));
}

LSubset make_lsubset(GroupPtr group, LatticePtr lattice,
                     const std::vector<std::pair<std::string, std::string>> &assignments,
                     std::string_view fallback) {
  std::vector<std::pair<Element, Value>> resolved;
  resolved.reserve(assignments.size());
  for (const auto &[x, v] : assignments)
    resolved.emplace_back(group->element(x), lattice->value(v));
  Value d = lattice->value(fallback);
  return make_lsubset(std::move(group), std::move(lattice), resolved, d);
}

LSubset constant_lsubset(GroupPtr group, LatticePtr lattice, Value c) {
  std::vector<Value> values(group->size(), c);
  return LSubset(std::move(group), std::move(lattice), std::move(values));
}

LSubset characteristic(GroupPtr group, LatticePtr lattice, const ElementSet &h) {
  if (h.universe() != group->size())
    throw Error(ErrorKind::CarrierMismatch, "set does not belong to this group");
  std::vector<Value> values(group->size(), lattice->bottom());
  for (Element x : h.elements())
    values[x.id] = lattice->top();
  return LSubset(std::move(group), std::move(lattice), std::move(values));
}

LSubset lpoint_subset(GroupPtr group, LatticePtr lattice, LPoint p) {
  if (p.support.id >= group->size())
    throw Error(ErrorKind::UnknownElement, "L-point support outside the group");
  std::vector<Value> values(group->size(), lattice->bottom());
  values[p.support.id] = p.value;
  return LSubset(std::move(group), std::move(lattice), std::move(values));
}

ElementSet level_subset(const LSubset &eta, Value t) {
  const Lattice &l = eta.lattice();
  if (t.id >= l.size())
    throw Error(ErrorKind::UnknownValue, "level outside the lattice");
  ElementSet out(eta.size());
  for (Element x : eta.group().elements())
    if (l.leq(t, eta(x)))
      out.insert(x);
  return out;
}

Extrema extrema(const LSubset &eta) {
  const Lattice &l = eta.lattice();
  return {l.join(eta.values()), l.meet(eta.values())};
}

std::vector<Value> image_values(const LSubset &eta) {
  std::vector<bool> seen(eta.lattice().size(), false);
  for (Value v : eta.values())
    seen[v.id] = true;
  std::vector<Value> out;
  for (Value v : eta.lattice().values())
    if (seen[v.id])
      out.push_back(v);
  return out;
}

bool contains(const LSubset &nu, const LSubset &eta) {
  require_same_carriers(nu, eta);
  const Lattice &l = nu.lattice();
  for (std::size_t i = 0; i < nu.size(); ++i)
    if (!l.leq(eta.values()[i], nu.values()[i]))
      return false;
  return true;
}

LSubset combine(std::span<const LSubset> family, CombineMode mode) {
  if (family.empty())
    throw Error(ErrorKind::EmptyFamily, "cannot combine an empty family");
  const LSubset &first = family.front();
  const Lattice &l = first.lattice();
  std::vector<Value> values = first.values();
  for (const LSubset &s : family.subspan(1)) {
    require_same_carriers(first, s);
    for (std::size_t i = 0; i < values.size(); ++i)
      values[i] = mode == CombineMode::Union ? l.join(values[i], s.values()[i])
                                             : l.meet(values[i], s.values()[i]);
  }
  return LSubset(first.group_ptr(), first.lattice_ptr(), std::move(values));
}

LSubset combine(std::initializer_list<LSubset> family, CombineMode mode) {
  return combine(std::span<const LSubset>(family.begin(), family.size()), mode);
}

LSubset set_product(const LSubset &eta, const LSubset &nu) {
  require_same_carriers(eta, nu);
  const FiniteGroup &g = eta.group();
  const Lattice &l = eta.lattice();
  std::vector<Value> values(g.size(), l.bottom());
  for (Element y : g.elements())
    for (Element z : g.elements()) {
      Element x = g.mul(y, z);
      values[x.id] = l.join(values[x.id], l.meet(eta(y), nu(z)));
    }
  return LSubset(eta.group_ptr(), eta.lattice_ptr(), std::move(values));
}

bool lpoint_in(LPoint p, const LSubset &mu) {
  if (p.support.id >= mu.size())
    throw Error(ErrorKind::UnknownElement, "L-point support outside the group");
  if (p.value.id >= mu.lattice().size())
    throw Error(ErrorKind::UnknownValue, "L-point value outside the lattice");
  return mu.lattice().leq(p.value, mu(p.support));
}

LSubset image(const GroupHom &f, const LSubset &eta) {
  if (!same_group(f.source(), eta.group_ptr()))
    throw Error(ErrorKind::CarrierMismatch, "L-subset does not live on the homomorphism's source");
  const Lattice &l = eta.lattice();
  std::vector<Value> values(f.target()->size(), l.bottom());
  for (Element x : eta.group().elements())
    values[f(x).id] = l.join(values[f(x).id], eta(x));
  return LSubset(f.target(), eta.lattice_ptr(), std::move(values));
}

LSubset preimage(const GroupHom &f, const LSubset &nu) {
  if (!same_group(f.target(), nu.group_ptr()))
    throw Error(ErrorKind::CarrierMismatch, "L-subset does not live on the homomorphism's target");
  std::vector<Value> values;
  values.reserve(f.source()->size());
  for (Element x : f.source()->elements())
    values.push_back(nu(f(x)));
  return LSubset(f.source(), nu.lattice_ptr(), std::move(values));
}

bool has_sup_property(const LSubset &eta) {
  auto im = image_values(eta);
  for (Value a : im)
    for (Value b : im)
      if (!eta.lattice().comparable(a, b))
        return false;
  return true;
}

std::string format_lpoint(const FiniteGroup &group, const Lattice &lattice, LPoint p) {
  return lattice.name(p.value) + "@" + group.name(p.support);
}

LPoint parse_lpoint(const FiniteGroup &group, const Lattice &lattice, std::string_view text) {
  text = detail::trim(text);
  auto at = text.find('@');
  if (at == std::string_view::npos)
    throw Error(ErrorKind::SyntaxError, "L-point '" + std::string(text) + "' needs the form value@element");
  return {lattice.value(detail::trim(text.substr(0, at))), group.element(text.substr(at + 1))};
}

} // namespace lfgt
