#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lfgt/group.hpp"
#include "lfgt/lattice.hpp"

namespace lfgt {

/// The L-point a_x: value a concentrated at x, bottom elsewhere.
struct LPoint {
  Value value;
  Element support;
  auto operator<=>(const LPoint &) const = default;
};

/// A total map from the elements of a group into a lattice.
class LSubset {
public:
  /// Throws CarrierMismatch when `values` does not cover the group.
  LSubset(GroupPtr group, LatticePtr lattice, std::vector<Value> values);

  const GroupPtr &group_ptr() const { return group_; }
  const LatticePtr &lattice_ptr() const { return lattice_; }
  const FiniteGroup &group() const { return *group_; }
  const Lattice &lattice() const { return *lattice_; }

  Value operator()(Element x) const { return values_[x.id]; }
  const std::vector<Value> &values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  /// Equal carriers and equal value maps.
  bool operator==(const LSubset &other) const;

private:
  GroupPtr group_;
  LatticePtr lattice_;
  std::vector<Value> values_;
};

/// Carriers match when they are the same objects or compare equal.
bool same_carriers(const LSubset &a, const LSubset &b);
/// Throws MixedCarriers.
void require_same_carriers(const LSubset &a, const LSubset &b);

/// Unassigned elements take `fallback`. Throws DuplicateAssignment,
/// UnknownElement, UnknownValue.
LSubset make_lsubset(GroupPtr group, LatticePtr lattice,
                     const std::vector<std::pair<Element, Value>> &assignments, Value fallback);

/// Same, resolving names through the group and lattice.
LSubset make_lsubset(GroupPtr group, LatticePtr lattice,
                     const std::vector<std::pair<std::string, std::string>> &assignments,
                     std::string_view fallback);

LSubset constant_lsubset(GroupPtr group, LatticePtr lattice, Value c);

/// 1_H: top on H, bottom elsewhere.
LSubset characteristic(GroupPtr group, LatticePtr lattice, const ElementSet &h);

/// a_x as a full L-subset.
LSubset lpoint_subset(GroupPtr group, LatticePtr lattice, LPoint p);

/// {x : η(x) >= t}. Throws UnknownValue for a value outside the lattice.
ElementSet level_subset(const LSubset &eta, Value t);

struct Extrema {
  Value tip;
  Value tail;
};

Extrema extrema(const LSubset &eta);

/// Attained values, in lattice declaration order.
std::vector<Value> image_values(const LSubset &eta);

/// η(x) <= ν(x) everywhere. Throws MixedCarriers.
bool contains(const LSubset &nu, const LSubset &eta);

enum class CombineMode { Union, Intersection };

/// Pointwise join or meet of a family. Throws EmptyFamily, MixedCarriers.
LSubset combine(std::span<const LSubset> family, CombineMode mode);
LSubset combine(std::initializer_list<LSubset> family, CombineMode mode);

/// (η ∘ ν)(x) = join over x = yz of η(y) ∧ ν(z). Throws MixedCarriers.
LSubset set_product(const LSubset &eta, const LSubset &nu);

/// μ(x) >= a. Throws UnknownElement / UnknownValue for out-of-range points.
bool lpoint_in(LPoint p, const LSubset &mu);

/// f(η)(y) = join of η over the fibre of y (bottom on an empty fibre).
/// Throws CarrierMismatch.
LSubset image(const GroupHom &f, const LSubset &eta);

/// f⁻¹(ν) = ν ∘ f. Throws CarrierMismatch.
LSubset preimage(const GroupHom &f, const LSubset &nu);

/// Every non-empty subset of the carrier attains its join; checked as "the
/// image is a chain".
bool has_sup_property(const LSubset &eta);

/// "d@(1 2 3)"
std::string format_lpoint(const FiniteGroup &group, const Lattice &lattice, LPoint p);
/// Throws SyntaxError for a missing '@', then UnknownValue / UnknownElement.
LPoint parse_lpoint(const FiniteGroup &group, const Lattice &lattice, std::string_view text);

} // namespace lfgt
