#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lfgt/permutation.hpp"

namespace lfgt {

/// Handle to an element of a FiniteGroup (index into its carrier order).
struct Element {
  std::uint32_t id = 0;
  auto operator<=>(const Element &) const = default;
};

/// A subset of a group's carrier, stored as a membership mask.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe, false) {}
  ElementSet(std::size_t universe, std::span<const Element> members);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(Element x) const { return bits_[x.id]; }
  void insert(Element x);
  void erase(Element x);

  /// Members in carrier order.
  std::vector<Element> elements() const;
  bool subset_of(const ElementSet &other) const;

  bool operator==(const ElementSet &other) const { return bits_ == other.bits_; }

private:
  std::vector<bool> bits_;
  std::size_t count_ = 0;
};

/// A finite group given by its multiplication table. Permutation groups also
/// keep their degree, generators and the permutation behind every element so
/// that cycle notation can be parsed and printed.
class FiniteGroup {
public:
  std::size_t size() const { return names_.size(); }
  const std::string &name() const { return name_; }
  const std::string &name(Element x) const { return names_[x.id]; }
  const std::vector<std::string> &names() const { return names_; }

  Element identity() const { return identity_; }
  Element mul(Element x, Element y) const { return Element{table_[x.id * size() + y.id]}; }
  Element inv(Element x) const { return Element{inverse_[x.id]}; }
  /// w x w⁻¹
  Element conj(Element w, Element x) const { return mul(mul(w, x), inv(w)); }

  std::vector<Element> elements() const;

  /// Resolves an element name. Permutation groups accept any cycle notation
  /// for the element; every group accepts "e" for the identity unless some
  /// element is literally named "e". Throws UnknownElement.
  Element element(std::string_view name) const;
  std::optional<Element> find(std::string_view name) const;

  bool is_permutation_group() const { return degree_ > 0; }
  int degree() const { return degree_; }
  const std::vector<Permutation> &generators() const { return generators_; }
  const Permutation &permutation(Element x) const { return perms_[x.id]; }

  bool operator==(const FiniteGroup &other) const {
    return names_ == other.names_ && table_ == other.table_;
  }

private:
  friend FiniteGroup build_group_table(const std::vector<std::string> &,
                                       const std::vector<std::vector<std::string>> &, std::string);
  friend FiniteGroup build_group_perm(int, const std::vector<Permutation> &, std::string, std::size_t);

  std::string name_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> by_name_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  Element identity_;
  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> perms_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline constexpr std::size_t kDefaultOrderCap = 10000;

/// Validates a Cayley table given row by row over `names`.
/// Throws MalformedTable, NoIdentity, NoInverse, NotAssociative.
FiniteGroup build_group_table(const std::vector<std::string> &names,
                              const std::vector<std::vector<std::string>> &table,
                              std::string name = {});

/// Closes `generators` under composition. Elements are ordered breadth-first
/// from the identity, each layer sorted lexicographically by image vector.
/// Throws BadCycle (degree mismatch) and OrderCap.
FiniteGroup build_group_perm(int degree, const std::vector<Permutation> &generators,
                             std::string name = {}, std::size_t order_cap = kDefaultOrderCap);

/// Convenience overload taking generators in cycle notation.
FiniteGroup build_group_perm(int degree, const std::vector<std::string> &generators,
                             std::string name = {}, std::size_t order_cap = kDefaultOrderCap);

/// Smallest subgroup containing `generators`; the empty set closes to {e}.
ElementSet subgroup_closure(const FiniteGroup &group, const ElementSet &generators);
ElementSet subgroup_closure(const FiniteGroup &group, std::span<const Element> generators);

bool is_subgroup(const FiniteGroup &group, const ElementSet &h);

/// w H w⁻¹. Throws NotASubgroup.
ElementSet conjugate_subgroup(const FiniteGroup &group, const ElementSet &h, Element w);

struct CrispPredicates {
  bool is_subgroup = false;
  bool is_normal_in_k = false;
};

CrispPredicates crisp_predicates(const FiniteGroup &group, const ElementSet &k, const ElementSet &h);

/// Result of the classical pronormality search. On success `witness` maps
/// every g in K to some y in ⟨H, H^g⟩ with H^y = H^g.
struct CrispPronormalVerdict {
  bool holds = false;
  std::vector<std::pair<Element, Element>> witness;
  std::optional<Element> counterexample;
};

/// Is H pronormal in K? Throws NotASubgroup / NotContained.
CrispPronormalVerdict crisp_pronormal(const FiniteGroup &group, const ElementSet &k,
                                      const ElementSet &h);

/// Every subgroup of the group, smallest first (then by carrier order of the
/// membership mask).
std::vector<ElementSet> enumerate_subgroups(const FiniteGroup &group);

/// A homomorphism between finite groups with a precomputed surjectivity flag.
class GroupHom {
public:
  const GroupPtr &source() const { return source_; }
  const GroupPtr &target() const { return target_; }
  Element operator()(Element x) const { return map_[x.id]; }
  const std::vector<Element> &map() const { return map_; }
  bool surjective() const { return surjective_; }
  bool injective() const { return injective_; }
  const std::string &name() const { return name_; }

private:
  friend GroupHom build_hom(GroupPtr, GroupPtr, std::vector<Element>, std::string);

  GroupPtr source_;
  GroupPtr target_;
  std::vector<Element> map_;
  bool surjective_ = false;
  bool injective_ = false;
  std::string name_;
};

/// Throws NotAHomomorphism, CarrierMismatch (map size).
GroupHom build_hom(GroupPtr source, GroupPtr target, std::vector<Element> map,
                   std::string name = {});

GroupHom identity_hom(const GroupPtr &group);

/// G/N as a table group whose elements are named "[rep]" after the first
/// coset member in carrier order, together with the canonical projection.
/// Throws NotASubgroup when N is not normal.
std::pair<GroupPtr, GroupHom> quotient(const GroupPtr &group, const ElementSet &normal);

/// G × H as a table group with elements named "(g,h)".
FiniteGroup direct_product(const FiniteGroup &g, const FiniteGroup &h);

/// Catalog: S(n) for n <= 5, C(n), D(n) (dihedral of order 2n), V4, Q8,
/// trivial. Throws UnknownCatalogKey / BadParam.
FiniteGroup builtin_group(std::string_view name, std::span<const int> params);

/// Parses references such as "S(4)", "D(4)", "Q8".
FiniteGroup builtin_group(std::string_view reference);

std::vector<std::string> builtin_group_keys();

} // namespace lfgt
