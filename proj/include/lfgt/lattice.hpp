#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lfgt {

/// Handle to an element of a Lattice (index into its element list).
struct Value {
  std::uint16_t id = 0;
  auto operator<=>(const Value &) const = default;
};

/// A finite bounded lattice with materialized order, join and meet tables.
///
/// Instances are immutable; construct through build_lattice() or
/// builtin_lattice(), which validate every lattice axiom.
class Lattice {
public:
  std::size_t size() const { return names_.size(); }
  const std::string &name() const { return name_; }
  const std::string &name(Value v) const { return names_[v.id]; }
  const std::vector<std::string> &names() const { return names_; }

  /// Throws UnknownValue for an undeclared name.
  Value value(std::string_view name) const;
  bool has_value(std::string_view name) const;

  Value bottom() const { return bottom_; }
  Value top() const { return top_; }

  bool leq(Value x, Value y) const { return leq_[index(x, y)] != 0; }
  bool lt(Value x, Value y) const { return x != y && leq(x, y); }
  bool comparable(Value x, Value y) const { return leq(x, y) || leq(y, x); }

  Value join(Value x, Value y) const { return Value{join_[index(x, y)]}; }
  Value meet(Value x, Value y) const { return Value{meet_[index(x, y)]}; }

  /// Join of a set; the empty join is bottom. Throws UnknownElement.
  Value join(std::span<const Value> values) const;
  /// Meet of a set; the empty meet is top. Throws UnknownElement.
  Value meet(std::span<const Value> values) const;

  /// All values in declaration order.
  std::vector<Value> values() const;

  /// A fixed linear extension of the order (bottom first), ties broken by
  /// declaration order.
  const std::vector<Value> &linear_extension() const { return linear_; }

  /// Elements covering `v` in the Hasse diagram.
  std::vector<Value> upper_covers(Value v) const;

  bool operator==(const Lattice &other) const;

private:
  friend Lattice build_lattice(std::vector<std::string>,
                               const std::vector<std::pair<std::string, std::string>> &,
                               std::string);

  std::size_t index(Value x, Value y) const { return x.id * names_.size() + y.id; }

  std::string name_;
  std::vector<std::string> names_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::uint16_t> join_;
  std::vector<std::uint16_t> meet_;
  std::vector<Value> linear_;
  Value bottom_;
  Value top_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

/// Builds a lattice from a Hasse description: `covers` holds pairs (x, y)
/// meaning x < y. The order is the reflexive-transitive closure of covers.
///
/// Throws NotAPartialOrder (cycle), NoBound (no global bottom or top),
/// NotALattice (some pair lacks a unique least upper / greatest lower bound),
/// UnknownElement / BadParam for malformed input.
Lattice build_lattice(std::vector<std::string> elements,
                      const std::vector<std::pair<std::string, std::string>> &covers,
                      std::string name = {});

/// x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z) for every triple.
bool is_distributive(const Lattice &lattice);

/// Every non-empty subset contains its join; for a finite lattice this is
/// the order being total.
bool is_upper_well_ordered(const Lattice &lattice);

/// Catalog keys: "chain" (n >= 1), "boolean" (n >= 1), "diamond_M3",
/// "pentagon_N5", "example_M". Throws UnknownCatalogKey / BadParam.
Lattice builtin_lattice(std::string_view name, std::span<const int> params);

/// Parses references such as "chain(3)", "boolean(2)", "example_M".
Lattice builtin_lattice(std::string_view reference);

std::vector<std::string> builtin_lattice_keys();

} // namespace lfgt
