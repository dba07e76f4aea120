#pragma once

#include <map>
#include <string>
#include <string_view>

#include "lfgt/group.hpp"
#include "lfgt/lattice.hpp"
#include "lfgt/lsubset.hpp"

namespace lfgt {

/// Named objects available to L-subset and homomorphism files. Lookups fall
/// back to the builtin catalogs ("S(4)", "chain(3)", ...).
class Workspace {
public:
  /// Throws BadParam when the name is already taken.
  void add_lattice(LatticePtr lattice);
  void add_group(GroupPtr group);
  void add_hom(std::string name, GroupHom hom);

  bool has_lattice(const std::string &name) const { return lattices_.contains(name); }
  bool has_group(const std::string &name) const { return groups_.contains(name); }

  /// Throws UnknownReference.
  LatticePtr lattice(const std::string &name);
  GroupPtr group(const std::string &name);
  const GroupHom &hom(const std::string &name) const;

private:
  std::map<std::string, LatticePtr> lattices_;
  std::map<std::string, GroupPtr> groups_;
  std::map<std::string, GroupHom> homs_;
};

/// [lattice] / name = / elements = a b c / covers = a<b b<c
Lattice parse_lattice_file(std::string_view text);

/// [group] / name = / kind = permutation / degree = 4 / generators = (1 2), (1 2 3 4)
/// or kind = table / elements = e a / table = e a / a e
FiniteGroup parse_group_file(std::string_view text);

/// [lsubset] / name = / group = / lattice = / default = / map = e:u, (1 2):d
LSubset parse_lsubset_file(std::string_view text, Workspace &workspace);

/// [hom] / name = / source = / target = / map = x:y, ...
GroupHom parse_hom_file(std::string_view text, Workspace &workspace);

/// Just the `name =` field of a file, if any; used to index sibling files.
std::string peek_name(std::string_view text);
/// First `key = value` line of a file, or empty.
std::string peek_field(std::string_view text, std::string_view key);

std::string serialize_lattice(const Lattice &lattice);
std::string serialize_group(const FiniteGroup &group);
/// Writes the most frequent value as the default.
std::string serialize_lsubset(const LSubset &eta, const std::string &name = {});
std::string serialize_hom(const GroupHom &hom);

} // namespace lfgt
