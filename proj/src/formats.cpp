#include "lfgt/formats.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "lfgt/error.hpp"
#include "parse_util.hpp"

namespace lfgt {

namespace {

struct Field {
  std::string value;
  int line = 0;
  /// Offset into `value` where each continuation line starts, with its line.
  std::vector<std::pair<std::size_t, int>> continuations;

  int line_at(std::size_t offset) const {
    int l = line;
    for (auto [start, cl] : continuations)
      if (offset >= start)
        l = cl;
    return l;
  }
};

struct Section {
  int line = 0;
  std::map<std::string, Field> fields;

  const Field *find(const std::string &key) const {
    auto it = fields.find(key);
    return it == fields.end() ? nullptr : &it->second;
  }

  const Field &require(const std::string &key) const {
    if (const Field *f = find(key))
      return *f;
    throw Error(ErrorKind::SyntaxError, "missing '" + key + "'", line);
  }
};

Section parse_section(std::string_view text, const std::string &header,
                      const std::set<std::string> &keys) {
  Section section;
  std::string current;
  bool seen_header = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view content = raw;
    if (auto hash = content.find('#'); hash != std::string_view::npos)
      content = content.substr(0, hash);
    content = detail::trim(content);
    if (content.empty())
      continue;
    if (content.front() == '[') {
      if (seen_header)
        throw Error(ErrorKind::SyntaxError, "only one section per file", line);
      if (content != "[" + header + "]")
        throw Error(ErrorKind::SyntaxError,
                    "expected [" + header + "], found " + std::string(content), line);
      seen_header = true;
      section.line = line;
      continue;
    }
    if (!seen_header)
      throw Error(ErrorKind::SyntaxError, "expected [" + header + "] before any field", line);
    auto eq = content.find('=');
    if (eq == std::string_view::npos) {
      if (current.empty())
        throw Error(ErrorKind::SyntaxError, "expected 'key = value'", line);
      Field &f = section.fields[current];
      f.value += " ";
      f.continuations.emplace_back(f.value.size(), line);
      f.value += content;
      continue;
    }
    std::string key(detail::trim(content.substr(0, eq)));
    if (!keys.contains(key))
      throw Error(ErrorKind::SyntaxError, "unknown key '" + key + "'", line);
    if (section.fields.contains(key))
      throw Error(ErrorKind::SyntaxError, "duplicate key '" + key + "'", line);
    section.fields[key] = Field{std::string(detail::trim(content.substr(eq + 1))), line, {}};
    current = key;
  }
  if (!seen_header)
    throw Error(ErrorKind::SyntaxError, "missing [" + header + "] section", line == 0 ? 1 : line);
  return section;
}

struct Item {
  std::string text;
  std::size_t offset = 0;
};

/// Splits on commas outside parentheses, so "(a,b):u, (1 2):d" has two items.
std::vector<Item> split_items(std::string_view s) {
  std::vector<Item> out;
  int depth = 0;
  std::size_t start = 0;
  auto push = [&](std::size_t end) {
    std::string_view piece = s.substr(start, end - start);
    std::size_t lead = 0;
    while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead])))
      ++lead;
    out.push_back({std::string(detail::trim(piece)), start + lead});
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(')
      ++depth;
    else if (s[i] == ')')
      --depth;
    else if (s[i] == ',' && depth == 0) {
      push(i);
      start = i + 1;
    }
  }
  push(s.size());
  if (out.size() == 1 && out.front().text.empty())
    out.clear();
  return out;
}

/// Splits on whitespace outside brackets, so "[(1 2)] (0,1)" has two items.
std::vector<std::string> split_ws_top_level(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[')
      ++depth;
    else if (c == ')' || c == ']')
      --depth;
    if (depth == 0 && std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty())
        out.push_back(std::move(cur));
      cur.clear();
      continue;
    }
    cur += c;
  }
  if (!cur.empty())
    out.push_back(std::move(cur));
  return out;
}

struct MapEntry {
  std::string key;
  std::string value;
  int line = 0;
};

/// "elt:value" pairs; the value follows the last ':'.
std::vector<MapEntry> parse_map(const Field &field) {
  std::vector<MapEntry> out;
  for (const auto &item : split_items(field.value)) {
    const int line = field.line_at(item.offset);
    auto colon = item.text.rfind(':');
    if (item.text.empty() || colon == std::string::npos)
      throw Error(ErrorKind::SyntaxError, "map entry '" + item.text + "' needs the form element:value", line);
    out.push_back({std::string(detail::trim(item.text.substr(0, colon))),
                   std::string(detail::trim(item.text.substr(colon + 1))), line});
  }
  return out;
}

template <class F>
auto at_line(int line, F &&f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error &e) {
    if (e.line())
      throw;
    throw Error(e.kind(), e.message(), line);
  }
}

std::string name_or(const Section &s, std::string fallback = {}) {
  const Field *f = s.find("name");
  return f ? f->value : std::move(fallback);
}

} // namespace

void Workspace::add_lattice(LatticePtr lattice) {
  if (!lattices_.emplace(lattice->name(), lattice).second)
    throw Error(ErrorKind::BadParam, "lattice '" + lattice->name() + "' is already loaded");
}

void Workspace::add_group(GroupPtr group) {
  if (!groups_.emplace(group->name(), group).second)
    throw Error(ErrorKind::BadParam, "group '" + group->name() + "' is already loaded");
}

void Workspace::add_hom(std::string name, GroupHom hom) {
  if (!homs_.emplace(name, std::move(hom)).second)
    throw Error(ErrorKind::BadParam, "homomorphism '" + name + "' is already loaded");
}

LatticePtr Workspace::lattice(const std::string &name) {
  if (auto it = lattices_.find(name); it != lattices_.end())
    return it->second;
  try {
    auto l = std::make_shared<const Lattice>(builtin_lattice(name));
    lattices_.emplace(name, l);
    return l;
  } catch (const Error &e) {
    if (e.kind() == ErrorKind::UnknownCatalogKey)
      throw Error(ErrorKind::UnknownReference, "no lattice named '" + name + "'");
    throw;
  }
}

GroupPtr Workspace::group(const std::string &name) {
  if (auto it = groups_.find(name); it != groups_.end())
    return it->second;
  try {
    auto g = std::make_shared<const FiniteGroup>(builtin_group(name));
    groups_.emplace(name, g);
    return g;
  } catch (const Error &e) {
    if (e.kind() == ErrorKind::UnknownCatalogKey)
      throw Error(ErrorKind::UnknownReference, "no group named '" + name + "'");
    throw;
  }
}

const GroupHom &Workspace::hom(const std::string &name) const {
  auto it = homs_.find(name);
  if (it == homs_.end())
    throw Error(ErrorKind::UnknownReference, "no homomorphism named '" + name + "'");
  return it->second;
}

Lattice parse_lattice_file(std::string_view text) {
  Section s = parse_section(text, "lattice", {"name", "elements", "covers"});
  const Field &elements_field = s.require("elements");
  auto elements = detail::split_ws(elements_field.value);
  std::set<std::string> declared(elements.begin(), elements.end());

  std::vector<std::pair<std::string, std::string>> covers;
  if (const Field *f = s.find("covers")) {
    for (const auto &token : detail::split_ws(f->value)) {
      auto lt = token.find('<');
      if (lt == std::string::npos || lt == 0 || lt + 1 == token.size())
        throw Error(ErrorKind::SyntaxError, "cover '" + token + "' needs the form x<y", f->line);
      std::string lo = token.substr(0, lt), hi = token.substr(lt + 1);
      for (const auto &n : {lo, hi})
        if (!declared.contains(n))
          throw Error(ErrorKind::SyntaxError, "cover '" + token + "' uses undeclared element '" + n + "'",
                      f->line);
      covers.emplace_back(lo, hi);
    }
  }
  return at_line(elements_field.line,
                 [&] { return build_lattice(elements, covers, name_or(s)); });
}

FiniteGroup parse_group_file(std::string_view text) {
  Section s = parse_section(text, "group", {"name", "kind", "degree", "generators", "elements", "table"});
  const Field &kind = s.require("kind");
  if (kind.value == "permutation") {
    const Field &degree_field = s.require("degree");
    int degree = at_line(degree_field.line, [&] { return detail::parse_int(degree_field.value); });
    if (degree < 1)
      throw Error(ErrorKind::SyntaxError, "degree must be positive", degree_field.line);
    std::vector<Permutation> gens;
    if (const Field *f = s.find("generators")) {
      for (const auto &item : split_items(f->value)) {
        try {
          gens.push_back(parse_cycles(item.text, degree));
        } catch (const Error &e) {
          throw Error(ErrorKind::SyntaxError, e.message(), f->line_at(item.offset));
        }
      }
    }
    return build_group_perm(degree, gens, name_or(s));
  }
  if (kind.value == "table") {
    const Field &elements_field = s.require("elements");
    const Field &table_field = s.require("table");
    auto names = split_ws_top_level(elements_field.value);
    std::vector<std::vector<std::string>> rows;
    for (const auto &row : detail::split(table_field.value, '/'))
      rows.push_back(split_ws_top_level(row));
    return at_line(table_field.line, [&] { return build_group_table(names, rows, name_or(s)); });
  }
  throw Error(ErrorKind::SyntaxError, "kind must be 'permutation' or 'table'", kind.line);
}

LSubset parse_lsubset_file(std::string_view text, Workspace &workspace) {
  Section s = parse_section(text, "lsubset", {"name", "group", "lattice", "default", "map"});
  const Field &group_field = s.require("group");
  const Field &lattice_field = s.require("lattice");
  GroupPtr group = at_line(group_field.line, [&] { return workspace.group(group_field.value); });
  LatticePtr lattice = at_line(lattice_field.line, [&] { return workspace.lattice(lattice_field.value); });

  std::vector<MapEntry> entries;
  int map_line = s.line;
  if (const Field *f = s.find("map")) {
    entries = parse_map(*f);
    map_line = f->line;
  }
  const Field *fallback = s.find("default");
  if (!fallback) {
    std::set<Element> covered;
    for (const auto &entry : entries)
      if (auto e = group->find(entry.key))
        covered.insert(*e);
    if (covered.size() != group->size())
      throw Error(ErrorKind::SyntaxError, "no default and the map does not cover every element", map_line);
  }
  std::vector<std::pair<Element, Value>> resolved;
  std::set<Element> seen;
  for (const auto &entry : entries)
    at_line(entry.line, [&] {
      Element x = group->element(entry.key);
      if (!seen.insert(x).second)
        throw Error(ErrorKind::DuplicateAssignment, entry.key + " is assigned twice");
      resolved.emplace_back(x, lattice->value(entry.value));
      return 0;
    });
  Value d = fallback ? at_line(fallback->line, [&] { return lattice->value(fallback->value); })
                     : lattice->bottom();
  return at_line(map_line, [&] { return make_lsubset(group, lattice, resolved, d); });
}

GroupHom parse_hom_file(std::string_view text, Workspace &workspace) {
  Section s = parse_section(text, "hom", {"name", "source", "target", "map"});
  const Field &source_field = s.require("source");
  const Field &target_field = s.require("target");
  const Field &map_field = s.require("map");
  GroupPtr source = at_line(source_field.line, [&] { return workspace.group(source_field.value); });
  GroupPtr target = at_line(target_field.line, [&] { return workspace.group(target_field.value); });
  std::vector<std::optional<Element>> partial(source->size());
  for (const auto &entry : parse_map(map_field))
    at_line(entry.line, [&] {
      Element from = source->element(entry.key);
      if (partial[from.id])
        throw Error(ErrorKind::DuplicateAssignment, entry.key + " is mapped twice");
      partial[from.id] = target->element(entry.value);
      return 0;
    });
  std::vector<Element> map;
  for (std::size_t i = 0; i < partial.size(); ++i) {
    if (!partial[i])
      throw Error(ErrorKind::SyntaxError,
                  "map does not cover " + source->name(Element{static_cast<std::uint32_t>(i)}),
                  map_field.line);
    map.push_back(*partial[i]);
  }
  return at_line(map_field.line, [&] { return build_hom(source, target, std::move(map), name_or(s)); });
}

std::string peek_name(std::string_view text) { return peek_field(text, "name"); }

std::string peek_field(std::string_view text, std::string_view key) {
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    std::string_view content = raw;
    if (auto hash = content.find('#'); hash != std::string_view::npos)
      content = content.substr(0, hash);
    auto eq = content.find('=');
    if (eq != std::string_view::npos && detail::trim(content.substr(0, eq)) == key)
      return std::string(detail::trim(content.substr(eq + 1)));
  }
  return {};
}

std::string serialize_lattice(const Lattice &lattice) {
  std::ostringstream out;
  out << "[lattice]\n";
  if (!lattice.name().empty())
    out << "name = " << lattice.name() << "\n";
  out << "elements =";
  for (const auto &n : lattice.names())
    out << " " << n;
  out << "\ncovers =";
  for (Value v : lattice.values())
    for (Value w : lattice.upper_covers(v))
      out << " " << lattice.name(v) << "<" << lattice.name(w);
  out << "\n";
  return out.str();
}

std::string serialize_group(const FiniteGroup &group) {
  std::ostringstream out;
  out << "[group]\n";
  if (!group.name().empty())
    out << "name = " << group.name() << "\n";
  if (group.is_permutation_group()) {
    out << "kind = permutation\ndegree = " << group.degree() << "\ngenerators =";
    bool first = true;
    for (const auto &gen : group.generators()) {
      out << (first ? " " : ", ") << format_cycles(gen);
      first = false;
    }
    out << "\n";
    return out.str();
  }
  out << "kind = table\nelements =";
  for (const auto &n : group.names())
    out << " " << n;
  out << "\ntable =";
  for (Element x : group.elements()) {
    if (x.id > 0)
      out << " /";
    for (Element y : group.elements())
      out << " " << group.name(group.mul(x, y));
  }
  out << "\n";
  return out.str();
}

std::string serialize_lsubset(const LSubset &eta, const std::string &name) {
  const Lattice &l = eta.lattice();
  std::vector<std::size_t> count(l.size(), 0);
  for (Value v : eta.values())
    ++count[v.id];
  Value fallback{static_cast<std::uint16_t>(std::max_element(count.begin(), count.end()) - count.begin())};

  std::ostringstream out;
  out << "[lsubset]\n";
  if (!name.empty())
    out << "name = " << name << "\n";
  out << "group = " << eta.group().name() << "\nlattice = " << l.name() << "\ndefault = "
      << l.name(fallback) << "\nmap =";
  bool first = true;
  for (Element x : eta.group().elements()) {
    if (eta(x) == fallback)
      continue;
    out << (first ? " " : ", ") << eta.group().name(x) << ":" << l.name(eta(x));
    first = false;
  }
  out << "\n";
  return out.str();
}

std::string serialize_hom(const GroupHom &hom) {
  std::ostringstream out;
  out << "[hom]\n";
  if (!hom.name().empty())
    out << "name = " << hom.name() << "\n";
  out << "source = " << hom.source()->name() << "\ntarget = " << hom.target()->name() << "\nmap =";
  for (Element x : hom.source()->elements())
    out << (x.id == 0 ? " " : ", ") << hom.source()->name(x) << ":" << hom.target()->name(hom(x));
  out << "\n";
  return out.str();
}

} // namespace lfgt
