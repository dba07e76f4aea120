#include "lfgt/lattice.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <unordered_map>

#include "lfgt/error.hpp"
#include "parse_util.hpp"

namespace lfgt {

Value Lattice::value(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    throw Error(ErrorKind::UnknownValue, "'" + std::string(name) + "' is not an element of lattice " +
                                             (name_.empty() ? std::string("<anonymous>") : name_));
  return Value{static_cast<std::uint16_t>(it - names_.begin())};
}

bool Lattice::has_value(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

Value Lattice::join(std::span<const Value> values) const {
  Value acc = bottom_;
  for (Value v : values) {
    if (v.id >= size())
      throw Error(ErrorKind::UnknownElement, "lattice value out of range");
    acc = join(acc, v);
  }
  return acc;
}

Value Lattice::meet(std::span<const Value> values) const {
  Value acc = top_;
  for (Value v : values) {
    if (v.id >= size())
      throw Error(ErrorKind::UnknownElement, "lattice value out of range");
    acc = meet(acc, v);
  }
  return acc;
}

std::vector<Value> Lattice::values() const {
  std::vector<Value> out(size());
  for (std::size_t i = 0; i < size(); ++i)
    out[i] = Value{static_cast<std::uint16_t>(i)};
  return out;
}

std::vector<Value> Lattice::upper_covers(Value v) const {
  std::vector<Value> out;
  for (Value w : values()) {
    if (!lt(v, w))
      continue;
    bool covering = true;
    for (Value m : values())
      if (lt(v, m) && lt(m, w)) {
        covering = false;
        break;
      }
    if (covering)
      out.push_back(w);
  }
  return out;
}

bool Lattice::operator==(const Lattice &other) const {
  return names_ == other.names_ && leq_ == other.leq_;
}

Lattice build_lattice(std::vector<std::string> elements,
                      const std::vector<std::pair<std::string, std::string>> &covers,
                      std::string name) {
  const std::size_t n = elements.size();
  if (n == 0)
    throw Error(ErrorKind::BadParam, "a lattice needs at least one element");
  if (n > std::numeric_limits<std::uint16_t>::max())
    throw Error(ErrorKind::BadParam, "too many lattice elements");

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(elements[i], i).second)
      throw Error(ErrorKind::BadParam, "duplicate lattice element '" + elements[i] + "'");

  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    leq[i * n + i] = 1;
  for (const auto &[lo, hi] : covers) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end() || b == index.end())
      throw Error(ErrorKind::UnknownElement,
                  "cover " + lo + "<" + hi + " references an undeclared element");
    leq[a->second * n + b->second] = 1;
  }

  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k * n + j])
            leq[i * n + j] = 1;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq[i * n + j] && leq[j * n + i])
        throw Error(ErrorKind::NotAPartialOrder,
                    "covers form a cycle through " + elements[i] + " and " + elements[j]);

  auto le = [&](std::size_t i, std::size_t j) { return leq[i * n + j] != 0; };

  std::optional<std::size_t> bottom, top;
  for (std::size_t i = 0; i < n; ++i) {
    bool is_bottom = true, is_top = true;
    for (std::size_t j = 0; j < n; ++j) {
      is_bottom = is_bottom && le(i, j);
      is_top = is_top && le(j, i);
    }
    if (is_bottom)
      bottom = i;
    if (is_top)
      top = i;
  }
  if (!bottom)
    throw Error(ErrorKind::NoBound, "no element lies below every other");
  if (!top)
    throw Error(ErrorKind::NoBound, "no element lies above every other");

  std::vector<std::uint16_t> join(n * n), meet(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      // Least upper bound: an upper bound below every other upper bound.
      std::optional<std::size_t> lub, glb;
      for (std::size_t z = 0; z < n && !lub; ++z) {
        if (!le(x, z) || !le(y, z))
          continue;
        bool least = true;
        for (std::size_t w = 0; w < n && least; ++w)
          if (le(x, w) && le(y, w) && !le(z, w))
            least = false;
        if (least)
          lub = z;
      }
      for (std::size_t z = 0; z < n && !glb; ++z) {
        if (!le(z, x) || !le(z, y))
          continue;
        bool greatest = true;
        for (std::size_t w = 0; w < n && greatest; ++w)
          if (le(w, x) && le(w, y) && !le(w, z))
            greatest = false;
        if (greatest)
          glb = z;
      }
      if (!lub)
        throw Error(ErrorKind::NotALattice,
                    elements[x] + " and " + elements[y] + " have no least upper bound");
      if (!glb)
        throw Error(ErrorKind::NotALattice,
                    elements[x] + " and " + elements[y] + " have no greatest lower bound");
      join[x * n + y] = join[y * n + x] = static_cast<std::uint16_t>(*lub);
      meet[x * n + y] = meet[y * n + x] = static_cast<std::uint16_t>(*glb);
    }
  }

  // Kahn's algorithm, always taking the earliest declared minimal element.
  std::vector<Value> linear;
  std::vector<bool> placed(n, false);
  while (linear.size() < n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (placed[i])
        continue;
      bool minimal = true;
      for (std::size_t j = 0; j < n && minimal; ++j)
        if (!placed[j] && j != i && le(j, i))
          minimal = false;
      if (minimal) {
        placed[i] = true;
        linear.push_back(Value{static_cast<std::uint16_t>(i)});
        break;
      }
    }
  }

  Lattice lattice;
  lattice.name_ = std::move(name);
  lattice.names_ = std::move(elements);
  lattice.leq_ = std::move(leq);
  lattice.join_ = std::move(join);
  lattice.meet_ = std::move(meet);
  lattice.linear_ = std::move(linear);
  lattice.bottom_ = Value{static_cast<std::uint16_t>(*bottom)};
  lattice.top_ = Value{static_cast<std::uint16_t>(*top)};
  return lattice;
}

bool is_distributive(const Lattice &l) {
  for (Value x : l.values())
    for (Value y : l.values())
      for (Value z : l.values())
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
          return false;
  return true;
}

bool is_upper_well_ordered(const Lattice &l) {
  for (Value x : l.values())
    for (Value y : l.values())
      if (!l.comparable(x, y))
        return false;
  return true;
}

namespace {

std::vector<std::pair<std::string, std::string>> chain_covers(const std::vector<std::string> &names) {
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i + 1 < names.size(); ++i)
    covers.emplace_back(names[i], names[i + 1]);
  return covers;
}

Lattice chain(int n) {
  std::vector<std::string> names;
  if (n == 1) {
    names = {"0"};
  } else if (n == 2) {
    names = {"0", "1"};
  } else if (n == 3) {
    names = {"0", "m", "1"};
  } else {
    names.push_back("0");
    for (int i = 1; i + 1 < n; ++i)
      names.push_back("m" + std::to_string(i));
    names.push_back("1");
  }
  auto covers = chain_covers(names);
  return build_lattice(std::move(names), covers, "chain(" + std::to_string(n) + ")");
}

Lattice boolean(int n) {
  if (n > 8)
    throw Error(ErrorKind::BadParam, "boolean(n) is limited to n <= 8");
  const unsigned count = 1u << n;
  auto bits = [n](unsigned mask) {
    std::string s;
    for (int i = n - 1; i >= 0; --i)
      s += (mask >> i) & 1u ? '1' : '0';
    return s;
  };
  std::vector<std::string> names;
  for (unsigned m = 0; m < count; ++m)
    names.push_back(bits(m));
  std::vector<std::pair<std::string, std::string>> covers;
  for (unsigned m = 0; m < count; ++m)
    for (int i = 0; i < n; ++i)
      if (!((m >> i) & 1u))
        covers.emplace_back(bits(m), bits(m | (1u << i)));
  return build_lattice(std::move(names), covers, "boolean(" + std::to_string(n) + ")");
}

} // namespace

Lattice builtin_lattice(std::string_view name, std::span<const int> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw Error(ErrorKind::BadParam, std::string(name) + " expects " + std::to_string(count) +
                                           " parameter(s)");
  };
  if (name == "chain" || name == "boolean") {
    need(1);
    if (params[0] < 1)
      throw Error(ErrorKind::BadParam, std::string(name) + "(n) requires n >= 1");
    if (name == "chain" && params[0] > 256)
      throw Error(ErrorKind::BadParam, "chain(n) is limited to n <= 256");
    return name == "chain" ? chain(params[0]) : boolean(params[0]);
  }
  if (name == "diamond_M3") {
    need(0);
    return build_lattice({"0", "a", "b", "c", "1"},
                         {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}},
                         "diamond_M3");
  }
  if (name == "pentagon_N5") {
    need(0);
    return build_lattice({"0", "a", "b", "c", "1"},
                         {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}},
                         "pentagon_N5");
  }
  if (name == "example_M") {
    need(0);
    return build_lattice({"l", "f", "a", "b", "c", "d", "u"},
                         {{"l", "f"},
                          {"f", "a"},
                          {"f", "b"},
                          {"f", "c"},
                          {"a", "d"},
                          {"b", "d"},
                          {"c", "d"},
                          {"d", "u"}},
                         "example_M");
  }
  throw Error(ErrorKind::UnknownCatalogKey, "no builtin lattice named '" + std::string(name) + "'");
}

Lattice builtin_lattice(std::string_view reference) {
  auto [key, params] = detail::parse_catalog_reference(reference);
  return builtin_lattice(key, params);
}

std::vector<std::string> builtin_lattice_keys() {
  return {"chain(n)", "boolean(n)", "diamond_M3", "pentagon_N5", "example_M"};
}

} // namespace lfgt
