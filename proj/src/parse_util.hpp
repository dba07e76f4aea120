#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lfgt/error.hpp"

namespace lfgt::detail {

inline std::string_view trim(std::string_view s) {
  const char *ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.emplace_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos)
      break;
    start = pos + 1;
  }
  return out;
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
      ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t')
      ++j;
    if (j > i)
      out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline int parse_int(std::string_view s) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorKind::BadParam, "'" + std::string(s) + "' is not an integer");
  return value;
}

/// "chain(3)" -> {"chain", {3}}, "D(4)" -> {"D", {4}}, "Q8" -> {"Q8", {}}.
inline std::pair<std::string, std::vector<int>> parse_catalog_reference(std::string_view ref) {
  ref = trim(ref);
  auto open = ref.find('(');
  if (open == std::string_view::npos)
    return {std::string(ref), {}};
  if (ref.back() != ')')
    throw Error(ErrorKind::UnknownCatalogKey, "malformed catalog reference '" + std::string(ref) + "'");
  std::vector<int> params;
  auto inner = ref.substr(open + 1, ref.size() - open - 2);
  if (!trim(inner).empty())
    for (const auto &p : split(inner, ','))
      params.push_back(parse_int(p));
  return {std::string(trim(ref.substr(0, open))), params};
}

} // namespace lfgt::detail
