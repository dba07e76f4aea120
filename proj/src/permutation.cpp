#include "lfgt/permutation.hpp"

#include <cctype>

#include "lfgt/error.hpp"

namespace lfgt {

Permutation identity_permutation(int degree) {
  Permutation p(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i)
    p[i] = static_cast<std::uint16_t>(i);
  return p;
}

Permutation compose(const Permutation &p, const Permutation &q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    r[i] = p[q[i]];
  return r;
}

Permutation inverse(const Permutation &p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    r[p[i]] = static_cast<std::uint16_t>(i);
  return r;
}

bool is_identity(const Permutation &p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i)
      return false;
  return true;
}

Permutation parse_cycles(std::string_view text, int degree) {
  if (degree < 1)
    throw Error(ErrorKind::BadCycle, "degree must be positive");
  Permutation result = identity_permutation(degree);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto last = text.find_last_not_of(" \t\r\n");
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text.substr(first, last - first + 1) == "e")
    return result;

  std::vector<Permutation> cycles;
  while (true) {
    skip_ws();
    if (i >= text.size())
      break;
    if (text[i] != '(')
      throw Error(ErrorKind::BadCycle, "expected '(' in '" + std::string(text) + "'");
    ++i;
    std::vector<int> points;
    while (true) {
      skip_ws();
      if (i >= text.size())
        throw Error(ErrorKind::BadCycle, "unterminated cycle in '" + std::string(text) + "'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw Error(ErrorKind::BadCycle, "unexpected '" + std::string(1, text[i]) + "' in cycle");
      int point = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        point = point * 10 + (text[i] - '0');
        if (point > 1'000'000)
          throw Error(ErrorKind::BadCycle, "point out of range");
        ++i;
      }
      if (point < 1 || point > degree)
        throw Error(ErrorKind::BadCycle, "point " + std::to_string(point) + " outside 1.." +
                                             std::to_string(degree));
      for (int seen : points)
        if (seen == point)
          throw Error(ErrorKind::BadCycle, "point " + std::to_string(point) + " repeated in a cycle");
      points.push_back(point);
    }
    Permutation cycle = identity_permutation(degree);
    for (std::size_t k = 0; k < points.size(); ++k)
      cycle[points[k] - 1] = static_cast<std::uint16_t>(points[(k + 1) % points.size()] - 1);
    cycles.push_back(std::move(cycle));
  }
  for (const auto &c : cycles)
    result = compose(result, c);
  return result;
}

std::string format_cycles(const Permutation &p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start)
      continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first)
        out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = p[x];
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

} // namespace lfgt
