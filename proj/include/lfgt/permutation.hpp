#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lfgt {

/// A permutation of {0, ..., degree-1}, stored as its image vector.
using Permutation = std::vector<std::uint16_t>;

Permutation identity_permutation(int degree);

/// (p * q)(i) = p(q(i)): q acts first.
Permutation compose(const Permutation &p, const Permutation &q);

Permutation inverse(const Permutation &p);

bool is_identity(const Permutation &p);

/// Parses cycle notation over points 1..degree, e.g. "(1 2)(3 4)" or "e".
/// Adjacent cycles compose right to left. Throws BadCycle.
Permutation parse_cycles(std::string_view text, int degree);

/// Canonical cycle notation: each cycle starts at its smallest point, cycles
/// ordered by first point, fixed points omitted, identity spelled "e".
std::string format_cycles(const Permutation &p);

} // namespace lfgt
