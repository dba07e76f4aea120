#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace lfgt::detail {

inline std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t mix(std::uint64_t seed, std::string_view salt) {
  std::uint64_t h = seed;
  for (char c : salt)
    h = splitmix(h ^ static_cast<unsigned char>(c));
  return h;
}

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix(seed)) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool chance(unsigned num, unsigned den) { return below(den) < num; }
  template <class T> const T &pick(const std::vector<T> &v) { return v[below(v.size())]; }

private:
  std::mt19937_64 engine_;
};

} // namespace lfgt::detail
