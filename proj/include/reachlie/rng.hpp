#ifndef REACHLIE_RNG_HPP
#define REACHLIE_RNG_HPP

#include <cstdint>
#include <vector>

namespace reachlie {

/// splitmix64; fixed algorithm so the same seed gives the same stream on
/// every platform (std::uniform_int_distribution does not promise that).
class Rng
{
public:
  explicit Rng(std::uint64_t seed) : m_state(seed) {}

  std::uint64_t next()
  {
    std::uint64_t z = (m_state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi]; modulo bias is immaterial here.
  long range(long lo, long hi)
  {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

private:
  std::uint64_t m_state;
};

/// Deterministic per-task seed from a global seed and a digit tag.
inline std::uint64_t derive_seed(std::uint64_t global, const std::vector<int>& tag,
                                 std::uint64_t salt = 0)
{
  std::uint64_t h = global ^ 0x51ab5e1f00d5eedULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
  };
  mix(salt);
  for (int d : tag)
    mix(static_cast<std::uint64_t>(d + 7));
  return h;
}

} // namespace reachlie

#endif
