#ifndef INCPATH_RNG_HPP
#define INCPATH_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace incpath {

// The single pinned generator. Only raw 64-bit outputs are consumed; the
// helpers below do the range reduction so results do not depend on the
// standard library's distribution implementations.
using Rng = std::mt19937_64;

inline constexpr std::string_view rng_name = "mt19937_64";
inline constexpr std::string_view seed_mixer_name = "splitmix64";

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed for trial `index` of an experiment with master seed `master`.
constexpr std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

// Uniform integer in [0, bound), bound > 0 (Lemire's nearly-divisionless method).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  __uint128_t m = static_cast<__uint128_t>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<__uint128_t>(rng()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

// Uniform double strictly inside (0, 1): midpoints of the 2^53 grid.
inline double uniform_open01(Rng& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace incpath

#endif  // INCPATH_RNG_HPP
