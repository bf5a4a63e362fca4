#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace sqgda {

/// splitmix64 finalizer, used to whiten seeds when deriving substreams.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Seed for an independent substream identified by (base, domain, index).
/// Substreams owned by different (domain, index) pairs never collide in
/// practice, which is what lets ensemble members, observation draws and
/// pseudo-time noise run concurrently yet reproduce bit-identically for a
/// fixed master seed regardless of thread count.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::string_view domain,
                                    std::uint64_t index = 0) noexcept {
  return splitmix64(splitmix64(base ^ fnv1a64(domain)) ^
                    splitmix64(index ^ 0x6a09e667f3bcc909ULL));
}

using RngEngine = std::mt19937_64;

inline RngEngine make_rng(std::uint64_t base, std::string_view domain,
                          std::uint64_t index = 0) {
  return RngEngine{derive_seed(base, domain, index)};
}

inline double draw_standard_normal(RngEngine& rng) {
  std::normal_distribution<double> n01;
  return n01(rng);
}

inline void fill_standard_normal(RngEngine& rng, std::span<double> out) {
  std::normal_distribution<double> n01;
  for (double& v : out) v = n01(rng);
}

inline double draw_uniform01(RngEngine& rng) {
  std::uniform_real_distribution<double> u01;
  return u01(rng);
}

}  // namespace sqgda
