#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace adrank {

/// Derives an independent stream seed from a base seed and a stream label.
/// All randomness in the library flows from explicit config seeds through
/// these named substreams, so runs are reproducible by construction.
inline std::uint64_t substream_seed(std::uint64_t base, std::string_view name,
                                    std::uint64_t index = 0) {
  // FNV-1a over the label, then splitmix64 finalization mixing in the parts.
  std::uint64_t h = 14695981039346656037ull;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (h ^ (index + 1));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t base, std::string_view name,
                    std::uint64_t index = 0) {
  return Rng(substream_seed(base, name, index));
}

/// Uniform double in [0, 1) with 53 random bits. Hand-rolled because the
/// standard distributions are not guaranteed to produce identical sequences
/// across library implementations.
inline double next_double(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in (0, 1]; never returns 0 (safe for inverse transforms).
inline double next_double_open(Rng& rng) {
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

/// Uniform integer in [0, n). Rejection sampling keeps the draw unbiased.
inline std::uint64_t next_index(Rng& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

/// Uniform integer in the closed interval [lo, hi].
inline int next_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(next_index(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace adrank
