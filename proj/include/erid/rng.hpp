#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>

namespace erid {

// splitmix64 step; the standard seed-spreading finalizer.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Independent stream seed for (base, stream); used to hand each Monte-Carlo
// trial or experiment replica its own generator deterministically.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return splitmix64(base ^ splitmix64(stream + 1));
}

// Uniform double in [0, 1) built from the top 53 bits; portable across
// standard library implementations, unlike uniform_real_distribution.
inline double unit_double(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Samples an index from a probability vector by cumulative walk. The final
// index absorbs any rounding slack.
inline std::size_t sample_index(std::span<const double> probs, std::mt19937_64& g) {
  if (probs.empty()) throw std::invalid_argument("sample_index: empty distribution");
  const double u = unit_double(g);
  double cum = 0.0;
  for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
    cum += probs[i];
    if (u < cum) return i;
  }
  return probs.size() - 1;
}

}  // namespace erid
