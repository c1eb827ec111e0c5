#ifndef NOISYCLIMB_RANDOM_HPP_
#define NOISYCLIMB_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace noisyclimb {

// Every stochastic operation takes a caller-owned generator of this type.
using Rng = std::mt19937_64;

// Uniform draw in [0, 1) built from the top 53 bits. Unlike
// std::generate_canonical this can never return exactly 1.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform draw in [-bound, bound).
inline double uniform_symmetric(Rng& rng, double bound) {
  return bound * (2.0 * uniform01(rng) - 1.0);
}

inline double standard_normal(Rng& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  return dist(rng);
}

// Independent generator for stream `stream` of a run seeded with `seed`.
inline Rng make_stream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  return Rng(seq);
}

}  // namespace noisyclimb

#endif  // NOISYCLIMB_RANDOM_HPP_
