#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "specdev/graph.hpp"

namespace specdev {

// Counter-based deterministic randomness: every random bit is a pure
// function of (seed, counter), so corpora replay identically regardless of
// evaluation order or parallel partitioning.

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Uniform double in [0, 1) for the given (seed, counter) pair.
inline double counter_uniform01(std::uint64_t seed, std::uint64_t counter) {
  const std::uint64_t h = mix64(mix64(seed) ^ counter);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

enum class Family {
  star,
  path,
  cycle,
  complete,
  complete_bipartite,
  circulant_regular,
  gnp_random,
};

Graph make_star(int n);                        // K_{1,n-1}, center 0; n >= 1
Graph make_path(int n);                        // n >= 1
Graph make_cycle(int n);                       // n >= 3
Graph make_complete(int n);                    // n >= 1
Graph make_complete_bipartite(int a, int b);   // a, b >= 1
Graph make_circulant_regular(int n, int k);    // k-regular; k < n, k odd needs even n
Graph make_gnp(int n, double p, std::uint64_t seed);  // 0 <= p <= 1

/// One generator request; `b` is the second part size (complete_bipartite)
/// or the degree (circulant_regular), `p`/`seed` apply to gnp_random.
struct GenSpec {
  Family family = Family::star;
  int n = 0;
  int b = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

Graph generate(const GenSpec& spec);

/// Parses the CLI shorthand, e.g. "star:5", "complete_bipartite:2:3",
/// "circulant_regular:8:4", "gnp:50:0.1:42" (seed optional).
GenSpec parse_gen_spec(std::string_view text, std::uint64_t default_seed = 0);

const char* family_name(Family f);

}  // namespace specdev
