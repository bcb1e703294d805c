#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace graphshift {

using VertexId = std::uint64_t;
using PartitionId = std::uint32_t;

using Edge = std::pair<VertexId, VertexId>;

inline constexpr PartitionId kNoPartition = ~PartitionId{0};

// SplitMix64 finalizer. This is the published vertex hash: placement of a
// vertex is splitmix64(id) mod k, reproducible across platforms.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based uniform draw in [0, 1) keyed on (seed, vertex, iteration).
// Stateless, so migration gating is independent of scheduling order and
// worker count.
inline double gate_uniform(std::uint64_t seed, VertexId v,
                           std::uint64_t iteration) noexcept {
  std::uint64_t h = splitmix64(seed ^ (v * 0xd1342543de82ef95ULL));
  h = splitmix64(h ^ (iteration * 0x2545f4914f6cdd1dULL));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Fisher-Yates with an explicit swap order; std::shuffle is not pinned by the
// standard, this is.
template <typename T, typename Rng>
void seeded_shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace graphshift
