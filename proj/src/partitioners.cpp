#include "graphshift/partitioners.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace graphshift {

std::optional<PartitionerKind> parse_partitioner(std::string_view name) {
  if (name == "hsh") return PartitionerKind::Hash;
  if (name == "rnd") return PartitionerKind::Random;
  if (name == "dgr") return PartitionerKind::Greedy;
  if (name == "mnn") return PartitionerKind::MinNeighbours;
  return std::nullopt;
}

std::string_view to_string(PartitionerKind kind) {
  switch (kind) {
    case PartitionerKind::Hash: return "hsh";
    case PartitionerKind::Random: return "rnd";
    case PartitionerKind::Greedy: return "dgr";
    case PartitionerKind::MinNeighbours: return "mnn";
  }
  return "?";
}

PartitionId hash_partition(VertexId v, std::uint32_t k, HashFn hash) {
  if (k == 0) throw std::invalid_argument("partition count must be >= 1");
  return static_cast<PartitionId>(hash(v) % k);
}

Assignment random_partition(const std::vector<VertexId>& stream, std::uint32_t k,
                            std::uint64_t seed) {
  if (k == 0) throw std::invalid_argument("partition count must be >= 1");
  std::vector<VertexId> shuffled = stream;
  std::mt19937_64 rng(seed);
  seeded_shuffle(shuffled, rng);
  Assignment out;
  out.reserve(shuffled.size());
  for (std::size_t i = 0; i < shuffled.size(); ++i)
    out.emplace(shuffled[i], static_cast<PartitionId>(i % k));
  return out;
}

namespace {

// Count of v's already-placed neighbours per partition.
std::vector<std::uint32_t> seen_counts(const AdjacencyMap& adj,
                                       const Assignment& placed, VertexId v,
                                       std::uint32_t k) {
  std::vector<std::uint32_t> counts(k, 0);
  auto it = adj.find(v);
  if (it != adj.end()) {
    for (VertexId u : it->second) {
      auto p = placed.find(u);
      if (p != placed.end()) ++counts[p->second];
    }
  }
  return counts;
}

template <typename Better>
Assignment stream_assign(const AdjacencyMap& adj, const std::vector<VertexId>& stream,
                         std::uint32_t k, std::uint64_t capacity, Better better) {
  if (k == 0) throw std::invalid_argument("partition count must be >= 1");
  Assignment out;
  out.reserve(stream.size());
  std::vector<std::uint64_t> sizes(k, 0);
  for (VertexId v : stream) {
    if (out.count(v) != 0) continue;
    auto counts = seen_counts(adj, out, v, k);
    std::optional<PartitionId> best;
    for (PartitionId p = 0; p < k; ++p) {
      if (sizes[p] >= capacity) continue;
      if (!best || better(counts, sizes, p, *best)) best = p;
    }
    if (!best) throw std::runtime_error("all partitions full: capacity misconfigured");
    out.emplace(v, *best);
    ++sizes[*best];
  }
  return out;
}

}  // namespace

Assignment greedy_partition(const AdjacencyMap& adj,
                            const std::vector<VertexId>& stream, std::uint32_t k,
                            std::uint64_t capacity) {
  auto score = [capacity](const std::vector<std::uint32_t>& counts,
                          const std::vector<std::uint64_t>& sizes, PartitionId p) {
    return static_cast<double>(counts[p]) *
           (1.0 - static_cast<double>(sizes[p]) / static_cast<double>(capacity));
  };
  return stream_assign(
      adj, stream, k, capacity,
      [&score](const std::vector<std::uint32_t>& counts,
               const std::vector<std::uint64_t>& sizes, PartitionId cand,
               PartitionId best) {
        double sc = score(counts, sizes, cand);
        double sb = score(counts, sizes, best);
        if (sc != sb) return sc > sb;
        return sizes[cand] < sizes[best];  // then lowest index: scan order
      });
}

Assignment min_neighbours_partition(const AdjacencyMap& adj,
                                    const std::vector<VertexId>& stream,
                                    std::uint32_t k, std::uint64_t capacity) {
  return stream_assign(adj, stream, k, capacity,
                       [](const std::vector<std::uint32_t>& counts,
                          const std::vector<std::uint64_t>& sizes, PartitionId cand,
                          PartitionId best) {
                         if (counts[cand] != counts[best])
                           return counts[cand] < counts[best];
                         return sizes[cand] < sizes[best];
                       });
}

Assignment assign_vertices(PartitionerKind kind, const AdjacencyMap& adj,
                           const std::vector<VertexId>& stream, std::uint32_t k,
                           std::uint64_t capacity, std::uint64_t seed) {
  switch (kind) {
    case PartitionerKind::Hash: {
      Assignment out;
      out.reserve(stream.size());
      for (VertexId v : stream) out.emplace(v, hash_partition(v, k));
      return out;
    }
    case PartitionerKind::Random: return random_partition(stream, k, seed);
    case PartitionerKind::Greedy: return greedy_partition(adj, stream, k, capacity);
    case PartitionerKind::MinNeighbours:
      return min_neighbours_partition(adj, stream, k, capacity);
  }
  throw std::logic_error("unknown partitioner kind");
}

DynamicGraph build_graph(const AdjacencyMap& adj, const Assignment& assignment,
                         std::uint32_t k) {
  DynamicGraph g(k);
  for (const auto& [v, _] : adj) g.add_vertex(v, assignment.at(v));
  for (const auto& [u, nbrs] : adj) {
    for (VertexId v : nbrs) {
      if (u < v) g.add_edge(u, v);
    }
  }
  return g;
}

AdjacencyMap build_adjacency(const std::vector<Edge>& edges) {
  AdjacencyMap adj;
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    adj[u].insert(v);
    adj[v].insert(u);
  }
  return adj;
}

std::vector<VertexId> sorted_vertex_stream(const AdjacencyMap& adj) {
  std::vector<VertexId> out;
  out.reserve(adj.size());
  for (const auto& [v, _] : adj) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace graphshift
