#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "graphshift/dynamic_graph.hpp"
#include "graphshift/types.hpp"

namespace graphshift {

// Initial partitioning strategies. HSH is stateless; DGR and MNN consume the
// vertex stream in order and only see the adjacency of already-placed
// vertices.
enum class PartitionerKind { Hash, Random, Greedy, MinNeighbours };

std::optional<PartitionerKind> parse_partitioner(std::string_view name);
std::string_view to_string(PartitionerKind kind);

using Assignment = std::unordered_map<VertexId, PartitionId>;
using AdjacencyMap = DynamicGraph::AdjacencyMap;
using HashFn = std::uint64_t (*)(std::uint64_t);

// hash(v) mod k.
PartitionId hash_partition(VertexId v, std::uint32_t k, HashFn hash = &splitmix64);

// Round-robin over a seeded shuffle; partition sizes differ by at most one.
Assignment random_partition(const std::vector<VertexId>& stream, std::uint32_t k,
                            std::uint64_t seed);

// Linear deterministic greedy: argmax_i |P^i ∩ N(v)| * (1 - |P^i|/C) over
// partitions below capacity; ties go to the least-loaded partition, then the
// lowest index. Throws when every partition is full.
Assignment greedy_partition(const AdjacencyMap& adj,
                            const std::vector<VertexId>& stream, std::uint32_t k,
                            std::uint64_t capacity);

// Fewest already-seen neighbours among partitions with free capacity; same
// tie-breaking and capacity contract as greedy_partition.
Assignment min_neighbours_partition(const AdjacencyMap& adj,
                                    const std::vector<VertexId>& stream,
                                    std::uint32_t k, std::uint64_t capacity);

Assignment assign_vertices(PartitionerKind kind, const AdjacencyMap& adj,
                           const std::vector<VertexId>& stream, std::uint32_t k,
                           std::uint64_t capacity, std::uint64_t seed);

// Builds the graph from a full adjacency map plus a complete assignment.
DynamicGraph build_graph(const AdjacencyMap& adj, const Assignment& assignment,
                         std::uint32_t k);

AdjacencyMap build_adjacency(const std::vector<Edge>& edges);
std::vector<VertexId> sorted_vertex_stream(const AdjacencyMap& adj);

}  // namespace graphshift
