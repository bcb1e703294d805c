#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "graphshift/types.hpp"

namespace graphshift {

class PartitionLedger;

enum class ChangeKind : std::uint8_t { AddVertex, RemoveVertex, AddEdge, RemoveEdge };

struct ChangeEvent {
  ChangeKind kind;
  VertexId u = 0;
  VertexId v = 0;        // second endpoint, edge events only
  std::uint64_t seq = 0; // arrival order, assigned by the buffer
};

// Ordered queue of topology mutations. Events are only applied at an
// iteration barrier (apply_changes), in arrival order.
class ChangeBuffer {
 public:
  void push(ChangeKind kind, VertexId u, VertexId v = 0);
  void push(ChangeEvent ev);
  bool empty() const { return events_.empty(); }
  std::size_t size() const { return events_.size(); }
  std::vector<ChangeEvent> drain();

 private:
  std::vector<ChangeEvent> events_;
  std::uint64_t next_seq_ = 0;
};

// Undirected simple graph with one partition assignment per vertex.
// Mutations are barrier-only; concurrent reads during a superstep are safe.
class DynamicGraph {
 public:
  using AdjacencyMap = std::unordered_map<VertexId, std::unordered_set<VertexId>>;

  DynamicGraph() = default;
  explicit DynamicGraph(std::uint32_t partitions);

  std::uint32_t partitions() const { return partitions_; }
  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }

  // Mutators return false on no-ops (already present / absent target).
  bool add_vertex(VertexId v, PartitionId p);
  bool remove_vertex(VertexId v);
  bool add_edge(VertexId u, VertexId v);
  bool remove_edge(VertexId u, VertexId v);

  bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }
  bool has_edge(VertexId u, VertexId v) const;
  // Ids of deleted vertices are retired for the rest of the run.
  bool id_retired(VertexId v) const { return retired_.count(v) != 0; }

  PartitionId assignment(VertexId v) const;
  void set_assignment(VertexId v, PartitionId p);

  const std::unordered_set<VertexId>& neighbours(VertexId v) const;
  std::size_t degree(VertexId v) const;

  const AdjacencyMap& adjacency() const { return adj_; }
  const std::unordered_map<VertexId, PartitionId>& assignments() const {
    return assignment_;
  }
  std::vector<VertexId> sorted_vertices() const;

  // Checks symmetry, assignment coverage and the edge count; throws
  // std::logic_error on a broken invariant.
  void validate() const;

 private:
  std::uint32_t partitions_ = 1;
  AdjacencyMap adj_;
  std::unordered_map<VertexId, PartitionId> assignment_;
  std::unordered_set<VertexId> retired_;
  std::size_t edges_ = 0;
};

// New-vertex placement strategy; default is hash modulo.
using PlacementFn = std::function<PartitionId(VertexId)>;
PlacementFn hash_placement(std::uint32_t k);

struct FlushResult {
  std::vector<VertexId> affected;  // sorted, unique
  std::vector<VertexId> added_vertices;
  std::vector<std::pair<VertexId, PartitionId>> removed_vertices;
  std::uint64_t events = 0;  // total drained from the buffer
  std::uint64_t edges_added = 0;
  std::uint64_t edges_removed = 0;
  std::uint64_t implicit_vertices = 0;   // edge endpoints created on demand
  std::uint64_t skipped_removals = 0;    // removals of absent elements
  std::uint64_t rejected_self_loops = 0;
  std::uint64_t rejected_reused_ids = 0;
};

// Applies all buffered events in arrival order. Removals of absent elements
// are counted and skipped; duplicate additions are idempotent. When a ledger
// is given its partition sizes are kept in step.
FlushResult apply_changes(DynamicGraph& graph, ChangeBuffer& buffer,
                          const PlacementFn& placer,
                          PartitionLedger* ledger = nullptr);

// |{ {u,v} in E : assignment(u) != assignment(v) }|, each undirected edge
// counted once.
std::uint64_t count_cut_edges(const DynamicGraph& graph);
double cut_ratio(const DynamicGraph& graph);

// Counts of v's neighbours per partition; partitions with zero neighbours
// are absent. Throws std::invalid_argument for an unknown vertex.
std::unordered_map<PartitionId, std::uint32_t> neighbour_partition_histogram(
    const DynamicGraph& graph, VertexId v);

}  // namespace graphshift
