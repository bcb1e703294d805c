#include "graphshift/dynamic_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "graphshift/partition_ledger.hpp"

namespace graphshift {

void ChangeBuffer::push(ChangeKind kind, VertexId u, VertexId v) {
  events_.push_back(ChangeEvent{kind, u, v, next_seq_++});
}

void ChangeBuffer::push(ChangeEvent ev) {
  ev.seq = next_seq_++;
  events_.push_back(ev);
}

std::vector<ChangeEvent> ChangeBuffer::drain() {
  std::vector<ChangeEvent> out;
  out.swap(events_);
  return out;
}

DynamicGraph::DynamicGraph(std::uint32_t partitions) : partitions_(partitions) {
  if (partitions == 0) throw std::invalid_argument("partition count must be >= 1");
}

bool DynamicGraph::add_vertex(VertexId v, PartitionId p) {
  if (p >= partitions_) throw std::invalid_argument("partition id out of range");
  if (retired_.count(v) != 0) return false;
  auto [it, inserted] = adj_.try_emplace(v);
  if (!inserted) return false;
  assignment_.emplace(v, p);
  return true;
}

bool DynamicGraph::remove_vertex(VertexId v) {
  auto it = adj_.find(v);
  if (it == adj_.end()) return false;
  for (VertexId u : it->second) {
    adj_.at(u).erase(v);
    --edges_;
  }
  adj_.erase(it);
  assignment_.erase(v);
  retired_.insert(v);
  return true;
}

bool DynamicGraph::add_edge(VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  auto iu = adj_.find(u);
  auto iv = adj_.find(v);
  if (iu == adj_.end() || iv == adj_.end())
    throw std::invalid_argument("add_edge endpoint does not exist");
  if (!iu->second.insert(v).second) return false;
  iv->second.insert(u);
  ++edges_;
  return true;
}

bool DynamicGraph::remove_edge(VertexId u, VertexId v) {
  auto iu = adj_.find(u);
  auto iv = adj_.find(v);
  if (iu == adj_.end() || iv == adj_.end()) return false;
  if (iu->second.erase(v) == 0) return false;
  iv->second.erase(u);
  --edges_;
  return true;
}

bool DynamicGraph::has_edge(VertexId u, VertexId v) const {
  auto it = adj_.find(u);
  return it != adj_.end() && it->second.count(v) != 0;
}

PartitionId DynamicGraph::assignment(VertexId v) const {
  auto it = assignment_.find(v);
  if (it == assignment_.end())
    throw std::invalid_argument("assignment of unknown vertex " + std::to_string(v));
  return it->second;
}

void DynamicGraph::set_assignment(VertexId v, PartitionId p) {
  if (p >= partitions_) throw std::invalid_argument("partition id out of range");
  auto it = assignment_.find(v);
  if (it == assignment_.end())
    throw std::invalid_argument("set_assignment of unknown vertex " + std::to_string(v));
  it->second = p;
}

const std::unordered_set<VertexId>& DynamicGraph::neighbours(VertexId v) const {
  auto it = adj_.find(v);
  if (it == adj_.end())
    throw std::invalid_argument("neighbours of unknown vertex " + std::to_string(v));
  return it->second;
}

std::size_t DynamicGraph::degree(VertexId v) const { return neighbours(v).size(); }

std::vector<VertexId> DynamicGraph::sorted_vertices() const {
  std::vector<VertexId> out;
  out.reserve(adj_.size());
  for (const auto& [v, _] : adj_) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

void DynamicGraph::validate() const {
  std::size_t degree_sum = 0;
  for (const auto& [v, nbrs] : adj_) {
    if (assignment_.count(v) == 0)
      throw std::logic_error("vertex without assignment");
    if (assignment_.at(v) >= partitions_)
      throw std::logic_error("assignment out of range");
    if (retired_.count(v) != 0)
      throw std::logic_error("retired id is live");
    degree_sum += nbrs.size();
    for (VertexId u : nbrs) {
      if (u == v) throw std::logic_error("self-loop present");
      auto it = adj_.find(u);
      if (it == adj_.end() || it->second.count(v) == 0)
        throw std::logic_error("asymmetric adjacency");
    }
  }
  if (assignment_.size() != adj_.size())
    throw std::logic_error("assignment map size mismatch");
  if (degree_sum != 2 * edges_) throw std::logic_error("edge count mismatch");
}

PlacementFn hash_placement(std::uint32_t k) {
  return [k](VertexId v) { return static_cast<PartitionId>(splitmix64(v) % k); };
}

namespace {

void track(std::vector<VertexId>& affected, VertexId v) { affected.push_back(v); }

// Creates a missing edge endpoint through the placer. Returns false when the
// id is retired (ids are never reused within a run).
bool ensure_vertex(DynamicGraph& g, VertexId v, const PlacementFn& placer,
                   PartitionLedger* ledger, FlushResult& res) {
  if (g.has_vertex(v)) return true;
  if (g.id_retired(v)) return false;
  PartitionId p = placer(v);
  g.add_vertex(v, p);
  if (ledger) ledger->add_vertex(p);
  ++res.implicit_vertices;
  res.added_vertices.push_back(v);
  track(res.affected, v);
  return true;
}

}  // namespace

FlushResult apply_changes(DynamicGraph& graph, ChangeBuffer& buffer,
                          const PlacementFn& placer, PartitionLedger* ledger) {
  FlushResult res;
  for (const ChangeEvent& ev : buffer.drain()) {
    ++res.events;
    switch (ev.kind) {
      case ChangeKind::AddVertex: {
        if (graph.has_vertex(ev.u)) break;  // idempotent
        if (graph.id_retired(ev.u)) {
          ++res.rejected_reused_ids;
          break;
        }
        PartitionId p = placer(ev.u);
        graph.add_vertex(ev.u, p);
        if (ledger) ledger->add_vertex(p);
        res.added_vertices.push_back(ev.u);
        track(res.affected, ev.u);
        break;
      }
      case ChangeKind::RemoveVertex: {
        if (!graph.has_vertex(ev.u)) {
          ++res.skipped_removals;
          break;
        }
        PartitionId p = graph.assignment(ev.u);
        res.edges_removed += graph.degree(ev.u);
        for (VertexId nbr : graph.neighbours(ev.u)) track(res.affected, nbr);
        graph.remove_vertex(ev.u);
        if (ledger) ledger->remove_vertex(p);
        res.removed_vertices.emplace_back(ev.u, p);
        track(res.affected, ev.u);
        break;
      }
      case ChangeKind::AddEdge: {
        if (ev.u == ev.v) {
          ++res.rejected_self_loops;
          break;
        }
        if (!ensure_vertex(graph, ev.u, placer, ledger, res) ||
            !ensure_vertex(graph, ev.v, placer, ledger, res)) {
          ++res.rejected_reused_ids;
          break;
        }
        if (graph.add_edge(ev.u, ev.v)) {
          ++res.edges_added;
          track(res.affected, ev.u);
          track(res.affected, ev.v);
        }
        break;
      }
      case ChangeKind::RemoveEdge: {
        if (graph.remove_edge(ev.u, ev.v)) {
          ++res.edges_removed;
          track(res.affected, ev.u);
          track(res.affected, ev.v);
        } else {
          ++res.skipped_removals;
        }
        break;
      }
    }
  }
  std::sort(res.affected.begin(), res.affected.end());
  res.affected.erase(std::unique(res.affected.begin(), res.affected.end()),
                     res.affected.end());
  return res;
}

std::uint64_t count_cut_edges(const DynamicGraph& graph) {
  std::uint64_t cut = 0;
  for (const auto& [u, nbrs] : graph.adjacency()) {
    PartitionId pu = graph.assignment(u);
    for (VertexId v : nbrs) {
      if (u < v && pu != graph.assignment(v)) ++cut;
    }
  }
  return cut;
}

double cut_ratio(const DynamicGraph& graph) {
  if (graph.edge_count() == 0) return 0.0;
  return static_cast<double>(count_cut_edges(graph)) /
         static_cast<double>(graph.edge_count());
}

std::unordered_map<PartitionId, std::uint32_t> neighbour_partition_histogram(
    const DynamicGraph& graph, VertexId v) {
  std::unordered_map<PartitionId, std::uint32_t> counts;
  for (VertexId u : graph.neighbours(v)) ++counts[graph.assignment(u)];
  return counts;
}

}  // namespace graphshift
