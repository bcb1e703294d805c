#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "graphshift/dynamic_graph.hpp"
#include "graphshift/partition_ledger.hpp"
#include "graphshift/types.hpp"

namespace graphshift {

struct HeuristicConfig {
  double s = 0.5;            // per-vertex migration gate; 0 disables migrations
  double alpha = 1.2;        // capacity headroom: C^i = ceil(alpha*|V|/k)
  std::uint32_t window = 30; // consecutive zero-migration iterations to converge
  std::uint64_t seed = 0;
};

void validate(const HeuristicConfig& cfg);  // throws std::invalid_argument

struct MigrationDecision {
  VertexId vertex;
  PartitionId source;
  PartitionId destination;
  std::int64_t gain;  // neighbour-count difference, >= 1 for any migration
};

// Partitions holding at least one member of {v} ∪ neighbours(v); always
// contains v's own partition.
std::unordered_set<PartitionId> candidate_partitions(const DynamicGraph& graph,
                                                     VertexId v);

// Gated greedy decision against the iteration-start snapshot. Returns nullopt
// (stay) when the gate blocks, when v's partition attains the maximum
// neighbour count (ties favour staying), or when v is isolated. Among
// non-current ties the lowest partition id wins.
std::optional<MigrationDecision> decide(const DynamicGraph& graph, VertexId v,
                                        std::uint64_t iteration,
                                        const HeuristicConfig& cfg);

struct QuotaResult {
  std::vector<MigrationDecision> admitted;
  std::vector<MigrationDecision> deferred;
};

// Admits at most quota(dst) decisions per ordered (source, destination) pair,
// by descending gain then ascending vertex id. Deferred decisions are simply
// re-derived next iteration.
QuotaResult enforce_quotas(std::vector<MigrationDecision> decisions,
                           const PartitionLedger& ledger);

// True once the last `window` iterations all committed zero migrations.
class ConvergenceWindow {
 public:
  explicit ConvergenceWindow(std::uint32_t window);
  bool update(std::uint64_t migrations);
  bool converged() const { return zero_run_ >= window_; }
  std::uint64_t zero_run() const { return zero_run_; }

 private:
  std::uint32_t window_;
  std::uint64_t zero_run_ = 0;
};

}  // namespace graphshift
