#include "graphshift/heuristic.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphshift {

void validate(const HeuristicConfig& cfg) {
  if (cfg.s < 0.0 || cfg.s > 1.0)
    throw std::invalid_argument("migration probability s must be in [0, 1]");
  if (cfg.alpha < 1.0)
    throw std::invalid_argument("capacity headroom alpha must be >= 1");
  if (cfg.window == 0)
    throw std::invalid_argument("convergence window must be >= 1");
}

std::unordered_set<PartitionId> candidate_partitions(const DynamicGraph& graph,
                                                     VertexId v) {
  std::unordered_set<PartitionId> cand;
  cand.insert(graph.assignment(v));
  for (VertexId u : graph.neighbours(v)) cand.insert(graph.assignment(u));
  return cand;
}

std::optional<MigrationDecision> decide(const DynamicGraph& graph, VertexId v,
                                        std::uint64_t iteration,
                                        const HeuristicConfig& cfg) {
  if (cfg.s <= 0.0) return std::nullopt;
  if (cfg.s < 1.0 && gate_uniform(cfg.seed, v, iteration) >= cfg.s)
    return std::nullopt;

  std::vector<std::uint32_t> counts(graph.partitions(), 0);
  for (VertexId u : graph.neighbours(v)) ++counts[graph.assignment(u)];

  PartitionId src = graph.assignment(v);
  PartitionId best = src;
  std::uint32_t best_count = counts[src];
  for (PartitionId p = 0; p < graph.partitions(); ++p) {
    if (counts[p] > best_count) {  // strict: staying wins ties
      best = p;
      best_count = counts[p];
    }
  }
  if (best == src) return std::nullopt;
  return MigrationDecision{v, src, best,
                           static_cast<std::int64_t>(best_count) - counts[src]};
}

QuotaResult enforce_quotas(std::vector<MigrationDecision> decisions,
                           const PartitionLedger& ledger) {
  std::sort(decisions.begin(), decisions.end(),
            [](const MigrationDecision& a, const MigrationDecision& b) {
              if (a.source != b.source) return a.source < b.source;
              if (a.destination != b.destination) return a.destination < b.destination;
              if (a.gain != b.gain) return a.gain > b.gain;
              return a.vertex < b.vertex;
            });

  QuotaResult result;
  std::size_t i = 0;
  while (i < decisions.size()) {
    std::size_t j = i;
    while (j < decisions.size() &&
           decisions[j].source == decisions[i].source &&
           decisions[j].destination == decisions[i].destination)
      ++j;
    std::uint64_t quota = ledger.quota(decisions[i].destination);
    for (std::size_t n = i; n < j; ++n) {
      if (n - i < quota)
        result.admitted.push_back(decisions[n]);
      else
        result.deferred.push_back(decisions[n]);
    }
    i = j;
  }
  return result;
}

ConvergenceWindow::ConvergenceWindow(std::uint32_t window) : window_(window) {
  if (window == 0) throw std::invalid_argument("convergence window must be >= 1");
}

bool ConvergenceWindow::update(std::uint64_t migrations) {
  if (migrations == 0)
    ++zero_run_;
  else
    zero_run_ = 0;
  return converged();
}

}  // namespace graphshift
