#pragma once

#include <cstdint>
#include <vector>

#include "graphshift/types.hpp"

namespace graphshift {

// Per-partition capacity bookkeeping: capacities C^i, current sizes |P^i(t)|,
// and in-flight (announced, not yet committed) migration counters. Quotas are
// derived from the predicted remaining capacity so that uncoordinated
// decisions can never overflow a partition across the announce->commit lag.
class PartitionLedger {
 public:
  PartitionLedger() = default;
  explicit PartitionLedger(std::vector<std::uint64_t> capacities);

  // capacity = ceil(alpha * vertices / partitions) for every partition.
  static PartitionLedger uniform(std::uint32_t partitions, std::uint64_t vertices,
                                 double alpha);

  std::uint32_t partitions() const { return static_cast<std::uint32_t>(capacity_.size()); }
  std::uint64_t capacity(PartitionId i) const { return capacity_.at(i); }
  std::uint64_t size(PartitionId i) const { return size_.at(i); }
  const std::vector<std::uint64_t>& sizes() const { return size_; }
  const std::vector<std::uint64_t>& capacities() const { return capacity_; }
  std::uint64_t total_size() const;

  // C^i - |P^i|; may be transiently negative while additions outpace a rescale.
  std::int64_t remaining(PartitionId i) const;
  // remaining adjusted by announced in/out flight;
  // equals the CapacityBulletin prediction.
  std::int64_t predicted_remaining(PartitionId i) const;
  // floor(predicted_remaining(dst) / (k - 1)), clamped at zero; 0 when k == 1.
  std::uint64_t quota(PartitionId dst) const;

  std::uint64_t announced_in(PartitionId i) const { return announced_in_.at(i); }
  std::uint64_t announced_out(PartitionId i) const { return announced_out_.at(i); }

  void add_vertex(PartitionId i) { ++size_.at(i); }
  void remove_vertex(PartitionId i);

  void announce(PartitionId src, PartitionId dst);
  void commit(PartitionId src, PartitionId dst);
  // Deletion race: the announced entry is dropped without a size transfer.
  void drop_announced(PartitionId src, PartitionId dst);

  void rescale_uniform(std::uint64_t vertices, double alpha);

 private:
  std::vector<std::uint64_t> capacity_;
  std::vector<std::uint64_t> size_;
  std::vector<std::uint64_t> announced_in_;
  std::vector<std::uint64_t> announced_out_;
};

}  // namespace graphshift
