#include "graphshift/partition_ledger.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace graphshift {

PartitionLedger::PartitionLedger(std::vector<std::uint64_t> capacities)
    : capacity_(std::move(capacities)),
      size_(capacity_.size(), 0),
      announced_in_(capacity_.size(), 0),
      announced_out_(capacity_.size(), 0) {
  if (capacity_.empty()) throw std::invalid_argument("ledger needs >= 1 partition");
}

PartitionLedger PartitionLedger::uniform(std::uint32_t partitions,
                                         std::uint64_t vertices, double alpha) {
  if (partitions == 0) throw std::invalid_argument("ledger needs >= 1 partition");
  if (alpha < 1.0) throw std::invalid_argument("capacity headroom alpha must be >= 1");
  auto cap = static_cast<std::uint64_t>(
      std::ceil(alpha * static_cast<double>(vertices) / partitions));
  return PartitionLedger(std::vector<std::uint64_t>(partitions, cap));
}

std::uint64_t PartitionLedger::total_size() const {
  return std::accumulate(size_.begin(), size_.end(), std::uint64_t{0});
}

std::int64_t PartitionLedger::remaining(PartitionId i) const {
  return static_cast<std::int64_t>(capacity_.at(i)) -
         static_cast<std::int64_t>(size_.at(i));
}

std::int64_t PartitionLedger::predicted_remaining(PartitionId i) const {
  return remaining(i) - static_cast<std::int64_t>(announced_in_.at(i)) +
         static_cast<std::int64_t>(announced_out_.at(i));
}

std::uint64_t PartitionLedger::quota(PartitionId dst) const {
  std::uint32_t k = partitions();
  if (k < 2) return 0;
  std::int64_t pr = predicted_remaining(dst);
  if (pr <= 0) return 0;
  return static_cast<std::uint64_t>(pr) / (k - 1);
}

void PartitionLedger::remove_vertex(PartitionId i) {
  if (size_.at(i) == 0) throw std::logic_error("removing vertex from empty partition");
  --size_[i];
}

void PartitionLedger::announce(PartitionId src, PartitionId dst) {
  ++announced_out_.at(src);
  ++announced_in_.at(dst);
}

void PartitionLedger::commit(PartitionId src, PartitionId dst) {
  drop_announced(src, dst);
  remove_vertex(src);
  add_vertex(dst);
}

void PartitionLedger::drop_announced(PartitionId src, PartitionId dst) {
  if (announced_out_.at(src) == 0 || announced_in_.at(dst) == 0)
    throw std::logic_error("no announced migration to settle for this pair");
  --announced_out_[src];
  --announced_in_[dst];
}

void PartitionLedger::rescale_uniform(std::uint64_t vertices, double alpha) {
  auto cap = static_cast<std::uint64_t>(
      std::ceil(alpha * static_cast<double>(vertices) / capacity_.size()));
  for (auto& c : capacity_) c = cap;
}

}  // namespace graphshift
