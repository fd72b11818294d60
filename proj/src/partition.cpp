#include "mhc/partition.hpp"

#include <limits>
#include <string>
#include <unordered_map>

namespace mhc {

Partition::Partition(LabelVector assignment) : assignment_(std::move(assignment)) {
  std::vector<bool> seen;
  for (Label id : assignment_) {
    if (id >= assignment_.size()) {
      throw ValidationError("partition: cluster id " + std::to_string(id) +
                            " exceeds item count");
    }
    if (id >= seen.size()) seen.resize(id + 1, false);
    seen[id] = true;
  }
  for (std::size_t id = 0; id < seen.size(); ++id) {
    if (!seen[id]) {
      throw ValidationError("partition: cluster id " + std::to_string(id) + " is empty");
    }
  }
  num_clusters_ = seen.size();
}

Partition Partition::canonical(std::span<const Label> ids) {
  std::unordered_map<Label, Label> remap;
  LabelVector out;
  out.reserve(ids.size());
  for (Label id : ids) {
    auto [it, inserted] = remap.try_emplace(id, remap.size());
    out.push_back(it->second);
  }
  Partition p;
  p.num_clusters_ = remap.size();
  p.assignment_ = std::move(out);
  return p;
}

Partition Partition::singletons(std::size_t n) {
  Partition p;
  p.assignment_.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.assignment_[i] = i;
  p.num_clusters_ = n;
  return p;
}

std::vector<std::size_t> Partition::cluster_sizes() const {
  std::vector<std::size_t> sizes(num_clusters_, 0);
  for (Label id : assignment_) ++sizes[id];
  return sizes;
}

Partition Partition::compose(const Partition& coarse) const {
  if (coarse.size() != num_clusters_) {
    throw ValidationError("partition: coarse partition covers " +
                          std::to_string(coarse.size()) + " clusters, expected " +
                          std::to_string(num_clusters_));
  }
  LabelVector mapped(assignment_.size());
  for (std::size_t i = 0; i < assignment_.size(); ++i) mapped[i] = coarse[assignment_[i]];
  return canonical(mapped);
}

bool Partition::is_refinement_of(const Partition& coarser) const {
  if (coarser.size() != size()) return false;
  constexpr Label kUnset = std::numeric_limits<Label>::max();
  std::vector<Label> parent(num_clusters_, kUnset);
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    Label& p = parent[assignment_[i]];
    if (p == kUnset) {
      p = coarser[i];
    } else if (p != coarser[i]) {
      return false;
    }
  }
  return true;
}

}  // namespace mhc
