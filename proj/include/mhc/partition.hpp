#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mhc/types.hpp"

namespace mhc {

/// Assignment of items to cluster ids 0..num_clusters-1, every cluster nonempty.
///
/// Partitions built through `canonical` number clusters by first occurrence,
/// so two partitions describing the same grouping compare equal.
class Partition {
 public:
  Partition() = default;

  /// Takes ids as given; throws ValidationError unless they are exactly 0..k-1.
  explicit Partition(LabelVector assignment);

  /// Relabels arbitrary ids in order of first occurrence.
  static Partition canonical(std::span<const Label> ids);

  /// Every item in its own cluster.
  static Partition singletons(std::size_t n);

  const LabelVector& assignment() const noexcept { return assignment_; }
  std::size_t size() const noexcept { return assignment_.size(); }
  std::size_t num_clusters() const noexcept { return num_clusters_; }
  Label operator[](std::size_t i) const { return assignment_[i]; }

  /// Cluster sizes indexed by cluster id.
  std::vector<std::size_t> cluster_sizes() const;

  /// Maps each item of this partition through `coarse`, where `coarse` is a
  /// partition over this partition's clusters.
  Partition compose(const Partition& coarse) const;

  /// True when every cluster of `coarser` is a union of clusters of this one.
  bool is_refinement_of(const Partition& coarser) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  LabelVector assignment_;
  std::size_t num_clusters_ = 0;
};

}  // namespace mhc
