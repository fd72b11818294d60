#pragma once

#include <cstddef>
#include <vector>

#include "mhc/dataset.hpp"
#include "mhc/nna.hpp"
#include "mhc/partition.hpp"

namespace mhc {

/// Integrated distances along the first-neighbour links that formed a level.
struct LinkStats {
  double min = 0.0;
  double mean = 0.0;
  double max = 0.0;
};

struct Level {
  Partition partition;  ///< over the original samples
  LinkStats links;
};

/// Nested partitions from finest to coarsest, ending in a single cluster.
class Hierarchy {
 public:
  /// Throws ValidationError unless the levels cover `num_samples` samples,
  /// strictly decrease in size down to exactly one cluster, and nest.
  Hierarchy(std::size_t num_samples, std::size_t num_views, std::vector<Level> levels,
            std::vector<ClusterRepresentatives> representatives = {});

  std::size_t num_samples() const noexcept { return num_samples_; }
  std::size_t num_views() const noexcept { return num_views_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }
  const Level& level(std::size_t i) const { return levels_.at(i); }
  std::vector<std::size_t> level_sizes() const;

  /// Per-level cluster means, filled by `fit`; empty for hierarchies read back
  /// from a file (recompute with `compute_representatives` when needed).
  const std::vector<ClusterRepresentatives>& representatives() const noexcept {
    return representatives_;
  }

 private:
  std::size_t num_samples_;
  std::size_t num_views_;
  std::vector<Level> levels_;
  std::vector<ClusterRepresentatives> representatives_;
};

/// Repeats cosine distance integration and first-neighbour agglomeration,
/// starting from every sample on its own, until one cluster remains. Level 0
/// is the first agglomeration of the raw samples. There is nothing to tune.
Hierarchy fit(const MultiViewDataset& dataset);

/// Same result as `fit(dataset)`; `backend` only picks how neighbours are found.
Hierarchy fit(const MultiViewDataset& dataset, NnBackend backend);

/// Coarsest level with at least `m` clusters. Throws ValidationError if `m`
/// is zero or exceeds the finest level.
const Partition& closest_level(const Hierarchy& hierarchy, std::size_t m);

/// Merges the two closest clusters (integrated cosine distance between
/// per-view means, ties to the lexicographically smallest pair) until `m`
/// clusters remain.
Partition refine_to_k(const MultiViewDataset& dataset, const Partition& closest, std::size_t m);

/// `closest_level` followed by `refine_to_k`.
Partition cut(const Hierarchy& hierarchy, const MultiViewDataset& dataset, std::size_t m);

}  // namespace mhc
