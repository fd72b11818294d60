#include "mhc/hierarchy.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace mhc {
namespace {

LinkStats link_stats(std::span<const double> distances) {
  LinkStats s;
  if (distances.empty()) return s;
  s.min = *std::min_element(distances.begin(), distances.end());
  s.max = *std::max_element(distances.begin(), distances.end());
  s.mean = std::accumulate(distances.begin(), distances.end(), 0.0) /
           static_cast<double>(distances.size());
  return s;
}

}  // namespace

Hierarchy::Hierarchy(std::size_t num_samples, std::size_t num_views, std::vector<Level> levels,
                     std::vector<ClusterRepresentatives> representatives)
    : num_samples_(num_samples),
      num_views_(num_views),
      levels_(std::move(levels)),
      representatives_(std::move(representatives)) {
  if (levels_.empty()) throw ValidationError("hierarchy has no levels");
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const Partition& p = levels_[i].partition;
    if (p.size() != num_samples_) {
      throw ValidationError("hierarchy level " + std::to_string(i) + " covers " +
                            std::to_string(p.size()) + " samples, expected " +
                            std::to_string(num_samples_));
    }
    if (i > 0) {
      const Partition& finer = levels_[i - 1].partition;
      if (p.num_clusters() >= finer.num_clusters()) {
        throw ValidationError("hierarchy level sizes must strictly decrease");
      }
      if (!finer.is_refinement_of(p)) {
        throw ValidationError("hierarchy level " + std::to_string(i) +
                              " is not a union of level " + std::to_string(i - 1) + " clusters");
      }
    }
  }
  if (levels_.back().partition.num_clusters() != 1) {
    throw ValidationError("hierarchy must end in a single cluster");
  }
  if (!representatives_.empty() && representatives_.size() != levels_.size()) {
    throw ValidationError("hierarchy needs representatives for every level or none");
  }
}

std::vector<std::size_t> Hierarchy::level_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(levels_.size());
  for (const Level& l : levels_) sizes.push_back(l.partition.num_clusters());
  return sizes;
}

Hierarchy fit(const MultiViewDataset& dataset) { return fit(dataset, NnBackend::Tree); }

Hierarchy fit(const MultiViewDataset& dataset, NnBackend backend) {
  std::vector<Level> levels;
  std::vector<ClusterRepresentatives> reps_per_level;
  Partition current = Partition::singletons(dataset.num_samples());
  ClusterRepresentatives reps = singleton_representatives(dataset);

  // Every node has an edge, so each round at least halves the cluster count.
  while (current.num_clusters() > 1) {
    const NearestNeighbors nn = nearest_neighbors(reps, backend);
    const Partition merged = connected_components(build_graph(nn.index));
    current = current.compose(merged);
    reps = compute_representatives(dataset, current);
    levels.push_back(Level{current, link_stats(nn.distance)});
    reps_per_level.push_back(reps);
  }
  return Hierarchy(dataset.num_samples(), dataset.num_views(), std::move(levels),
                   std::move(reps_per_level));
}

const Partition& closest_level(const Hierarchy& hierarchy, std::size_t m) {
  const auto& levels = hierarchy.levels();
  if (m == 0) throw ValidationError("requested cluster count must be at least 1");
  if (m > levels.front().partition.num_clusters()) {
    throw ValidationError("requested " + std::to_string(m) +
                          " clusters but the finest level has only " +
                          std::to_string(levels.front().partition.num_clusters()));
  }
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    if (it->partition.num_clusters() >= m) return it->partition;
  }
  return levels.front().partition;  // unreachable: the finest level has >= m clusters
}

Partition refine_to_k(const MultiViewDataset& dataset, const Partition& closest, std::size_t m) {
  const std::size_t k = closest.num_clusters();
  if (m == 0) throw ValidationError("requested cluster count must be at least 1");
  if (m > k) {
    throw ValidationError("cannot refine " + std::to_string(k) + " clusters up to " +
                          std::to_string(m));
  }
  if (m == k) return closest;

  ClusterRepresentatives reps = compute_representatives(dataset, closest);
  Embedding z = normalized_embedding(reps);
  std::vector<bool> alive(k, true);
  std::vector<Label> merged_into(k);
  std::iota(merged_into.begin(), merged_into.end(), Label{0});

  // Cached nearest alive cluster for each alive cluster. The global minimum
  // over these, ordered by (distance, low id, high id), is the closest pair
  // with ties broken lexicographically.
  std::vector<Neighbor> nn(k);
  const auto recompute = [&](std::size_t c) {
    Neighbor best;
    for (std::size_t b = 0; b < k; ++b) {
      if (b == c || !alive[b]) continue;
      const Neighbor n{embedded_distance(z, c, b), b};
      if (n.better_than(best)) best = n;
    }
    nn[c] = best;
  };
  for (std::size_t c = 0; c < k; ++c) recompute(c);

  for (std::size_t remaining = k; remaining > m; --remaining) {
    std::size_t low = k;
    std::size_t high = k;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < k; ++c) {
      if (!alive[c]) continue;
      const std::size_t a = std::min(c, nn[c].index);
      const std::size_t b = std::max(c, nn[c].index);
      if (nn[c].distance < best || (nn[c].distance == best && std::pair(a, b) < std::pair(low, high))) {
        best = nn[c].distance;
        low = a;
        high = b;
      }
    }

    // Merge `high` into `low`; the merged mean is size-weighted, i.e. the mean
    // of all original samples in both clusters.
    const double w_low = static_cast<double>(reps.sizes[low]);
    const double w_high = static_cast<double>(reps.sizes[high]);
    for (Matrix& view : reps.views) {
      const auto lo = static_cast<Eigen::Index>(low);
      view.row(lo) = (w_low * view.row(lo) + w_high * view.row(static_cast<Eigen::Index>(high))) /
                     (w_low + w_high);
    }
    reps.sizes[low] += reps.sizes[high];
    reps.sizes[high] = 0;
    alive[high] = false;
    embed_cluster(reps, low, z);
    for (std::size_t c = 0; c < k; ++c) {
      if (merged_into[c] == high) merged_into[c] = low;
    }

    for (std::size_t c = 0; c < k; ++c) {
      if (!alive[c] || c == low) continue;
      if (nn[c].index == low || nn[c].index == high) {
        recompute(c);
      } else {
        const Neighbor n{embedded_distance(z, c, low), low};
        if (n.better_than(nn[c])) nn[c] = n;
      }
    }
    recompute(low);
  }

  LabelVector ids(closest.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = merged_into[closest[i]];
  return Partition::canonical(ids);
}

Partition cut(const Hierarchy& hierarchy, const MultiViewDataset& dataset, std::size_t m) {
  if (hierarchy.num_samples() != dataset.num_samples()) {
    throw ValidationError("hierarchy covers " + std::to_string(hierarchy.num_samples()) +
                          " samples, dataset has " + std::to_string(dataset.num_samples()));
  }
  return refine_to_k(dataset, closest_level(hierarchy, m), m);
}

}  // namespace mhc
