#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "mhc/cdi.hpp"
#include "mhc/dataset.hpp"
#include "mhc/kd_tree.hpp"
#include "mhc/partition.hpp"

namespace mhc {

/// Per-view mean vectors of the current clusters.
///
/// Means are raw (not normalized) and always taken over the original
/// samples, so they stay correctly weighted however many rounds of merging
/// produced the clusters.
struct ClusterRepresentatives {
  std::vector<Matrix> views;        ///< one row per cluster in every view
  std::vector<std::size_t> sizes;   ///< original samples per cluster

  std::size_t count() const noexcept { return sizes.size(); }
};

/// Every sample as its own cluster.
ClusterRepresentatives singleton_representatives(const MultiViewDataset& dataset);

/// Per-view means of the original samples of each cluster in `partition`.
ClusterRepresentatives compute_representatives(const MultiViewDataset& dataset,
                                               const Partition& partition);

/// Concatenated per-view unit rows scaled by 1/sqrt(v). A zero mean vector
/// (possible when opposite samples cancel) contributes a zero block, which
/// puts it at cosine distance 1 from everything in that view.
Embedding normalized_embedding(const ClusterRepresentatives& reps);

/// Rewrites row `cluster` of `z` from the current means in `reps`.
void embed_cluster(const ClusterRepresentatives& reps, std::size_t cluster, Embedding& z);

struct NearestNeighbors {
  std::vector<std::size_t> index;  ///< nearest other node
  std::vector<double> distance;    ///< integrated distance to it
};

enum class NnBackend { Exact, Tree };

/// Brute-force row argmin of a dense matrix, ties to the smallest index.
NearestNeighbors nearest_neighbors_exact(const DistanceMatrix& distances);

/// Brute force over all pairs of the embedding, O(k^2).
NearestNeighbors nearest_neighbors_exact(const ClusterRepresentatives& reps);

/// Exact k-d tree search; identical output to the brute-force overload.
NearestNeighbors nearest_neighbors_fast(const ClusterRepresentatives& reps);

NearestNeighbors nearest_neighbors(const ClusterRepresentatives& reps, NnBackend backend);

/// Undirected first-neighbour graph. Edges are stored once as (low, high),
/// sorted and deduplicated.
struct NeighborGraph {
  std::size_t order = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Links every node a with nearest[a]. Throws ValidationError on self-loops or
/// out-of-range entries.
NeighborGraph build_graph(std::span<const std::size_t> nearest);

/// Components as clusters, numbered by smallest member node.
Partition connected_components(const NeighborGraph& graph);

}  // namespace mhc
