#include "mhc/nna.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mhc/parallel.hpp"

namespace mhc {
namespace {

void require_two(std::size_t k) {
  if (k < 2) {
    throw ValidationError("nearest neighbours need at least two nodes, got " + std::to_string(k));
  }
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

ClusterRepresentatives singleton_representatives(const MultiViewDataset& dataset) {
  ClusterRepresentatives reps;
  reps.views = dataset.views();
  reps.sizes.assign(dataset.num_samples(), 1);
  return reps;
}

ClusterRepresentatives compute_representatives(const MultiViewDataset& dataset,
                                               const Partition& partition) {
  if (partition.size() != dataset.num_samples()) {
    throw ValidationError("partition covers " + std::to_string(partition.size()) +
                          " samples, dataset has " + std::to_string(dataset.num_samples()));
  }
  const auto k = static_cast<Eigen::Index>(partition.num_clusters());
  ClusterRepresentatives reps;
  reps.sizes = partition.cluster_sizes();
  reps.views.reserve(dataset.num_views());
  for (const Matrix& view : dataset.views()) {
    Matrix sums = Matrix::Zero(k, view.cols());
    for (Eigen::Index i = 0; i < view.rows(); ++i) {
      sums.row(static_cast<Eigen::Index>(partition[static_cast<std::size_t>(i)])) += view.row(i);
    }
    for (Eigen::Index c = 0; c < k; ++c) {
      sums.row(c) /= static_cast<double>(reps.sizes[static_cast<std::size_t>(c)]);
    }
    reps.views.push_back(std::move(sums));
  }
  return reps;
}

void embed_cluster(const ClusterRepresentatives& reps, std::size_t cluster, Embedding& z) {
  const auto r = static_cast<Eigen::Index>(cluster);
  const double scale = 1.0 / std::sqrt(static_cast<double>(reps.views.size()));
  Eigen::Index offset = 0;
  for (const Matrix& v : reps.views) {
    const double norm = v.row(r).norm();
    auto block = z.block(r, offset, 1, v.cols());
    if (norm > 0.0) {
      block = v.row(r) * (scale / norm);
    } else {
      block.setZero();
    }
    offset += v.cols();
  }
}

Embedding normalized_embedding(const ClusterRepresentatives& reps) {
  Eigen::Index width = 0;
  for (const Matrix& v : reps.views) width += v.cols();
  Embedding z(static_cast<Eigen::Index>(reps.count()), width);
  for (std::size_t c = 0; c < reps.count(); ++c) embed_cluster(reps, c, z);
  return z;
}

NearestNeighbors nearest_neighbors_exact(const DistanceMatrix& distances) {
  const std::size_t k = distances.order();
  require_two(k);
  NearestNeighbors out{std::vector<std::size_t>(k), std::vector<double>(k)};
  for (std::size_t a = 0; a < k; ++a) {
    Neighbor best;
    const auto row = distances.row(a);
    for (std::size_t b = 0; b < k; ++b) {
      if (b == a) continue;
      const Neighbor n{row[b], b};
      if (n.better_than(best)) best = n;
    }
    out.index[a] = best.index;
    out.distance[a] = best.distance;
  }
  return out;
}

NearestNeighbors nearest_neighbors_exact(const ClusterRepresentatives& reps) {
  const std::size_t k = reps.count();
  require_two(k);
  const Embedding z = normalized_embedding(reps);
  NearestNeighbors out{std::vector<std::size_t>(k), std::vector<double>(k)};
  parallel_for(k, [&](std::size_t a) {
    Neighbor best;
    for (std::size_t b = 0; b < k; ++b) {
      if (b == a) continue;
      const Neighbor n{embedded_distance(z, a, b), b};
      if (n.better_than(best)) best = n;
    }
    out.index[a] = best.index;
    out.distance[a] = best.distance;
  });
  return out;
}

NearestNeighbors nearest_neighbors_fast(const ClusterRepresentatives& reps) {
  const std::size_t k = reps.count();
  require_two(k);
  const Embedding z = normalized_embedding(reps);
  const KdTree tree(z);
  NearestNeighbors out{std::vector<std::size_t>(k), std::vector<double>(k)};
  parallel_for(k, [&](std::size_t a) {
    const Neighbor best = tree.nearest_to_row(a);
    out.index[a] = best.index;
    out.distance[a] = best.distance;
  });
  return out;
}

NearestNeighbors nearest_neighbors(const ClusterRepresentatives& reps, NnBackend backend) {
  return backend == NnBackend::Exact ? nearest_neighbors_exact(reps)
                                     : nearest_neighbors_fast(reps);
}

NeighborGraph build_graph(std::span<const std::size_t> nearest) {
  NeighborGraph graph;
  graph.order = nearest.size();
  graph.edges.reserve(nearest.size());
  for (std::size_t a = 0; a < nearest.size(); ++a) {
    const std::size_t b = nearest[a];
    if (b == a) throw ValidationError("build_graph: node " + std::to_string(a) + " is its own neighbour");
    if (b >= nearest.size()) {
      throw ValidationError("build_graph: neighbour " + std::to_string(b) + " of node " +
                            std::to_string(a) + " is out of range");
    }
    graph.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(graph.edges.begin(), graph.edges.end());
  graph.edges.erase(std::unique(graph.edges.begin(), graph.edges.end()), graph.edges.end());
  return graph;
}

Partition connected_components(const NeighborGraph& graph) {
  std::vector<std::size_t> parent(graph.order);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (const auto& [a, b] : graph.edges) {
    const std::size_t ra = find_root(parent, a);
    const std::size_t rb = find_root(parent, b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  LabelVector roots(graph.order);
  for (std::size_t i = 0; i < graph.order; ++i) roots[i] = find_root(parent, i);
  return Partition::canonical(roots);
}

}  // namespace mhc
