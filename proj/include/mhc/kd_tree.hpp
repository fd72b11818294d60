#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "mhc/types.hpp"

namespace mhc {

/// Rows are concatenations of per-view unit vectors scaled by 1/sqrt(v).
/// For two such rows the mean per-view cosine distance equals
/// `1 - <z_a, z_b>`, and `|z_a - z_b|^2 <= 2 (1 - <z_a, z_b>)` with equality
/// when every part is a true unit vector.
using Embedding = Matrix;

/// Integrated cosine distance between two embedding rows, clamped to [0, 2].
double embedded_distance(const Embedding& z, std::size_t a, std::size_t b);

struct Neighbor {
  double distance = std::numeric_limits<double>::infinity();
  std::size_t index = std::numeric_limits<std::size_t>::max();

  /// (distance, index) lexicographic order, so ties go to the smaller index.
  bool better_than(const Neighbor& other) const noexcept {
    return distance < other.distance || (distance == other.distance && index < other.index);
  }
};

/// Exact first-neighbour search over an embedding.
///
/// Candidates are scored with `embedded_distance`, the same function the
/// brute-force path uses, and subtrees are pruned only when their Euclidean
/// lower bound rules them out by a margin, so the result matches brute force
/// bit for bit, ties included. The tree keeps a reference to `z`.
class KdTree {
 public:
  explicit KdTree(const Embedding& z, std::size_t leaf_size = 12);

  /// Nearest row to row `query`, excluding `query` itself.
  Neighbor nearest_to_row(std::size_t query) const;

  std::size_t size() const noexcept { return order_.size(); }

 private:
  struct Node {
    std::size_t begin = 0;
    std::size_t end = 0;  // leaf range into order_
    Eigen::Index split_dim = -1;
    double split_value = 0.0;
    std::size_t left = 0;
    std::size_t right = 0;
    bool leaf() const noexcept { return split_dim < 0; }
  };

  std::size_t build(std::size_t begin, std::size_t end);
  void search(std::size_t node, std::size_t query, double lower_bound,
              std::vector<double>& offsets, Neighbor& best) const;

  const Embedding& z_;
  std::size_t leaf_size_;
  std::vector<std::size_t> order_;
  std::vector<Node> nodes_;
};

}  // namespace mhc
