#include "mhc/kd_tree.hpp"

#include <algorithm>
#include <numeric>

namespace mhc {
namespace {

// Slack on the pruning test. Lower bounds and distances are O(1), so rounding
// error is many orders of magnitude below this.
constexpr double kPruneSlack = 1e-9;

}  // namespace

double embedded_distance(const Embedding& z, std::size_t a, std::size_t b) {
  const auto cols = z.cols();
  const double* x = z.data() + static_cast<Eigen::Index>(a) * cols;
  const double* y = z.data() + static_cast<Eigen::Index>(b) * cols;
  double dot = 0.0;
  for (Eigen::Index i = 0; i < cols; ++i) dot += x[i] * y[i];
  return std::clamp(1.0 - dot, 0.0, 2.0);
}

KdTree::KdTree(const Embedding& z, std::size_t leaf_size)
    : z_(z), leaf_size_(std::max<std::size_t>(1, leaf_size)), order_(static_cast<std::size_t>(z.rows())) {
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  nodes_.reserve(2 * order_.size() / leaf_size_ + 2);
  if (!order_.empty()) build(0, order_.size());
}

std::size_t KdTree::build(std::size_t begin, std::size_t end) {
  const std::size_t id = nodes_.size();
  nodes_.push_back(Node{begin, end});
  if (end - begin <= leaf_size_) return id;

  // Split on the dimension with the widest spread.
  const Eigen::Index dims = z_.cols();
  Eigen::Index best_dim = 0;
  double best_spread = -1.0;
  for (Eigen::Index d = 0; d < dims; ++d) {
    double lo = z_(static_cast<Eigen::Index>(order_[begin]), d);
    double hi = lo;
    for (std::size_t i = begin + 1; i < end; ++i) {
      const double x = z_(static_cast<Eigen::Index>(order_[i]), d);
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    if (hi - lo > best_spread) {
      best_spread = hi - lo;
      best_dim = d;
    }
  }
  if (best_spread <= 0.0) return id;  // all points identical: keep as one leaf

  const std::size_t mid = begin + (end - begin) / 2;
  std::nth_element(order_.begin() + static_cast<std::ptrdiff_t>(begin),
                   order_.begin() + static_cast<std::ptrdiff_t>(mid),
                   order_.begin() + static_cast<std::ptrdiff_t>(end),
                   [&](std::size_t a, std::size_t b) {
                     return z_(static_cast<Eigen::Index>(a), best_dim) <
                            z_(static_cast<Eigen::Index>(b), best_dim);
                   });
  const double split = z_(static_cast<Eigen::Index>(order_[mid]), best_dim);
  // Left holds [begin, mid) with coordinate <= split, right [mid, end) with >= split.
  const std::size_t left = build(begin, mid);
  const std::size_t right = build(mid, end);
  Node& node = nodes_[id];
  node.split_dim = best_dim;
  node.split_value = split;
  node.left = left;
  node.right = right;
  return id;
}

Neighbor KdTree::nearest_to_row(std::size_t query) const {
  Neighbor best;
  if (nodes_.empty()) return best;
  std::vector<double> offsets(static_cast<std::size_t>(z_.cols()), 0.0);
  search(0, query, 0.0, offsets, best);
  return best;
}

void KdTree::search(std::size_t node_id, std::size_t query, double lower_bound,
                    std::vector<double>& offsets, Neighbor& best) const {
  const Node& node = nodes_[node_id];
  if (node.leaf()) {
    for (std::size_t i = node.begin; i < node.end; ++i) {
      const std::size_t candidate = order_[i];
      if (candidate == query) continue;
      const Neighbor n{embedded_distance(z_, query, candidate), candidate};
      if (n.better_than(best)) best = n;
    }
    return;
  }

  const double diff = z_(static_cast<Eigen::Index>(query), node.split_dim) - node.split_value;
  const std::size_t near = diff < 0.0 ? node.left : node.right;
  const std::size_t far = diff < 0.0 ? node.right : node.left;
  search(near, query, lower_bound, offsets, best);

  // Squared Euclidean distance is at most twice the integrated distance, so a
  // box farther than 2 * best cannot hold anything at distance <= best.
  double& offset = offsets[static_cast<std::size_t>(node.split_dim)];
  const double previous = offset;
  const double far_bound = lower_bound - previous * previous + diff * diff;
  if (far_bound <= 2.0 * best.distance + kPruneSlack) {
    offset = diff;
    search(far, query, far_bound, offsets, best);
    offset = previous;
  }
}

}  // namespace mhc
