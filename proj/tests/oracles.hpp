#pragma once

// Independent reference implementations used only by tests. Nothing here
// calls into the library's distance, neighbour, or metric code.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/QR>

#include "mhc/dataset.hpp"

namespace mhc::oracle {

inline Matrix random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = g(rng);
  return m;
}

inline MultiViewDataset random_dataset(std::mt19937_64& rng, std::size_t n,
                                       const std::vector<std::size_t>& dims) {
  std::vector<Matrix> views;
  for (std::size_t d : dims) {
    views.push_back(random_matrix(rng, static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d)));
  }
  return MultiViewDataset(std::move(views));
}

/// Square matrix with orthonormal columns, from QR of a Gaussian matrix.
inline Matrix random_orthonormal(std::mt19937_64& rng, Eigen::Index dim) {
  const Matrix a = random_matrix(rng, dim, dim);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  return Matrix(qr.householderQ());
}

/// Integrated cosine distances by the textbook formula, long double accumulation.
inline std::vector<std::vector<double>> integrated_distances(const std::vector<Matrix>& views) {
  const auto n = static_cast<std::size_t>(views.front().rows());
  std::vector<std::vector<double>> d(n, std::vector<double>(n, std::numeric_limits<double>::infinity()));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      long double total = 0.0L;
      for (const Matrix& x : views) {
        long double xy = 0, xx = 0, yy = 0;
        for (Eigen::Index c = 0; c < x.cols(); ++c) {
          const long double p = x(static_cast<Eigen::Index>(a), c);
          const long double q = x(static_cast<Eigen::Index>(b), c);
          xy += p * q;
          xx += p * p;
          yy += q * q;
        }
        total += 1.0L - xy / (std::sqrt(xx) * std::sqrt(yy));
      }
      d[a][b] = static_cast<double>(total / static_cast<long double>(views.size()));
    }
  }
  return d;
}

/// Row argmin, ties to the smallest index.
inline std::vector<std::size_t> brute_nearest(const std::vector<std::vector<double>>& d) {
  std::vector<std::size_t> out(d.size());
  for (std::size_t a = 0; a < d.size(); ++a) {
    std::size_t best = a == 0 ? 1 : 0;
    for (std::size_t b = 0; b < d.size(); ++b) {
      if (b != a && d[a][b] < d[a][best]) best = b;
    }
    out[a] = best;
  }
  return out;
}

/// Component labels by breadth-first search, numbered by smallest member.
inline std::vector<std::size_t> bfs_components(std::size_t order,
                                               const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> adj(order);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label(order, kNone);
  std::size_t next = 0;
  for (std::size_t s = 0; s < order; ++s) {
    if (label[s] != kNone) continue;
    std::queue<std::size_t> q;
    q.push(s);
    label[s] = next;
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t w : adj[u]) {
        if (label[w] == kNone) {
          label[w] = next;
          q.push(w);
        }
      }
    }
    ++next;
  }
  return label;
}

/// Minimum total cost over all permutations.
inline double exhaustive_min_cost(const std::vector<std::vector<double>>& cost) {
  std::vector<std::size_t> perm(cost.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  double best = std::numeric_limits<double>::infinity();
  do {
    double total = 0.0;
    for (std::size_t i = 0; i < perm.size(); ++i) total += cost[i][perm[i]];
    best = std::min(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Pairwise F-measure by enumerating every unordered pair.
inline double pair_f_measure(const std::vector<std::size_t>& truth, const std::vector<std::size_t>& pred) {
  double both = 0, same_pred = 0, same_true = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    for (std::size_t j = i + 1; j < truth.size(); ++j) {
      const bool p = pred[i] == pred[j];
      const bool t = truth[i] == truth[j];
      same_pred += p;
      same_true += t;
      both += p && t;
    }
  }
  const double precision = same_pred == 0 ? 1.0 : both / same_pred;
  const double recall = same_true == 0 ? 1.0 : both / same_true;
  return precision + recall == 0 ? 0.0 : 2 * precision * recall / (precision + recall);
}

/// Accuracy by trying every injective map from predicted to true labels
/// (labels must be 0..k-1, small k).
inline double brute_accuracy(const std::vector<std::size_t>& truth, const std::vector<std::size_t>& pred) {
  const std::size_t kt = *std::max_element(truth.begin(), truth.end()) + 1;
  const std::size_t kp = *std::max_element(pred.begin(), pred.end()) + 1;
  const std::size_t k = std::max(kt, kp);
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::size_t best = 0;
  do {
    std::size_t hit = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) hit += perm[pred[i]] == truth[i];
    best = std::max(best, hit);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<double>(best) / static_cast<double>(truth.size());
}

}  // namespace mhc::oracle
