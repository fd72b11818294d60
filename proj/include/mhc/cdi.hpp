#pragma once

#include <cstddef>
#include <limits>
#include <ostream>
#include <span>
#include <vector>

#include "mhc/dataset.hpp"
#include "mhc/types.hpp"

namespace mhc {

/// Symmetric n x n cosine-distance matrix with +inf on the diagonal, so a
/// sample is never its own nearest neighbour. Off-diagonal entries lie in [0, 2].
class DistanceMatrix {
 public:
  static constexpr double kSelf = std::numeric_limits<double>::infinity();

  DistanceMatrix() = default;
  /// Zero off-diagonal, +inf diagonal.
  explicit DistanceMatrix(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  double operator()(std::size_t a, std::size_t b) const { return values_[a * n_ + b]; }

  /// Sets both (a, b) and (b, a); a must differ from b.
  void set(std::size_t a, std::size_t b, double value);

  std::span<const double> row(std::size_t a) const { return {values_.data() + a * n_, n_}; }
  std::span<const double> values() const noexcept { return values_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
};

/// `1 - <x, y> / (|x| |y|)`. Throws ValidationError on length mismatch or a
/// zero-norm input.
double cosine_distance(std::span<const double> x, std::span<const double> y);

/// Pairwise cosine distances between the rows of one view.
DistanceMatrix view_distance_matrix(const Matrix& view);

/// Entry-wise mean of per-view matrices, accumulated in view order.
DistanceMatrix integrate_distances(std::span<const DistanceMatrix> matrices);

/// Integrated matrix of a whole dataset. Dense, so O(n^2) memory.
DistanceMatrix essential_distance_matrix(const MultiViewDataset& dataset);

/// Delimited text, one row per line, diagonal written as "inf".
void write_distance_matrix(std::ostream& out, const DistanceMatrix& matrix);

}  // namespace mhc
