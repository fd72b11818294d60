#include "mhc/cdi.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mhc/io.hpp"
#include "mhc/parallel.hpp"

namespace mhc {

DistanceMatrix::DistanceMatrix(std::size_t n) : n_(n), values_(n * n, 0.0) {
  for (std::size_t i = 0; i < n; ++i) values_[i * n + i] = kSelf;
}

void DistanceMatrix::set(std::size_t a, std::size_t b, double value) {
  values_[a * n_ + b] = value;
  values_[b * n_ + a] = value;
}

double cosine_distance(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.empty()) {
    throw ValidationError("cosine_distance: vectors must have the same nonzero length");
  }
  double xy = 0.0;
  double xx = 0.0;
  double yy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    xy += x[i] * y[i];
    xx += x[i] * x[i];
    yy += y[i] * y[i];
  }
  if (xx == 0.0 || yy == 0.0) throw ValidationError("cosine_distance: zero-norm vector");
  return std::clamp(1.0 - xy / (std::sqrt(xx) * std::sqrt(yy)), 0.0, 2.0);
}

DistanceMatrix view_distance_matrix(const Matrix& view) {
  const auto n = static_cast<std::size_t>(view.rows());
  const auto dim = static_cast<std::size_t>(view.cols());
  DistanceMatrix out(n);
  const auto row = [&](std::size_t a) {
    return std::span<const double>(view.data() + a * dim, dim);
  };
  // Each unordered pair is computed once and mirrored, so the result is exactly symmetric.
  parallel_for(n, [&](std::size_t a) {
    for (std::size_t b = a + 1; b < n; ++b) out.set(a, b, cosine_distance(row(a), row(b)));
  });
  return out;
}

DistanceMatrix integrate_distances(std::span<const DistanceMatrix> matrices) {
  if (matrices.empty()) throw ValidationError("integrate_distances: no matrices");
  const std::size_t n = matrices.front().order();
  for (const auto& m : matrices) {
    if (m.order() != n) {
      throw ValidationError("integrate_distances: order mismatch (" + std::to_string(n) + " vs " +
                            std::to_string(m.order()) + ")");
    }
  }
  if (matrices.size() == 1) return matrices.front();

  const double scale = 1.0 / static_cast<double>(matrices.size());
  DistanceMatrix out(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      double sum = 0.0;
      for (const auto& m : matrices) sum += m(a, b);
      out.set(a, b, sum * scale);
    }
  }
  return out;
}

DistanceMatrix essential_distance_matrix(const MultiViewDataset& dataset) {
  std::vector<DistanceMatrix> per_view;
  per_view.reserve(dataset.num_views());
  for (const Matrix& view : dataset.views()) per_view.push_back(view_distance_matrix(view));
  return integrate_distances(per_view);
}

void write_distance_matrix(std::ostream& out, const DistanceMatrix& matrix) {
  for (std::size_t a = 0; a < matrix.order(); ++a) {
    for (std::size_t b = 0; b < matrix.order(); ++b) {
      if (b > 0) out << ',';
      out << io::format_double(matrix(a, b));
    }
    out << '\n';
  }
}

}  // namespace mhc
