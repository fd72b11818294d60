#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "mhc/types.hpp"

namespace mhc {

/// The same n samples described by v feature matrices.
///
/// View matrices store samples as rows (n x dim_i), the transpose of the
/// column-per-sample convention common in the multi-view literature.
/// Features are kept exactly as given. Construction validates everything the
/// clustering code relies on, so a dataset is always safe to cluster:
///   * at least one view and at least two samples,
///   * identical row counts, at least one column per view,
///   * finite entries and no all-zero rows (cosine distance is undefined there),
///   * labels, when present, of length n.
class MultiViewDataset {
 public:
  explicit MultiViewDataset(std::vector<Matrix> views,
                            std::optional<LabelVector> labels = std::nullopt);

  std::size_t num_samples() const noexcept { return views_.front().rows(); }
  std::size_t num_views() const noexcept { return views_.size(); }

  const Matrix& view(std::size_t i) const { return views_.at(i); }
  const std::vector<Matrix>& views() const noexcept { return views_; }
  const std::optional<LabelVector>& labels() const noexcept { return labels_; }

  friend bool operator==(const MultiViewDataset&, const MultiViewDataset&);

 private:
  std::vector<Matrix> views_;
  std::optional<LabelVector> labels_;
};

struct LoadOptions {
  bool header = false;  ///< skip the first line of every view file
};

/// Reads one delimited view file. Comma or tab, detected from the first data line.
Matrix read_view_file(const std::filesystem::path& path, const LoadOptions& options = {});

/// Reads one non-negative integer per line.
LabelVector read_label_file(const std::filesystem::path& path);

/// Loads and validates a dataset; view order follows `view_paths`.
MultiViewDataset load_dataset(std::span<const std::filesystem::path> view_paths,
                              const std::optional<std::filesystem::path>& label_path,
                              const LoadOptions& options = {});

/// Parameters for `generate_synthetic`.
struct SyntheticSpec {
  std::size_t n = 300;
  std::size_t views = 2;
  std::size_t clusters = 3;
  std::vector<std::size_t> dims{16, 24};  ///< one entry per view, or one entry shared by all
  double separation = 1.0;
  double noise = 0.05;
  std::uint64_t seed = 1;
};

/// Blob-style multi-view data with ground-truth labels.
///
/// Each view draws its own cluster centres as unit vectors
/// `normalize(base + separation * r_j)` with the `r_j` orthonormal and
/// orthogonal to `base` (when the dimension allows), so the cosine distance
/// between any two centres is `s^2 / (1 + s^2)`. Samples are their centre
/// plus isotropic Gaussian noise. Cluster membership is shared by all views,
/// balanced to within one sample, and shuffled. Deterministic for a fixed seed.
MultiViewDataset generate_synthetic(const SyntheticSpec& spec);

/// Writes a view as comma-separated text with round-trip precision.
void write_view_file(const std::filesystem::path& path, const Matrix& view);
void write_label_file(const std::filesystem::path& path, std::span<const Label> labels);

}  // namespace mhc
