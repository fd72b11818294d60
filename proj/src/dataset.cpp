#include "mhc/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstring>
#include <numeric>
#include <random>
#include <string>
#include <string_view>

#include "mhc/io.hpp"

namespace mhc {
namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\r' || c == '\n' || c == '\t'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

struct Line {
  std::size_t number;  // 1-based line number in the file
  std::string_view text;
};

// Non-blank lines, with CR stripped.
std::vector<Line> split_lines(std::string_view content) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!content.empty()) {
    ++number;
    const auto eol = content.find('\n');
    std::string_view line = content.substr(0, eol);
    content.remove_prefix(eol == std::string_view::npos ? content.size() : eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!trim(line).empty()) lines.push_back({number, line});
  }
  return lines;
}

// Throws with `context` prefixed when a view breaks a dataset invariant.
void validate_view(const Matrix& view, const std::string& context) {
  if (view.cols() < 1) throw ValidationError(context + ": view has no feature columns");
  for (Eigen::Index r = 0; r < view.rows(); ++r) {
    bool all_zero = true;
    for (Eigen::Index c = 0; c < view.cols(); ++c) {
      const double x = view(r, c);
      if (!std::isfinite(x)) {
        throw ValidationError(context + ": non-finite value at row " + std::to_string(r + 1) +
                              ", column " + std::to_string(c + 1));
      }
      all_zero = all_zero && x == 0.0;
    }
    if (all_zero) {
      throw ValidationError(context + ": row " + std::to_string(r + 1) +
                            " is all zeros (cosine distance undefined)");
    }
  }
}

}  // namespace

MultiViewDataset::MultiViewDataset(std::vector<Matrix> views, std::optional<LabelVector> labels)
    : views_(std::move(views)), labels_(std::move(labels)) {
  if (views_.empty()) throw ValidationError("dataset needs at least one view");
  const auto n = views_.front().rows();
  if (n < 2) throw ValidationError("dataset needs at least two samples, got " + std::to_string(n));
  for (std::size_t i = 0; i < views_.size(); ++i) {
    if (views_[i].rows() != n) {
      throw ValidationError("row-count mismatch: view 1 has " + std::to_string(n) +
                            " rows, view " + std::to_string(i + 1) + " has " +
                            std::to_string(views_[i].rows()));
    }
    validate_view(views_[i], "view " + std::to_string(i + 1));
  }
  if (labels_ && labels_->size() != static_cast<std::size_t>(n)) {
    throw ValidationError("label count " + std::to_string(labels_->size()) +
                          " does not match sample count " + std::to_string(n));
  }
}

bool operator==(const MultiViewDataset& a, const MultiViewDataset& b) {
  if (a.views_.size() != b.views_.size() || a.labels_ != b.labels_) return false;
  for (std::size_t i = 0; i < a.views_.size(); ++i) {
    const Matrix& x = a.views_[i];
    const Matrix& y = b.views_[i];
    if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
    // bitwise comparison, so -0.0 and 0.0 differ
    if (!std::equal(x.data(), x.data() + x.size(), y.data(), [](double p, double q) {
          return std::memcmp(&p, &q, sizeof(double)) == 0;
        })) {
      return false;
    }
  }
  return true;
}

Matrix read_view_file(const std::filesystem::path& path, const LoadOptions& options) {
  const std::string name = path.string();
  const std::string content = io::read_file(path);
  std::vector<Line> lines = split_lines(content);
  if (options.header && !lines.empty()) lines.erase(lines.begin());
  if (lines.empty()) throw ValidationError(name + ": empty file");

  const char delimiter = lines.front().text.find('\t') != std::string_view::npos ? '\t' : ',';

  std::vector<double> values;
  std::size_t cols = 0;
  for (std::size_t row = 0; row < lines.size(); ++row) {
    std::string_view rest = lines[row].text;
    std::size_t col = 0;
    while (true) {
      const auto cut = rest.find(delimiter);
      const std::string_view cell = trim(rest.substr(0, cut));
      ++col;
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw ValidationError(name + ": non-numeric cell '" + std::string(cell) + "' at row " +
                              std::to_string(lines[row].number) + ", column " +
                              std::to_string(col));
      }
      if (!std::isfinite(value)) {
        throw ValidationError(name + ": non-finite value at row " +
                              std::to_string(lines[row].number) + ", column " +
                              std::to_string(col));
      }
      values.push_back(value);
      if (cut == std::string_view::npos) break;
      rest.remove_prefix(cut + 1);
    }
    if (row == 0) {
      cols = col;
    } else if (col != cols) {
      throw ValidationError(name + ": row " + std::to_string(lines[row].number) + " has " +
                            std::to_string(col) + " columns, expected " + std::to_string(cols));
    }
  }

  Matrix view(static_cast<Eigen::Index>(lines.size()), static_cast<Eigen::Index>(cols));
  std::copy(values.begin(), values.end(), view.data());
  for (Eigen::Index r = 0; r < view.rows(); ++r) {
    if ((view.row(r).array() == 0.0).all()) {
      throw ValidationError(name + ": row " + std::to_string(lines[r].number) +
                            " is all zeros (cosine distance undefined)");
    }
  }
  return view;
}

LabelVector read_label_file(const std::filesystem::path& path) {
  const std::string name = path.string();
  const std::string content = io::read_file(path);
  const std::vector<Line> lines = split_lines(content);
  if (lines.empty()) throw ValidationError(name + ": empty file");
  LabelVector labels;
  labels.reserve(lines.size());
  for (const Line& line : lines) {
    const std::string_view cell = trim(line.text);
    Label value = 0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc() || ptr != cell.data() + cell.size()) {
      throw ValidationError(name + ": line " + std::to_string(line.number) +
                            " is not a non-negative integer: '" + std::string(cell) + "'");
    }
    labels.push_back(value);
  }
  return labels;
}

MultiViewDataset load_dataset(std::span<const std::filesystem::path> view_paths,
                              const std::optional<std::filesystem::path>& label_path,
                              const LoadOptions& options) {
  if (view_paths.empty()) throw ValidationError("at least one view file is required");
  std::vector<Matrix> views;
  views.reserve(view_paths.size());
  for (const auto& path : view_paths) {
    views.push_back(read_view_file(path, options));
    if (views.back().rows() != views.front().rows()) {
      throw ValidationError("row-count mismatch: '" + view_paths.front().string() + "' has " +
                            std::to_string(views.front().rows()) + " rows, '" + path.string() +
                            "' has " + std::to_string(views.back().rows()));
    }
  }
  std::optional<LabelVector> labels;
  if (label_path) {
    labels = read_label_file(*label_path);
    if (labels->size() != static_cast<std::size_t>(views.front().rows())) {
      throw ValidationError(label_path->string() + ": " + std::to_string(labels->size()) +
                            " labels for " + std::to_string(views.front().rows()) + " samples");
    }
  }
  return MultiViewDataset(std::move(views), std::move(labels));
}

MultiViewDataset generate_synthetic(const SyntheticSpec& spec) {
  if (spec.views < 1) throw ValidationError("synthetic: need at least one view");
  if (spec.n < 2) throw ValidationError("synthetic: need at least two samples");
  if (spec.clusters < 1 || spec.clusters > spec.n) {
    throw ValidationError("synthetic: cluster count must be in [1, n]");
  }
  if (spec.dims.size() != 1 && spec.dims.size() != spec.views) {
    throw ValidationError("synthetic: expected 1 or " + std::to_string(spec.views) +
                          " dimensions, got " + std::to_string(spec.dims.size()));
  }
  if (std::any_of(spec.dims.begin(), spec.dims.end(), [](std::size_t d) { return d < 2; })) {
    throw ValidationError("synthetic: every view needs dimension >= 2");
  }
  if (!(spec.separation >= 0.0) || !(spec.noise >= 0.0) || !std::isfinite(spec.separation) ||
      !std::isfinite(spec.noise)) {
    throw ValidationError("synthetic: separation and noise must be finite and >= 0");
  }

  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  // Balanced membership, then shuffled.
  LabelVector labels(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) labels[i] = i * spec.clusters / spec.n;
  std::shuffle(labels.begin(), labels.end(), rng);

  std::vector<Matrix> views;
  views.reserve(spec.views);
  for (std::size_t v = 0; v < spec.views; ++v) {
    const auto dim = static_cast<Eigen::Index>(spec.dims.size() == 1 ? spec.dims[0] : spec.dims[v]);
    const auto m = static_cast<Eigen::Index>(spec.clusters);

    // Orthonormal directions by Gram-Schmidt; once the dimension runs out,
    // later directions are plain random unit vectors.
    Matrix basis(m + 1, dim);
    for (Eigen::Index j = 0; j <= m; ++j) {
      for (int attempt = 0;; ++attempt) {
        Eigen::RowVectorXd r(dim);
        for (Eigen::Index d = 0; d < dim; ++d) r[d] = gauss(rng);
        if (j < dim) {
          for (Eigen::Index p = 0; p < j; ++p) r -= r.dot(basis.row(p)) * basis.row(p);
        }
        const double norm = r.norm();
        if (norm > 1e-8 || attempt > 16) {
          basis.row(j) = r / norm;
          break;
        }
      }
    }

    Matrix centres(m, dim);
    for (Eigen::Index j = 0; j < m; ++j) {
      Eigen::RowVectorXd c = basis.row(0) + spec.separation * basis.row(j + 1);
      centres.row(j) = c / c.norm();
    }

    Matrix view(static_cast<Eigen::Index>(spec.n), dim);
    for (std::size_t i = 0; i < spec.n; ++i) {
      const auto row = static_cast<Eigen::Index>(i);
      view.row(row) = centres.row(static_cast<Eigen::Index>(labels[i]));
      if (spec.noise > 0.0) {
        for (Eigen::Index d = 0; d < dim; ++d) view(row, d) += spec.noise * gauss(rng);
      }
    }
    views.push_back(std::move(view));
  }
  return MultiViewDataset(std::move(views), std::move(labels));
}

void write_view_file(const std::filesystem::path& path, const Matrix& view) {
  std::string out;
  for (Eigen::Index r = 0; r < view.rows(); ++r) {
    for (Eigen::Index c = 0; c < view.cols(); ++c) {
      if (c > 0) out.push_back(',');
      out += io::format_double(view(r, c));
    }
    out.push_back('\n');
  }
  io::write_file_atomic(path, out);
}

void write_label_file(const std::filesystem::path& path, std::span<const Label> labels) {
  std::string out;
  for (Label l : labels) {
    out += std::to_string(l);
    out.push_back('\n');
  }
  io::write_file_atomic(path, out);
}

}  // namespace mhc
