#include "mhc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

namespace mhc {
namespace {

void require_same_length(std::span<const Label> truth, std::span<const Label> pred) {
  if (truth.size() != pred.size()) {
    throw ValidationError("label vectors differ in length: " + std::to_string(truth.size()) +
                          " vs " + std::to_string(pred.size()));
  }
  if (truth.empty()) throw ValidationError("label vectors are empty");
}

std::vector<std::size_t> compact(std::span<const Label> labels, std::size_t& distinct) {
  std::unordered_map<Label, std::size_t> ids;
  std::vector<std::size_t> out;
  out.reserve(labels.size());
  for (Label l : labels) out.push_back(ids.try_emplace(l, ids.size()).first->second);
  distinct = ids.size();
  return out;
}

double pairs(std::size_t count) {
  const auto c = static_cast<double>(count);
  return c * (c - 1.0) / 2.0;
}

}  // namespace

ContingencyTable contingency(std::span<const Label> truth, std::span<const Label> pred) {
  require_same_length(truth, pred);
  std::size_t r = 0;
  std::size_t c = 0;
  const auto t = compact(truth, r);
  const auto p = compact(pred, c);
  ContingencyTable table;
  table.n = truth.size();
  table.counts.assign(r, std::vector<std::size_t>(c, 0));
  for (std::size_t i = 0; i < t.size(); ++i) ++table.counts[t[i]][p[i]];
  return table;
}

std::vector<std::size_t> optimal_assignment(const std::vector<std::vector<double>>& cost) {
  const std::size_t k = cost.size();
  for (const auto& row : cost) {
    if (row.size() != k) throw ValidationError("optimal_assignment: cost matrix is not square");
    for (double x : row) {
      if (!std::isfinite(x)) throw ValidationError("optimal_assignment: non-finite cost");
    }
  }
  if (k == 0) return {};

  // Shortest augmenting paths with row/column potentials; arrays are 1-based
  // with index 0 as the virtual source column.
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(k + 1, 0.0);
  std::vector<double> v(k + 1, 0.0);
  std::vector<std::size_t> match(k + 1, 0);  // column -> row
  std::vector<std::size_t> way(k + 1, 0);
  for (std::size_t row = 1; row <= k; ++row) {
    match[0] = row;
    std::size_t col = 0;
    std::vector<double> minv(k + 1, kInf);
    std::vector<bool> used(k + 1, false);
    do {
      used[col] = true;
      const std::size_t r = match[col];
      double delta = kInf;
      std::size_t next = 0;
      for (std::size_t j = 1; j <= k; ++j) {
        if (used[j]) continue;
        const double reduced = cost[r - 1][j - 1] - u[r] - v[j];
        if (reduced < minv[j]) {
          minv[j] = reduced;
          way[j] = col;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          next = j;
        }
      }
      for (std::size_t j = 0; j <= k; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      col = next;
    } while (match[col] != 0);
    do {
      const std::size_t prev = way[col];
      match[col] = match[prev];
      col = prev;
    } while (col != 0);
  }

  std::vector<std::size_t> assignment(k);
  for (std::size_t j = 1; j <= k; ++j) assignment[match[j] - 1] = j - 1;
  return assignment;
}

double accuracy(std::span<const Label> truth, std::span<const Label> pred) {
  const ContingencyTable table = contingency(truth, pred);
  const std::size_t k = std::max(table.rows(), table.cols());
  std::vector<std::vector<double>> cost(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < table.rows(); ++i) {
    for (std::size_t j = 0; j < table.cols(); ++j) {
      cost[i][j] = -static_cast<double>(table.counts[i][j]);
    }
  }
  const auto assignment = optimal_assignment(cost);
  std::size_t matched = 0;
  for (std::size_t i = 0; i < table.rows(); ++i) {
    if (assignment[i] < table.cols()) matched += table.counts[i][assignment[i]];
  }
  return static_cast<double>(matched) / static_cast<double>(table.n);
}

double nmi(std::span<const Label> truth, std::span<const Label> pred) {
  const ContingencyTable table = contingency(truth, pred);
  const auto n = static_cast<double>(table.n);
  std::vector<double> row_sum(table.rows(), 0.0);
  std::vector<double> col_sum(table.cols(), 0.0);
  for (std::size_t i = 0; i < table.rows(); ++i) {
    for (std::size_t j = 0; j < table.cols(); ++j) {
      row_sum[i] += static_cast<double>(table.counts[i][j]);
      col_sum[j] += static_cast<double>(table.counts[i][j]);
    }
  }
  const auto entropy = [n](const std::vector<double>& sums) {
    double h = 0.0;
    for (double s : sums) {
      if (s > 0.0) h -= (s / n) * std::log(s / n);
    }
    return h;
  };
  const double h_truth = entropy(row_sum);
  const double h_pred = entropy(col_sum);
  if (h_truth <= 0.0 || h_pred <= 0.0) {
    return table.rows() == 1 && table.cols() == 1 ? 1.0 : 0.0;
  }

  double mi = 0.0;
  for (std::size_t i = 0; i < table.rows(); ++i) {
    for (std::size_t j = 0; j < table.cols(); ++j) {
      const auto c = static_cast<double>(table.counts[i][j]);
      if (c > 0.0) mi += (c / n) * std::log(c * n / (row_sum[i] * col_sum[j]));
    }
  }
  return std::clamp(mi / std::sqrt(h_truth * h_pred), 0.0, 1.0);
}

double f_measure(std::span<const Label> truth, std::span<const Label> pred) {
  const ContingencyTable table = contingency(truth, pred);
  double both = 0.0;
  std::vector<std::size_t> row_sum(table.rows(), 0);
  std::vector<std::size_t> col_sum(table.cols(), 0);
  for (std::size_t i = 0; i < table.rows(); ++i) {
    for (std::size_t j = 0; j < table.cols(); ++j) {
      both += pairs(table.counts[i][j]);
      row_sum[i] += table.counts[i][j];
      col_sum[j] += table.counts[i][j];
    }
  }
  double same_true = 0.0;
  double same_pred = 0.0;
  for (std::size_t s : row_sum) same_true += pairs(s);
  for (std::size_t s : col_sum) same_pred += pairs(s);

  const double precision = same_pred == 0.0 ? 1.0 : both / same_pred;
  const double recall = same_true == 0.0 ? 1.0 : both / same_true;
  if (precision + recall == 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

}  // namespace mhc
