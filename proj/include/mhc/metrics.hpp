#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mhc/types.hpp"

namespace mhc {

/// Counts of samples per (true cluster, predicted cluster). Label values are
/// compacted to 0..r-1 and 0..c-1 in order of first appearance.
struct ContingencyTable {
  std::vector<std::vector<std::size_t>> counts;  ///< rows: truth, columns: prediction
  std::size_t n = 0;

  std::size_t rows() const noexcept { return counts.size(); }
  std::size_t cols() const noexcept { return counts.empty() ? 0 : counts.front().size(); }
};

ContingencyTable contingency(std::span<const Label> truth, std::span<const Label> pred);

/// Minimum-cost perfect matching (Kuhn-Munkres), O(k^3). Entry i of the
/// result is the column assigned to row i.
std::vector<std::size_t> optimal_assignment(const std::vector<std::vector<double>>& cost);

/// Fraction of samples matched under the best one-to-one mapping between
/// predicted and true clusters. The contingency table is zero-padded to square.
double accuracy(std::span<const Label> truth, std::span<const Label> pred);

/// Mutual information over the geometric mean of the two entropies. When an
/// entropy is zero the score is 1 if both labelings are a single cluster and
/// 0 otherwise.
double nmi(std::span<const Label> truth, std::span<const Label> pred);

/// Pairwise F-measure over all unordered sample pairs. Precision is taken as
/// 1 when no pair shares a predicted cluster, recall as 1 when no pair shares
/// a true cluster, and F as 0 when both are 0.
double f_measure(std::span<const Label> truth, std::span<const Label> pred);

}  // namespace mhc
