#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mhc/nna.hpp"

namespace mhc::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kIo = 2 };

/// Runs `mhc <args...>` in-process; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct BenchOptions {
  std::vector<std::size_t> sizes{10000, 20000, 40000};
  std::size_t views = 2;
  std::size_t dims = 16;
  std::size_t clusters = 3;
  double separation = 1.0;
  double noise = 0.05;
  std::uint64_t seed = 1;
  std::size_t repeats = 1;  ///< best-of timing per size
  NnBackend backend = NnBackend::Tree;
};

struct BenchRow {
  std::size_t n = 0;
  double wall_ms = 0.0;
  std::vector<std::size_t> level_sizes;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  std::optional<double> slope;  ///< least-squares slope of log(time) on log(n); needs >= 2 sizes
};

/// Times `fit` on synthetic data of each size (generation is not timed).
BenchResult run_bench(const BenchOptions& options);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace mhc::cli
