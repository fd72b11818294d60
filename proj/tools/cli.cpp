#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "mhc/cdi.hpp"
#include "mhc/dataset.hpp"
#include "mhc/hierarchy.hpp"
#include "mhc/hierarchy_io.hpp"
#include "mhc/io.hpp"
#include "mhc/metrics.hpp"

namespace mhc::cli {
namespace {

using Clock = std::chrono::steady_clock;
namespace fs = std::filesystem;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::vector<fs::path> to_paths(const std::vector<std::string>& names) {
  return {names.begin(), names.end()};
}

NnBackend parse_backend(const std::string& name) {
  return name == "exact" ? NnBackend::Exact : NnBackend::Tree;
}

std::string join(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += std::to_string(values[i]);
  }
  return out;
}

std::string fixed4(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

struct FitArgs {
  std::vector<std::string> views;
  bool header = false;
  std::string backend = "tree";
  std::string out;
  std::string dump_distances;
};

int cmd_fit(const FitArgs& a, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const auto paths = to_paths(a.views);
  const MultiViewDataset dataset = load_dataset(paths, std::nullopt, LoadOptions{a.header});
  const Hierarchy hierarchy = fit(dataset, parse_backend(a.backend));

  RunManifest manifest = make_manifest("fit", paths);
  manifest.level_sizes = hierarchy.level_sizes();
  write_hierarchy_file(a.out, hierarchy, manifest);
  if (!a.dump_distances.empty()) {
    std::ostringstream text;
    write_distance_matrix(text, essential_distance_matrix(dataset));
    io::write_file_atomic(a.dump_distances, text.str());
  }
  out << "levels: " << join(manifest.level_sizes) << '\n';
  err << "wall_time_ms: " << fixed4(elapsed_ms(start)) << '\n';
  return kOk;
}

struct CutArgs {
  std::string hierarchy;
  std::vector<std::string> views;
  bool header = false;
  long long k = 0;
  std::string out;
};

int cmd_cut(const CutArgs& a, std::ostream& out) {
  const auto paths = to_paths(a.views);
  const LoadedHierarchy loaded = read_hierarchy_file(a.hierarchy);
  if (view_digests(make_manifest("cut", paths)) != view_digests(loaded.manifest)) {
    throw ValidationError("'" + a.hierarchy +
                          "' was fitted on different view files (input digests do not match)");
  }
  const std::size_t finest = loaded.hierarchy.level_sizes().front();
  if (a.k < 1 || static_cast<std::size_t>(a.k) > finest) {
    throw ValidationError("-k must be between 1 and " + std::to_string(finest) +
                          " (the finest level), got " + std::to_string(a.k));
  }
  const MultiViewDataset dataset = load_dataset(paths, std::nullopt, LoadOptions{a.header});
  const Partition labels = cut(loaded.hierarchy, dataset, static_cast<std::size_t>(a.k));
  write_label_file(a.out, labels.assignment());
  out << "clusters: " << labels.num_clusters() << '\n';
  return kOk;
}

struct EvalArgs {
  std::string pred;
  std::string truth;
  bool json = false;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const LabelVector pred = read_label_file(a.pred);
  const LabelVector truth = read_label_file(a.truth);
  if (pred.size() != truth.size()) {
    throw ValidationError("length mismatch: " + a.pred + " has " + std::to_string(pred.size()) +
                          " labels, " + a.truth + " has " + std::to_string(truth.size()));
  }
  const double acc = accuracy(truth, pred);
  const double nmi_value = nmi(truth, pred);
  const double f = f_measure(truth, pred);
  if (a.json) {
    RunManifest manifest;
    manifest.command = "eval";
    add_digest(manifest, "pred", a.pred);
    add_digest(manifest, "truth", a.truth);
    manifest.wall_time_ms = elapsed_ms(start);
    nlohmann::json j{{"n", truth.size()},
                     {"acc", acc},
                     {"nmi", nmi_value},
                     {"f_measure", f},
                     {"manifest", to_json(manifest)}};
    out << j.dump(2) << '\n';
  } else {
    out << "ACC " << fixed4(acc) << " NMI " << fixed4(nmi_value) << " F " << fixed4(f) << '\n';
  }
  return kOk;
}

struct SynthArgs {
  SyntheticSpec spec;
  std::string prefix;
};

int cmd_synth(const SynthArgs& a, std::ostream& out) {
  const MultiViewDataset dataset = generate_synthetic(a.spec);
  for (std::size_t v = 0; v < dataset.num_views(); ++v) {
    const std::string name = a.prefix + "_view" + std::to_string(v + 1) + ".csv";
    write_view_file(name, dataset.view(v));
    out << name << '\n';
  }
  const std::string labels = a.prefix + "_labels.txt";
  write_label_file(labels, *dataset.labels());
  out << labels << '\n';
  return kOk;
}

struct BenchArgs {
  BenchOptions options;
  std::string backend = "tree";
  bool json = false;
};

int cmd_bench(BenchArgs a, std::ostream& out) {
  if (!std::is_sorted(a.options.sizes.begin(), a.options.sizes.end())) {
    throw ValidationError("--sizes must be ascending");
  }
  a.options.backend = parse_backend(a.backend);
  const BenchResult result = run_bench(a.options);
  if (a.json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const BenchRow& r : result.rows) {
      rows.push_back({{"n", r.n}, {"wall_ms", r.wall_ms}, {"level_sizes", r.level_sizes}});
    }
    RunManifest manifest;
    manifest.command = "bench";
    double total = 0.0;
    for (const BenchRow& r : result.rows) total += r.wall_ms;
    manifest.wall_time_ms = total;
    if (!result.rows.empty()) manifest.level_sizes = result.rows.back().level_sizes;
    nlohmann::json j{{"backend", a.backend}, {"rows", rows}, {"manifest", to_json(manifest)}};
    j["slope"] = result.slope ? nlohmann::json(*result.slope) : nlohmann::json(nullptr);
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "n\twall_ms\tlevels\n";
  for (const BenchRow& r : result.rows) {
    out << r.n << '\t' << fixed4(r.wall_ms) << '\t' << join(r.level_sizes) << '\n';
  }
  if (result.slope) out << "slope: " << fixed4(*result.slope) << '\n';
  return kOk;
}

}  // namespace

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw ValidationError("slope needs at least two (x, y) points");
  }
  const auto m = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

BenchResult run_bench(const BenchOptions& options) {
  BenchResult result;
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t n : options.sizes) {
    SyntheticSpec spec;
    spec.n = n;
    spec.views = options.views;
    spec.dims = {options.dims};
    spec.clusters = options.clusters;
    spec.separation = options.separation;
    spec.noise = options.noise;
    spec.seed = options.seed;
    const MultiViewDataset dataset = generate_synthetic(spec);

    BenchRow row{n, std::numeric_limits<double>::infinity(), {}};
    for (std::size_t r = 0; r < std::max<std::size_t>(1, options.repeats); ++r) {
      const auto start = Clock::now();
      const Hierarchy h = fit(dataset, options.backend);
      row.wall_ms = std::min(row.wall_ms, elapsed_ms(start));
      row.level_sizes = h.level_sizes();
    }
    xs.push_back(static_cast<double>(n));
    ys.push_back(std::max(row.wall_ms, 1e-6));
    result.rows.push_back(std::move(row));
  }
  if (xs.size() >= 2) result.slope = loglog_slope(xs, ys);
  return result;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-view hierarchical clustering", "mhc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  FitArgs fit_args;
  auto* fit_cmd = app.add_subcommand("fit", "Build the full hierarchy of partitions");
  fit_cmd->add_option("--views", fit_args.views, "View files, one per view")->required();
  fit_cmd->add_flag("--header", fit_args.header, "Skip the first line of every view file");
  fit_cmd->add_option("--nn-backend", fit_args.backend, "Nearest-neighbour search")
      ->check(CLI::IsMember({"tree", "exact"}))
      ->capture_default_str();
  fit_cmd->add_option("--out", fit_args.out, "Hierarchy file to write")->required();
  fit_cmd->add_option("--dump-distances", fit_args.dump_distances,
                      "Also write the dense integrated distance matrix (small n only)");

  CutArgs cut_args;
  auto* cut_cmd = app.add_subcommand("cut", "Refine a hierarchy to exactly k clusters");
  cut_cmd->add_option("--hierarchy", cut_args.hierarchy, "Hierarchy file from `mhc fit`")->required();
  cut_cmd->add_option("--views", cut_args.views, "The view files the hierarchy was fitted on")
      ->required();
  cut_cmd->add_flag("--header", cut_args.header, "Skip the first line of every view file");
  cut_cmd->add_option("-k", cut_args.k, "Number of clusters")->required();
  cut_cmd->add_option("--out", cut_args.out, "Label file to write")->required();

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "Score predicted labels against ground truth");
  eval_cmd->add_option("--pred", eval_args.pred, "Predicted labels")->required();
  eval_cmd->add_option("--truth", eval_args.truth, "Ground-truth labels")->required();
  eval_cmd->add_flag("--json", eval_args.json, "Structured output");

  SynthArgs synth_args;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic multi-view dataset");
  synth_cmd->add_option("--n", synth_args.spec.n, "Samples")->capture_default_str();
  synth_cmd->add_option("--views", synth_args.spec.views, "Views")->capture_default_str();
  synth_cmd->add_option("--clusters", synth_args.spec.clusters, "True clusters")
      ->capture_default_str();
  synth_cmd->add_option("--dims", synth_args.spec.dims, "Per-view dimensions, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  synth_cmd->add_option("--separation", synth_args.spec.separation, "Centre separation")
      ->capture_default_str();
  synth_cmd->add_option("--noise", synth_args.spec.noise, "Noise standard deviation")
      ->capture_default_str();
  synth_cmd->add_option("--seed", synth_args.spec.seed, "Random seed")->capture_default_str();
  synth_cmd->add_option("--out-prefix", synth_args.prefix, "Output file prefix")->required();

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Time fit on growing synthetic datasets");
  bench_cmd->add_option("--sizes", bench_args.options.sizes, "Sample counts, ascending")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--nn-backend", bench_args.backend, "Nearest-neighbour search")
      ->check(CLI::IsMember({"tree", "exact"}))
      ->capture_default_str();
  bench_cmd->add_option("--views", bench_args.options.views, "Views")->capture_default_str();
  bench_cmd->add_option("--dims", bench_args.options.dims, "Dimension of every view")
      ->capture_default_str();
  bench_cmd->add_option("--clusters", bench_args.options.clusters, "True clusters")
      ->capture_default_str();
  bench_cmd->add_option("--separation", bench_args.options.separation, "Centre separation")
      ->capture_default_str();
  bench_cmd->add_option("--noise", bench_args.options.noise, "Noise standard deviation")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench_args.options.seed, "Random seed")->capture_default_str();
  bench_cmd->add_option("--repeats", bench_args.options.repeats, "Best-of repeats per size")
      ->capture_default_str();
  bench_cmd->add_flag("--json", bench_args.json, "Structured output");

  std::vector<const char*> argv{"mhc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (fit_cmd->parsed()) return cmd_fit(fit_args, out, err);
    if (cut_cmd->parsed()) return cmd_cut(cut_args, out);
    if (eval_cmd->parsed()) return cmd_eval(eval_args, out);
    if (synth_cmd->parsed()) return cmd_synth(synth_args, out);
    if (bench_cmd->parsed()) return cmd_bench(bench_args, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }
  return kValidation;
}

}  // namespace mhc::cli
