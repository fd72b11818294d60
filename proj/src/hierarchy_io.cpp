#include "mhc/hierarchy_io.hpp"

#include "mhc/io.hpp"

namespace mhc {

namespace {
constexpr const char* kFormat = "mhc-hierarchy";
}  // namespace

RunManifest make_manifest(std::string command, std::span<const std::filesystem::path> view_paths) {
  RunManifest m;
  m.command = std::move(command);
  for (std::size_t i = 0; i < view_paths.size(); ++i) {
    add_digest(m, "view" + std::to_string(i + 1), view_paths[i]);
  }
  return m;
}

void add_digest(RunManifest& manifest, const std::string& role, const std::filesystem::path& path) {
  manifest.input_digests[role] = io::sha256_hex(io::read_file(path));
}

std::vector<std::string> view_digests(const RunManifest& manifest) {
  std::vector<std::string> out;
  for (std::size_t i = 1;; ++i) {
    const auto it = manifest.input_digests.find("view" + std::to_string(i));
    if (it == manifest.input_digests.end()) return out;
    out.push_back(it->second);
  }
}

nlohmann::json to_json(const RunManifest& manifest) {
  nlohmann::json j;
  j["command"] = manifest.command;
  j["tool_version"] = manifest.tool_version;
  j["input_digests"] = manifest.input_digests;
  if (manifest.wall_time_ms) j["wall_time_ms"] = *manifest.wall_time_ms;
  j["level_sizes"] = manifest.level_sizes;
  return j;
}

RunManifest manifest_from_json(const nlohmann::json& j) {
  RunManifest m;
  m.command = j.at("command").get<std::string>();
  m.tool_version = j.at("tool_version").get<std::string>();
  m.input_digests = j.at("input_digests").get<std::map<std::string, std::string>>();
  if (j.contains("wall_time_ms")) m.wall_time_ms = j["wall_time_ms"].get<double>();
  m.level_sizes = j.at("level_sizes").get<std::vector<std::size_t>>();
  return m;
}

nlohmann::json hierarchy_to_json(const Hierarchy& hierarchy, const RunManifest& manifest) {
  nlohmann::json j;
  j["format"] = kFormat;
  j["tool_version"] = kVersion;
  j["n"] = hierarchy.num_samples();
  j["v"] = hierarchy.num_views();
  j["level_sizes"] = hierarchy.level_sizes();
  nlohmann::json levels = nlohmann::json::array();
  for (const Level& level : hierarchy.levels()) {
    levels.push_back({
        {"clusters", level.partition.num_clusters()},
        {"assignment", level.partition.assignment()},
        {"link_distance",
         {{"min", level.links.min}, {"mean", level.links.mean}, {"max", level.links.max}}},
    });
  }
  j["levels"] = std::move(levels);
  j["manifest"] = to_json(manifest);
  return j;
}

LoadedHierarchy hierarchy_from_json(const nlohmann::json& j) {
  try {
    if (j.at("format").get<std::string>() != kFormat) {
      throw ValidationError("not an mhc hierarchy document");
    }
    const auto n = j.at("n").get<std::size_t>();
    const auto v = j.at("v").get<std::size_t>();
    std::vector<Level> levels;
    for (const auto& entry : j.at("levels")) {
      Level level{Partition(entry.at("assignment").get<LabelVector>()), {}};
      if (level.partition.num_clusters() != entry.at("clusters").get<std::size_t>()) {
        throw ValidationError("hierarchy level cluster count disagrees with its assignment");
      }
      const auto& links = entry.at("link_distance");
      level.links = {links.at("min").get<double>(), links.at("mean").get<double>(),
                     links.at("max").get<double>()};
      levels.push_back(std::move(level));
    }
    Hierarchy hierarchy(n, v, std::move(levels));
    if (hierarchy.level_sizes() != j.at("level_sizes").get<std::vector<std::size_t>>()) {
      throw ValidationError("hierarchy level_sizes disagree with its levels");
    }
    return {std::move(hierarchy), manifest_from_json(j.at("manifest"))};
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed hierarchy document: ") + e.what());
  }
}

void write_hierarchy_file(const std::filesystem::path& path, const Hierarchy& hierarchy,
                          const RunManifest& manifest) {
  io::write_file_atomic(path, hierarchy_to_json(hierarchy, manifest).dump() + "\n");
}

LoadedHierarchy read_hierarchy_file(const std::filesystem::path& path) {
  const std::string text = io::read_file(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
  return hierarchy_from_json(j);
}

}  // namespace mhc
