#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "mhc/hierarchy.hpp"

namespace mhc {

/// Provenance attached to structured outputs.
///
/// Digests are SHA-256 of the raw input bytes, keyed by role ("view1",
/// "view2", ..., "labels", "pred", "truth"). Wall time is machine-dependent,
/// so it is left out of hierarchy files to keep them bit-stable.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> input_digests;
  std::string tool_version = kVersion;
  std::optional<double> wall_time_ms;
  std::vector<std::size_t> level_sizes;
};

/// Digests for "view1".."viewN" from `view_paths`.
RunManifest make_manifest(std::string command, std::span<const std::filesystem::path> view_paths);

/// Adds the digest of `path` under `role`.
void add_digest(RunManifest& manifest, const std::string& role, const std::filesystem::path& path);

/// The "viewN" entries only, in view order.
std::vector<std::string> view_digests(const RunManifest& manifest);

nlohmann::json to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const nlohmann::json& j);

/// Fields: format, tool_version, n, v, level_sizes, levels (clusters,
/// assignment, link_distance {min, mean, max}) and manifest.
nlohmann::json hierarchy_to_json(const Hierarchy& hierarchy, const RunManifest& manifest);

struct LoadedHierarchy {
  Hierarchy hierarchy;
  RunManifest manifest;
};

/// Parses and re-validates a hierarchy document. Throws ValidationError on
/// malformed content.
LoadedHierarchy hierarchy_from_json(const nlohmann::json& j);

void write_hierarchy_file(const std::filesystem::path& path, const Hierarchy& hierarchy,
                          const RunManifest& manifest);
LoadedHierarchy read_hierarchy_file(const std::filesystem::path& path);

}  // namespace mhc
