#pragma once

// Write-once on-disk cache of JSON payloads keyed by (schema version, kind, parameters).

#include <nlohmann/json.hpp>

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

namespace ospq {

class DiskCache {
 public:
  static constexpr int schema_version = 1;

  explicit DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& directory() const { return dir_; }
  std::filesystem::path path_for(const std::string& kind, const nlohmann::json& params) const;

  /// Stored payload, or nullopt on a miss. Unreadable or mismatching entries count as misses
  /// (with a warning on stderr).
  std::optional<nlohmann::json> get(const std::string& kind, const nlohmann::json& params) const;
  /// Atomic write-temp-rename; returns false without touching the file when the key exists.
  bool put(const std::string& kind, const nlohmann::json& params, const nlohmann::json& payload) const;

 private:
  std::filesystem::path dir_;
};

/// Process-wide cache used by memoized constructions; null disables disk caching.
std::shared_ptr<DiskCache> global_cache();
void set_global_cache(std::shared_ptr<DiskCache> cache);
/// Cache from the OSPQ_CACHE_DIR environment variable, or null when unset.
std::shared_ptr<DiskCache> cache_from_environment();

}  // namespace ospq
