#include "ospq/cache.hpp"

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace ospq {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string key_text(const std::string& kind, const nlohmann::json& params) {
  return nlohmann::json{{"schema", DiskCache::schema_version}, {"kind", kind}, {"params", params}}.dump();
}

std::mutex g_mutex;
std::shared_ptr<DiskCache> g_cache;

}  // namespace

std::filesystem::path DiskCache::path_for(const std::string& kind, const nlohmann::json& params) const {
  std::ostringstream name;
  name << kind << "-" << std::hex << fnv1a(key_text(kind, params)) << ".json";
  return dir_ / name.str();
}

std::optional<nlohmann::json> DiskCache::get(const std::string& kind, const nlohmann::json& params) const {
  const auto path = path_for(kind, params);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    nlohmann::json entry = nlohmann::json::parse(in);
    if (entry.at("key").get<std::string>() != key_text(kind, params)) {
      std::cerr << "warning: cache entry " << path << " has a different key; ignoring\n";
      return std::nullopt;
    }
    return entry.at("payload");
  } catch (const std::exception& e) {
    std::cerr << "warning: corrupt cache entry " << path << " (" << e.what() << "); ignoring\n";
    return std::nullopt;
  }
}

bool DiskCache::put(const std::string& kind, const nlohmann::json& params, const nlohmann::json& payload) const {
  static std::mutex write_mutex;
  std::lock_guard<std::mutex> lock(write_mutex);
  const auto path = path_for(kind, params);
  std::error_code ec;
  if (std::filesystem::exists(path, ec)) return false;
  std::filesystem::create_directories(dir_, ec);
  static std::atomic<unsigned> counter{0};
  std::ostringstream tmp_name;
  tmp_name << path.filename().string() << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "."
           << counter++;
  const auto tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp);
    if (!out) return false;
    out << nlohmann::json{{"key", key_text(kind, params)}, {"payload", payload}}.dump();
    if (!out) return false;
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    return false;
  }
  return true;
}

std::shared_ptr<DiskCache> global_cache() {
  std::lock_guard<std::mutex> lock(g_mutex);
  return g_cache;
}

void set_global_cache(std::shared_ptr<DiskCache> cache) {
  std::lock_guard<std::mutex> lock(g_mutex);
  g_cache = std::move(cache);
}

std::shared_ptr<DiskCache> cache_from_environment() {
  const char* dir = std::getenv("OSPQ_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return nullptr;
  return std::make_shared<DiskCache>(dir);
}

}  // namespace ospq
