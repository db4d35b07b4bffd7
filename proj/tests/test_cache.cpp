#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ospq/cache.hpp"
#include "ospq/repcore.hpp"

#include <fstream>
#include <random>

using namespace ospq;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("ospq-cache-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("round trip, miss and write-once") {
  TempDir dir;
  const DiskCache cache(dir.path);
  const nlohmann::json params{{"n", 2}, {"x", "a"}};
  CHECK_FALSE(cache.get("thing", params).has_value());
  CHECK(cache.put("thing", params, nlohmann::json{{"value", 1}}));
  REQUIRE(cache.get("thing", params).has_value());
  CHECK((*cache.get("thing", params))["value"] == 1);
  CHECK_FALSE(cache.put("thing", params, nlohmann::json{{"value", 2}}));
  CHECK((*cache.get("thing", params))["value"] == 1);
  CHECK_FALSE(cache.get("thing", nlohmann::json{{"n", 3}, {"x", "a"}}).has_value());
  CHECK_FALSE(cache.get("other", params).has_value());
  CHECK(cache.path_for("thing", params) != cache.path_for("other", params));
}

TEST_CASE("corrupt entries read as misses") {
  TempDir dir;
  const DiskCache cache(dir.path);
  const nlohmann::json params{{"k", 1}};
  {
    std::ofstream out(cache.path_for("thing", params));
    out << "{not json";
  }
  CHECK_FALSE(cache.get("thing", params).has_value());
  {
    std::ofstream out(cache.path_for("thing", params));
    out << nlohmann::json{{"key", "something else"}, {"payload", 1}}.dump();
  }
  CHECK_FALSE(cache.get("thing", params).has_value());
}

TEST_CASE("irreducibles are stored and reproduce the computed module") {
  TempDir dir;
  auto cache = std::make_shared<DiskCache>(dir.path);
  set_global_cache(cache);
  const Weight lambda = Weight::from_ints({2, 1});
  const auto w = irreducible(2, lambda);
  set_global_cache(nullptr);
  const auto stored = cache->get("irrep", nlohmann::json{{"n", 2}, {"lambda", to_json(lambda)}});
  REQUIRE(stored.has_value());
  const Module back = module_from_json(stored->at("module"));
  CHECK(to_json(back) == to_json(w->module));
  CHECK(check_relations(back).pass());
}
