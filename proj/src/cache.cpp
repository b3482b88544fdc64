#include "gpcalc/cache.hpp"

#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace gpc {

CacheConfig CacheConfig::from_env() {
  CacheConfig cfg;
  cfg.enabled = true;
  if (const char* p = std::getenv("GPCALC_CACHE_DIR"); p && *p) {
    cfg.dir = p;
    return cfg;
  }
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) {
    cfg.dir = std::filesystem::path(x) / "gpcalc";
    return cfg;
  }
  if (const char* h = std::getenv("HOME"); h && *h) {
    cfg.dir = std::filesystem::path(h) / ".cache" / "gpcalc";
    return cfg;
  }
  cfg.enabled = false;  // nowhere sensible to put it
  return cfg;
}

namespace {

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::filesystem::path Cache::path_for(const std::string& key) const {
  std::ostringstream os;
  os << std::hex << fnv1a64(key) << ".json";
  return cfg_.dir / os.str();
}

std::optional<nlohmann::json> Cache::get(const std::string& key) const {
  if (!cfg_.enabled) return std::nullopt;
  try {
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    if (!j.contains("key") || !j["key"].is_string() || j["key"].get<std::string>() != key)
      return std::nullopt;  // hash collision or stale format
    if (!j.contains("data")) return std::nullopt;
    return j["data"];
  } catch (...) {
    return std::nullopt;
  }
}

void Cache::put(const std::string& key, const nlohmann::json& data) const {
  if (!cfg_.enabled) return;
  try {
    std::filesystem::create_directories(cfg_.dir);
    nlohmann::json j;
    j["key"] = key;
    j["data"] = data;
    auto final_path = path_for(key);
    static int counter = 0;
    std::ostringstream tmp;
    tmp << ".tmp-" << ::getpid() << "-" << counter++;
    auto tmp_path = cfg_.dir / tmp.str();
    {
      std::ofstream out(tmp_path);
      if (!out) return;
      out << j.dump();
      if (!out.good()) {
        out.close();
        std::filesystem::remove(tmp_path);
        return;
      }
    }
    std::filesystem::rename(tmp_path, final_path);  // atomic within the directory
  } catch (...) {
    // a broken cache must never break the computation
  }
}

}  // namespace gpc
