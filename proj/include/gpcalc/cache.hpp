#pragma once

// Small content-addressed result store. Keys are arbitrary strings; the full
// key is echoed inside the file and verified on read, so hash collisions and
// truncated writes degrade to cache misses, never to wrong answers.

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

namespace gpc {

struct CacheConfig {
  bool enabled = false;
  std::filesystem::path dir;

  static CacheConfig disabled() { return {}; }
  // GPCALC_CACHE_DIR, else $XDG_CACHE_HOME/gpcalc, else $HOME/.cache/gpcalc.
  static CacheConfig from_env();
};

class Cache {
 public:
  explicit Cache(CacheConfig cfg) : cfg_(std::move(cfg)) {}

  bool enabled() const { return cfg_.enabled; }

  std::optional<nlohmann::json> get(const std::string& key) const;
  // best effort: write failures are swallowed, the result is just not cached
  void put(const std::string& key, const nlohmann::json& data) const;

 private:
  std::filesystem::path path_for(const std::string& key) const;
  CacheConfig cfg_;
};

}  // namespace gpc
