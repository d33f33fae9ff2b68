#pragma once

#include <filesystem>
#include <optional>

#include "serialize.hpp"

namespace ghl::app {

inline constexpr const char* kEngineVersion = "ghl-engine-1";

std::uint64_t fnv1a64(std::string_view s);

/// Content key of one (co)homology job.
std::string job_key(const FiniteGroup& g, const GModule& a, const std::string& theory, int degree);

/* JSON files <key>.json under one directory; writes go through a temp file and rename. */
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir, bool enabled = true);
  /// GHL_CACHE_DIR or .ghl-cache.
  static std::filesystem::path default_dir();

  bool enabled() const { return enabled_; }
  const std::filesystem::path& dir() const { return dir_; }

  std::optional<json> get(const std::string& key) const;
  void put(const std::string& key, const json& record) const;

  struct Stats {
    std::size_t entries = 0, bytes = 0, stale = 0;
  };
  Stats stats() const;
  /// Drops temp leftovers, unreadable files and entries of other engine versions; returns files removed.
  std::size_t gc() const;

 private:
  std::filesystem::path dir_;
  bool enabled_;
};

}  // namespace ghl::app
