#include "cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace ghl::app {

namespace fs = std::filesystem;

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string job_key(const FiniteGroup& g, const GModule& a, const std::string& theory, int degree) {
  json j{{"engine", kEngineVersion},
         {"table", g.table()},
         {"module", module_to_json(a)},
         {"theory", theory},
         {"degree", degree}};
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << fnv1a64(j.dump());
  return os.str();
}

ResultCache::ResultCache(fs::path dir, bool enabled) : dir_(std::move(dir)), enabled_(enabled) {}

fs::path ResultCache::default_dir() {
  const char* env = std::getenv("GHL_CACHE_DIR");
  return env && *env ? fs::path(env) : fs::path(".ghl-cache");
}

namespace {

std::optional<json> read_entry(const fs::path& p) {
  std::ifstream in(p);
  if (!in) return std::nullopt;
  try {
    return json::parse(in);
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

bool is_temp(const fs::path& p) { return p.filename().string().find(".tmp") != std::string::npos; }

}  // namespace

std::optional<json> ResultCache::get(const std::string& key) const {
  if (!enabled_) return std::nullopt;
  auto e = read_entry(dir_ / (key + ".json"));
  if (!e || !e->is_object() || e->value("engine", "") != kEngineVersion || e->value("key", "") != key)
    return std::nullopt;
  return e->at("record");
}

void ResultCache::put(const std::string& key, const json& record) const {
  if (!enabled_) return;
  static std::atomic<unsigned> counter{0};
  fs::create_directories(dir_);
  fs::path tmp = dir_ / (key + ".json.tmp" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  {
    std::ofstream out(tmp);
    out << json{{"key", key}, {"engine", kEngineVersion}, {"record", record}}.dump() << '\n';
    if (!out) throw Error("cannot write cache entry " + tmp.string());
  }
  fs::rename(tmp, dir_ / (key + ".json"));
}

ResultCache::Stats ResultCache::stats() const {
  Stats s;
  if (!fs::exists(dir_)) return s;
  for (auto& f : fs::directory_iterator(dir_)) {
    if (!f.is_regular_file()) continue;
    ++s.entries;
    s.bytes += f.file_size();
    auto e = read_entry(f.path());
    if (is_temp(f.path()) || !e || !e->is_object() || e->value("engine", "") != kEngineVersion) ++s.stale;
  }
  return s;
}

std::size_t ResultCache::gc() const {
  std::size_t removed = 0;
  if (!fs::exists(dir_)) return 0;
  std::vector<fs::path> drop;
  for (auto& f : fs::directory_iterator(dir_)) {
    if (!f.is_regular_file()) continue;
    auto e = read_entry(f.path());
    if (is_temp(f.path()) || !e || !e->is_object() || e->value("engine", "") != kEngineVersion) drop.push_back(f.path());
  }
  for (auto& p : drop) removed += fs::remove(p) ? 1 : 0;
  return removed;
}

}  // namespace ghl::app
