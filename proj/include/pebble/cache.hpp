#pragma once

// Append-only JSON-lines store of computed numbers, keyed by the family string
// of the evaluated graph expression plus the query kind.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pebble/distribution.hpp"

namespace pebble {

inline constexpr const char* engine_version = "pebble-1.0";

struct CacheRecord {
  std::string key;
  std::uint64_t value = 0;
  std::optional<std::vector<Count>> witness;
  std::uint64_t checked = 0;
  std::string engine_version;
};

/// "number|<family>|root=<label or *>|t=<t>"
inline std::string cache_key(const std::string& query, const std::string& family, const std::string& root,
                             std::uint64_t t) {
  return query + "|" + family + "|root=" + root + "|t=" + std::to_string(t);
}

class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path, std::string version = engine_version)
      : path_(std::move(path)), version_(std::move(version)) {
    load();
  }

  /// Path from the flag if given, else PEBBLE_CACHE, else none.
  static std::optional<std::filesystem::path> resolve_path(const std::string& flag) {
    if (!flag.empty()) return std::filesystem::path(flag);
    if (const char* env = std::getenv("PEBBLE_CACHE"); env && *env) return std::filesystem::path(env);
    return std::nullopt;
  }

  std::optional<CacheRecord> lookup(const std::string& key) const {
    auto it = records_.find(key);
    if (it == records_.end()) return std::nullopt;
    return it->second;
  }

  /// Records are immutable: a key that is already present is left alone.
  void store(CacheRecord rec) {
    rec.engine_version = version_;
    if (records_.count(rec.key)) return;
    std::ofstream out(path_, std::ios::app);
    if (!out) {
      std::clog << "warning: cannot write cache " << path_ << "\n";
    } else {
      out << to_json(rec).dump() << "\n";
    }
    records_.emplace(rec.key, std::move(rec));
  }

  std::size_t size() const { return records_.size(); }
  const std::filesystem::path& path() const { return path_; }

 private:
  static nlohmann::json to_json(const CacheRecord& r) {
    nlohmann::json j{{"key", r.key}, {"value", r.value}, {"checked", r.checked}, {"engine_version", r.engine_version}};
    if (r.witness) j["witness"] = *r.witness;
    return j;
  }

  static CacheRecord from_json(const nlohmann::json& j) {
    CacheRecord r;
    r.key = j.at("key").get<std::string>();
    r.value = j.at("value").get<std::uint64_t>();
    r.checked = j.at("checked").get<std::uint64_t>();
    r.engine_version = j.at("engine_version").get<std::string>();
    if (j.contains("witness")) r.witness = j.at("witness").get<std::vector<Count>>();
    return r;
  }

  void load() {
    std::ifstream in(path_);
    if (!in) return;
    std::vector<std::string> kept;
    bool corrupt = false;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      try {
        CacheRecord r = from_json(nlohmann::json::parse(line));
        kept.push_back(line);
        if (r.engine_version == version_) records_.emplace(r.key, std::move(r));
      } catch (const std::exception&) {
        corrupt = true;
      }
    }
    in.close();
    if (!corrupt) return;
    std::clog << "warning: corrupt entries in cache " << path_ << " ignored; rebuilding\n";
    std::ofstream out(path_, std::ios::trunc);
    for (const auto& l : kept) out << l << "\n";
  }

  std::filesystem::path path_;
  std::string version_;
  std::map<std::string, CacheRecord> records_;
};

}  // namespace pebble
