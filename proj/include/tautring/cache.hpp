#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tautring/fiber.hpp"

namespace tautring {

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

/// Canonical text naming everything that determines a fiber computation:
/// request knobs, ring, order, field and the specialized generators.
std::string request_descriptor(const FiberRequest& request, const std::vector<Polynomial>& generators);

struct CacheEntry {
  std::string key;
  FiberRequest request;
  FiberDimensionRecord record;
  std::string basis_text;  // render_basis() output
};

/// Serialized entry, including a checksum line over the body.
std::string serialize_entry(const CacheEntry& entry);
/// Inverse of serialize_entry; throws UsageError on any mismatch, including
/// a wrong checksum.
CacheEntry parse_entry(std::string_view text);

/// Directory of hash-named entries `<key>.entry`. Writes go to a temporary
/// file in the same directory followed by a rename.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const std::string& key) const;

  /// nullopt on a miss. A damaged entry is removed, `warning` describes it,
  /// and the lookup counts as a miss.
  std::optional<CacheEntry> load(const std::string& key, std::string* warning = nullptr) const;
  void store(const CacheEntry& entry) const;

  /// Serializes work on one key within this process.
  std::unique_lock<std::mutex> lock(const std::string& key);

  struct ScanReport {
    std::size_t entries = 0;
    std::vector<std::string> warnings;
    /// Requests recovered from damaged entries that can be recomputed.
    std::vector<FiberRequest> damaged;
  };
  /// Checks every entry. Damaged ones are removed.
  ScanReport scan() const;

 private:
  std::filesystem::path dir_;
  std::mutex map_mutex_;
  std::map<std::string, std::unique_ptr<std::mutex>> key_mutexes_;
};

}  // namespace tautring
