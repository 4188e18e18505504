#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>

#include "socle/groebner.hpp"

namespace socle {

std::string sha256_hex(std::string_view data);

/// Content-addressed memo of reduced Gröbner bases.
///
/// The key is the ring id (field, variables, order) followed by the sorted,
/// deduplicated monic generators. Entries are write-once in memory. When a
/// directory is configured, bases are also stored as `<sha256(key)>.gb`
/// files holding the canonical text of the basis plus its hash; a file whose
/// header or hash does not check out is ignored and recomputed. Files are
/// written to a temporary name and renamed into place.
class GbCache {
 public:
  struct Stats {
    std::size_t memory_hits = 0;
    std::size_t disk_hits = 0;
    std::size_t computed = 0;
    std::size_t rejected_files = 0;
  };

  /// Process-wide instance. The disk directory starts as $SOCLE_LAB_CACHE_DIR
  /// when that variable is set and non-empty.
  static GbCache& global();

  GbCache() = default;
  GbCache(const GbCache&) = delete;
  GbCache& operator=(const GbCache&) = delete;

  void set_disk_directory(std::optional<std::filesystem::path> dir);
  std::optional<std::filesystem::path> disk_directory() const;

  std::shared_ptr<const GroebnerBasis> get_or_compute(std::span<const Polynomial> gens, const PolyRingPtr& ring,
                                                      const std::function<GroebnerBasis()>& compute);

  static std::string canonical_key(std::span<const Polynomial> gens, const PolyRing& ring);

  std::filesystem::path entry_path(const std::string& key) const;

  void clear_memory();
  Stats stats() const;

 private:
  std::shared_ptr<const GroebnerBasis> load(const std::string& key, const PolyRingPtr& ring);
  void store(const std::string& key, const GroebnerBasis& basis) const;

  mutable std::mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<const GroebnerBasis>> memory_;
  std::optional<std::filesystem::path> dir_;
  Stats stats_;
};

}  // namespace socle
