#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include "cdlat/group.hpp"
#include "cdlat/subgroup.hpp"

namespace cdlat {

inline constexpr int kCacheVersion = 1;

/// $CDLAT_CACHE if set, otherwise ".cdlat-cache" in the working directory.
std::filesystem::path default_cache_dir();

struct CacheStats {
  std::size_t entries = 0;
  std::size_t bytes = 0;
};

/// On-disk store of subgroup lattices keyed by group hash, one JSON file per group.
class LatticeCache {
 public:
  explicit LatticeCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path path_for(const GroupHash& hash) const;

  /// The cached lattice of g, only on an exact version and hash match.
  /// Corrupt files produce a warning on stderr and are treated as absent.
  std::optional<SubgroupLattice> get(const Group& g) const;
  /// Atomic: writes a temporary file in the same directory, then renames it.
  void put(const SubgroupLattice& lattice) const;

  CacheStats stats() const;
  /// Removes unreadable entries, entries of another version and stray temporaries. Returns the count removed.
  std::size_t gc() const;

 private:
  std::filesystem::path dir_;
};

}  // namespace cdlat
