#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "cdlat/cache.hpp"
#include "cdlat/group.hpp"
#include "cdlat/measure.hpp"
#include "cdlat/spec.hpp"
#include "cdlat/subgroup.hpp"

namespace cdlat {

struct WorkspaceOptions {
  BuildLimits limits;
  std::size_t subgroup_cap = kDefaultSubgroupCap;
  ExecPolicy policy = ExecPolicy::parallel;
  /// Lattices are read from and written to this directory when set.
  std::optional<std::filesystem::path> cache_dir;
};

/// Memoizes groups, lattices and spectra so verification claims sharing a group compute it once.
/// Returned references stay valid for the lifetime of the workspace.
class Workspace {
 public:
  explicit Workspace(WorkspaceOptions options = {});

  const WorkspaceOptions& options() const noexcept { return options_; }

  const Group& group(const GroupSpec& spec);
  const Group& group(const std::string& text) { return group(parse_spec(text)); }
  const SubgroupLattice& lattice(const Group& g);
  const SpectrumReport& spectrum(const Group& g);
  std::size_t im_count(const Group& g) { return spectrum(g).im_count; }

 private:
  WorkspaceOptions options_;
  std::optional<LatticeCache> cache_;
  std::mutex mutex_;
  std::map<std::string, std::unique_ptr<Group>> groups_;
  std::map<GroupHash, std::unique_ptr<SubgroupLattice>> lattices_;
  std::map<GroupHash, std::unique_ptr<SpectrumReport>> spectra_;
};

}  // namespace cdlat
