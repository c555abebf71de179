#include "cdlat/workspace.hpp"

#include <iostream>

#include "cdlat/errors.hpp"

namespace cdlat {

Workspace::Workspace(WorkspaceOptions options) : options_(std::move(options)) {
  if (options_.cache_dir) cache_.emplace(*options_.cache_dir);
}

const Group& Workspace::group(const GroupSpec& spec) {
  std::string key = render(spec);
  {
    std::lock_guard lock(mutex_);
    if (auto it = groups_.find(key); it != groups_.end()) return *it->second;
  }
  auto g = std::make_unique<Group>(build(spec, options_.limits));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = groups_.emplace(std::move(key), std::move(g));
  return *it->second;
}

const SubgroupLattice& Workspace::lattice(const Group& g) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = lattices_.find(g.hash()); it != lattices_.end()) return *it->second;
  }
  std::optional<SubgroupLattice> lat;
  if (cache_) lat = cache_->get(g);
  if (!lat) {
    EnumerationOptions opts;
    opts.cap = options_.subgroup_cap;
    opts.policy = options_.policy;
    lat = all_subgroups(g, opts);
    if (cache_) {
      try {
        cache_->put(*lat);
      } catch (const Error& e) {
        std::cerr << "cdlat: warning: " << e.what() << "\n";
      }
    }
  }
  std::lock_guard lock(mutex_);
  auto [it, inserted] = lattices_.emplace(g.hash(), std::make_unique<SubgroupLattice>(std::move(*lat)));
  return *it->second;
}

const SpectrumReport& Workspace::spectrum(const Group& g) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = spectra_.find(g.hash()); it != spectra_.end()) return *it->second;
  }
  auto rep = std::make_unique<SpectrumReport>(cdlat::spectrum(g, lattice(g), options_.policy));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = spectra_.emplace(g.hash(), std::move(rep));
  return *it->second;
}

}  // namespace cdlat
