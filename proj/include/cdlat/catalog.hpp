#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdlat/spec.hpp"

namespace cdlat {

enum class Provenance { published, derived };

/// An exact im_count recorded for a catalog group, with where it comes from.
struct Expectation {
  std::size_t im_count = 0;
  Provenance provenance = Provenance::derived;
  /// Required for published values: the published result the value restates.
  std::string citation;
};

struct CatalogEntry {
  std::string name;
  GroupSpec spec;
  std::optional<Expectation> expected;
  std::vector<std::string> tags;

  bool has_tag(std::string_view t) const;
};

/// Fixed registry of every group the verification claims run over.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_catalog_entry(std::string_view name);
std::vector<const CatalogEntry*> catalog_with_tag(std::string_view tag);

}  // namespace cdlat
