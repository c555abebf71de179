#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cdlat/spec.hpp"
#include "cdlat/workspace.hpp"

namespace cdlat::props {

struct PropertyTally {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  /// First few failure descriptions.
  std::vector<std::string> notes;
  /// Instances drawn at random, as opposed to fixed sweeps.
  bool randomized = true;

  void record(bool ok, const std::string& what);
  bool ok() const noexcept { return failures == 0; }
};

struct SuiteResult {
  std::vector<PropertyTally> properties;

  std::size_t randomized_instances() const;
  bool ok() const;
};

/// Random group specification from the catalog constructors, order at most max_order.
GroupSpec random_spec(std::mt19937_64& rng, std::uint64_t max_order);

PropertyTally check_conjugation_invariance(Workspace& ws, std::mt19937_64& rng, std::size_t draws);
/// m_{HxK}(A x B) = m_H(A) m_K(B) over all subgroup pairs of random H x K of order at most 24.
PropertyTally check_product_law(Workspace& ws, std::mt19937_64& rng, std::size_t draws);
PropertyTally check_im_count_nontrivial(Workspace& ws, std::mt19937_64& rng, std::size_t draws);
/// im_count <= (subgroup conjugacy classes) - 1 for non-abelian groups.
PropertyTally check_class_count_bound(Workspace& ws, std::mt19937_64& rng, std::size_t draws);
PropertyTally check_cd_closure(Workspace& ws, std::mt19937_64& rng, std::size_t draws);
/// im_count(H x K) = im_count(H) im_count(K) for coprime orders, and >= im(H)+im(K)-1 in general.
PropertyTally check_product_counts(Workspace& ws, std::mt19937_64& rng, std::size_t draws);
/// Minimum and maximum measure characterizations on non-abelian catalog p-groups
/// (p=2 with k in 4..7, p=3 with k=4).
PropertyTally check_pgroup_extremes(Workspace& ws);
/// |C_G(s)| = p^2 for every uniform s of every maximal-class catalog group with k >= 4.
PropertyTally check_uniform_centralizers(Workspace& ws);

SuiteResult run_property_suite(Workspace& ws, std::uint64_t seed, std::size_t draws_per_property);

}  // namespace cdlat::props
