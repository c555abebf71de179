#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cdlat/bitset.hpp"
#include "cdlat/group.hpp"
#include "cdlat/kernels.hpp"

namespace cdlat {

/// Membership bitset over a parent group's elements plus its cached order.
struct Subgroup {
  GroupHash parent;
  Bitset members;
  std::size_t size = 0;

  bool contains(ElementId x) const noexcept { return members.test(x); }
  std::vector<ElementId> elements() const { return members.elements(); }
  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
    return a.parent == b.parent && a.members == b.members;
  }
};

/// Size first, then lexicographic bitset order.
bool canonical_less(const Subgroup& a, const Subgroup& b) noexcept;

inline constexpr std::size_t kDefaultSubgroupCap = 250000;

struct EnumerationOptions {
  std::size_t cap = kDefaultSubgroupCap;
  ExecPolicy policy = ExecPolicy::parallel;
  /// When set, cyclic seeds are processed in a shuffled order (determinism tests).
  std::optional<std::uint64_t> shuffle_seed;
};

/// Every subgroup of a group in canonical order, partitioned into conjugacy classes.
struct SubgroupLattice {
  GroupHash parent;
  std::size_t group_order = 0;
  std::vector<Subgroup> subgroups;
  std::vector<std::vector<std::size_t>> classes;
  /// class_of[i] is the index into `classes` holding subgroup i.
  std::vector<std::size_t> class_of;

  std::size_t size() const noexcept { return subgroups.size(); }
  /// Index of the subgroup with these members, if listed.
  std::optional<std::size_t> find(const Bitset& members) const;
};

Subgroup trivial_subgroup(const Group& g);
Subgroup whole_group(const Group& g);
/// Wraps a bitset after checking it is closed and contains the identity.
Subgroup make_subgroup(const Group& g, Bitset members);
bool is_subgroup(const Group& g, const Bitset& members);

Subgroup generated_subgroup(const Group& g, std::span<const ElementId> seed);
/// Greedy generating set: scan members in increasing id, keep those not yet generated.
std::vector<ElementId> generators_of(const Group& g, const Subgroup& h);

SubgroupLattice all_subgroups(const Group& g, const EnumerationOptions& options = {});

Subgroup centralizer(const Group& g, const Subgroup& h);
Subgroup normalizer(const Group& g, const Subgroup& h);
/// { x^-1 y x : y in h }
Subgroup conjugate_subgroup(const Group& g, const Subgroup& h, ElementId x);
/// Orbits of conjugation on a complete, canonically ordered subgroup list.
std::vector<std::vector<std::size_t>> conjugacy_classes(const Group& g, std::span<const Subgroup> subgroups);

Subgroup meet(const Subgroup& a, const Subgroup& b);
Subgroup join(const Group& g, const Subgroup& a, const Subgroup& b);

/// The subgroup as a group in its own right; members keep increasing-id order, identity first.
Group induced_group(const Group& g, const Subgroup& h);

}  // namespace cdlat
