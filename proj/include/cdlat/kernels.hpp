#pragma once

// Hot loops of the toolkit. Each kernel has a serial reference and an OpenMP
// variant; both return identical results and the tests compare them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cdlat/bitset.hpp"
#include "cdlat/group.hpp"

namespace cdlat {

enum class ExecPolicy { serial, parallel };

/// True when the library was compiled with OpenMP.
bool openmp_enabled() noexcept;

namespace kernels {

/// A subgroup under construction: members, their ids, and the generators used.
struct Closure {
  Bitset members;
  std::vector<ElementId> elements;
  std::vector<ElementId> generators;

  static Closure trivial(const Group& g);
};

/// Adds x to the closure by right-coset extension (Dimino). No-op if x is present.
void extend(const Group& g, Closure& c, ElementId x);

/// One generator per distinct cyclic subgroup (the smallest id generating it),
/// ordered by cyclic subgroup size then id.
std::vector<ElementId> cyclic_seed_generators(const Group& g);

struct EnumerationResult {
  std::vector<Bitset> subgroups;  // unordered
};

/// Closes {1} under joins with cyclic subgroups to a fixed point.
/// Throws Explosion once more than `cap` subgroups are found.
EnumerationResult enumerate_subgroups_serial(const Group& g, std::span<const ElementId> seeds, std::size_t cap);
EnumerationResult enumerate_subgroups_omp(const Group& g, std::span<const ElementId> seeds, std::size_t cap);

/// cent[x] = C_G(x) as a bitset.
std::vector<Bitset> element_centralizers(const Group& g);

/// |C_G(H)| for each H, using a generating set of H.
std::vector<std::size_t> centralizer_orders_serial(const Group& g, std::span<const Bitset> subgroups);
std::vector<std::size_t> centralizer_orders_omp(const Group& g, std::span<const Bitset> subgroups);

}  // namespace kernels
}  // namespace cdlat
