#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cdlat/group.hpp"
#include "cdlat/numtheory.hpp"
#include "cdlat/subgroup.hpp"

namespace cdlat {

Subgroup center(const Group& g);

/// Subgroup generated by every [x,y] with x in a, y in b.
Subgroup commutator_subgroup(const Group& g, const Subgroup& a, const Subgroup& b);

/// K_1 = G, K_{i+1} = [K_i, G], iterated until the terms stop shrinking.
struct LowerCentralSeries {
  std::vector<Subgroup> terms;
  bool nilpotent = false;
  /// Defined only when nilpotent; 0 for the trivial group.
  std::optional<std::size_t> nilpotency_class;

  /// K_i with 1-based index; past the end this is the last (stable) term.
  const Subgroup& term(std::size_t i) const;
};

LowerCentralSeries lower_central_series(const Group& g);
bool is_nilpotent(const Group& g);

/// Non-abelian of order p^n with nilpotency class n-1.
bool is_maximal_class(const Group& g);

/// C_G(K_i/K_{i+2}) = { x : [x,y] in K_{i+2} for all y in K_i }, for 2 <= i <= n-2, |G| = p^n.
Subgroup section_centralizer(const Group& g, std::size_t i);

struct UniformElements {
  std::vector<ElementId> elements;
  /// False when the group is not of maximal class; the literal definition was applied anyway.
  bool maximal_class_context = false;
};

/// Elements outside every section centralizer, i = 2..n-2. Throws on non-p-groups.
UniformElements uniform_elements(const Group& g);
bool has_uniform_of_order_p(const Group& g);

/// First abelian subgroup of index p in canonical order, if any. Throws on non-p-groups.
std::optional<Subgroup> abelian_maximal_subgroup(const Group& g, const SubgroupLattice& lattice);
std::optional<Subgroup> abelian_maximal_subgroup(const Group& g);

bool is_abelian_subgroup(const Group& g, const Subgroup& h);

/// Sylow subgroups of a nilpotent group in increasing prime order.
/// Throws InvalidState when g is not nilpotent.
std::vector<Subgroup> sylow_decomposition(const Group& g);

}  // namespace cdlat
