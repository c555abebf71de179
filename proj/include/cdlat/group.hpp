#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cdlat {

using ElementId = std::uint32_t;

/// Groups of larger order are refused unless the caller raises the guard.
inline constexpr std::size_t kDefaultMaxOrder = 5000;
/// Associativity is checked on every triple up to this order, sampled above it.
inline constexpr std::size_t kExhaustiveAssociativityOrder = 256;
inline constexpr std::size_t kAssociativitySamples = 1000;

/// SHA-256 of the canonical serialization of a Cayley table.
struct GroupHash {
  std::array<std::uint8_t, 32> digest{};

  std::string hex() const;
  static bool from_hex(const std::string& hex, GroupHash& out);
  friend auto operator<=>(const GroupHash&, const GroupHash&) = default;
};

struct GroupHashHasher {
  std::size_t operator()(const GroupHash& h) const noexcept {
    std::size_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | h.digest[i];
    return v;
  }
};

struct BuildLimits {
  std::size_t max_order = kDefaultMaxOrder;
};

/// Immutable finite group stored as a Cayley table over dense ids 0..n-1.
/// The identity is always id 0.
class Group {
 public:
  /// Validates every group axiom and throws InvalidParameter on failure.
  static Group from_table(std::size_t order, std::vector<ElementId> table, std::string label = {});

  std::size_t order() const noexcept { return order_; }
  static constexpr ElementId identity() noexcept { return 0; }

  ElementId mul(ElementId x, ElementId y) const noexcept { return table_[static_cast<std::size_t>(x) * order_ + y]; }
  ElementId inv(ElementId x) const noexcept { return inv_[x]; }
  std::uint32_t element_order(ElementId x) const noexcept { return elt_order_[x]; }
  ElementId pow(ElementId x, std::uint64_t k) const noexcept;
  /// x^-1 y x
  ElementId conj(ElementId y, ElementId x) const noexcept { return mul(mul(inv_[x], y), x); }
  /// [x,y] = x^-1 y^-1 x y
  ElementId commutator(ElementId x, ElementId y) const noexcept { return mul(mul(inv_[x], inv_[y]), mul(x, y)); }

  std::span<const ElementId> row(ElementId x) const noexcept {
    return {table_.data() + static_cast<std::size_t>(x) * order_, order_};
  }
  const std::vector<ElementId>& table() const noexcept { return table_; }
  const std::vector<ElementId>& inverses() const noexcept { return inv_; }
  const std::vector<std::uint32_t>& element_orders() const noexcept { return elt_order_; }

  bool is_abelian() const noexcept { return abelian_; }
  const GroupHash& hash() const noexcept { return hash_; }
  const std::string& label() const noexcept { return label_; }
  /// Same table under a different display label; the hash is unaffected.
  Group with_label(std::string label) const {
    Group g = *this;
    g.label_ = std::move(label);
    return g;
  }

  /// 8-byte little-endian order, then the table row-major as 4-byte little-endian ids.
  std::vector<std::uint8_t> canonical_bytes() const;

 private:
  Group() = default;

  std::size_t order_ = 0;
  std::vector<ElementId> table_;
  std::vector<ElementId> inv_;
  std::vector<std::uint32_t> elt_order_;
  bool abelian_ = false;
  GroupHash hash_;
  std::string label_;
};

GroupHash hash_bytes(std::span<const std::uint8_t> bytes);

/// Image list: p[i] is the image of point i.
using Permutation = std::vector<std::uint32_t>;

Group make_cyclic(std::uint64_t n, const BuildLimits& limits = {});
/// Direct product C_{d1} x ... x C_{dk}; the empty list gives the trivial group.
Group make_abelian(std::span<const std::uint64_t> type, const BuildLimits& limits = {});
/// D_{2n} of order two_n. a^i has id i, a^i b has id n+i.
Group make_dihedral(std::uint64_t two_n, const BuildLimits& limits = {});
/// Dicyclic group of order four_m (generalized quaternion at 2-powers).
/// a^i x^j has id i + 2m*j with a^{2m} = 1, x^2 = a^m, x^-1 a x = a^-1.
Group make_dicyclic(std::uint64_t four_m, const BuildLimits& limits = {});
/// C_m x| C_n with b^-1 a b = a^r; a^i b^j has id i + m*j.
Group make_semidirect_cyclic(std::uint64_t m, std::uint64_t n, std::uint64_t r, const BuildLimits& limits = {});
/// (x,y) has id x*|h| + y.
Group direct_product(const Group& g, const Group& h, const BuildLimits& limits = {});
/// Closure of the generators under composition; products apply the left factor first.
Group from_permutations(std::uint32_t degree, std::span<const Permutation> generators, const BuildLimits& limits = {},
                        std::string label = {});
/// F_p^m x| C_p, the generator acting as a single unipotent Jordan block.
Group make_jordan_p_group(std::uint64_t p, std::uint64_t m, const BuildLimits& limits = {});
Group make_symmetric(std::uint32_t degree, const BuildLimits& limits = {});
Group make_alternating(std::uint32_t degree, const BuildLimits& limits = {});

/// Build a permutation of `degree` points from disjoint cycles.
Permutation permutation_from_cycles(std::uint32_t degree, const std::vector<std::vector<std::uint32_t>>& cycles);

}  // namespace cdlat
