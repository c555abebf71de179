#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cdlat/group.hpp"
#include "cdlat/kernels.hpp"
#include "cdlat/subgroup.hpp"

namespace cdlat {

/// m_G(H) = |H| * |C_G(H)| for one subgroup of the canonical lattice.
struct MeasureRecord {
  std::size_t subgroup_index = 0;
  std::size_t h_size = 0;
  std::size_t centralizer_size = 0;
  std::uint64_t measure = 0;
};

struct SpectrumReport {
  GroupHash group_hash;
  std::size_t group_order = 0;
  std::vector<MeasureRecord> records;
  /// Distinct measures, strictly increasing.
  std::vector<std::uint64_t> im;
  std::size_t im_count = 0;
  std::uint64_t max_measure = 0;
  /// Lattice indices of the subgroups attaining max_measure.
  std::vector<std::size_t> cd_members;
};

/// One display row per conjugacy class; measures are constant on classes.
struct ClassRow {
  std::size_t h_order = 0;
  std::size_t class_size = 0;
  std::size_t centralizer_order = 0;
  std::uint64_t measure = 0;
};

std::uint64_t chermak_delgado_measure(std::size_t h_size, std::size_t centralizer_size);
std::uint64_t measure(const Group& g, const Subgroup& h);

SpectrumReport spectrum(const Group& g, const SubgroupLattice& lattice, ExecPolicy policy = ExecPolicy::parallel);
SpectrumReport spectrum(const Group& g);

/// Subgroups of maximum measure.
std::vector<Subgroup> cd_lattice(const Group& g, const SubgroupLattice& lattice, const SpectrumReport& report);
std::vector<Subgroup> cd_lattice(const Group& g);

/// Class rows in canonical order of each class's first member.
std::vector<ClassRow> class_rows(const SubgroupLattice& lattice, const SpectrumReport& report);

/// Upper bound on |Im(m_G)| from n = |G| and m = |Z(G)|:
/// (tau(n)-1)(tau(n)-2)/2 + tau(m).
struct DivisorBound {
  std::uint64_t group_order = 0;
  std::uint64_t center_order = 0;
  std::uint64_t bound = 0;
  std::size_t im_count = 0;
  bool holds = false;
};

std::uint64_t divisor_pair_bound(std::uint64_t group_order, std::uint64_t center_order);
DivisorBound check_divisor_bound(const Group& g, std::size_t im_count);

}  // namespace cdlat
