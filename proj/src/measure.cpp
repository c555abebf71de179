#include "cdlat/measure.hpp"

#include <algorithm>
#include <unordered_map>

#include "cdlat/errors.hpp"
#include "cdlat/numtheory.hpp"
#include "cdlat/structure.hpp"

namespace cdlat {

std::uint64_t chermak_delgado_measure(std::size_t h_size, std::size_t centralizer_size) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(static_cast<std::uint64_t>(h_size), static_cast<std::uint64_t>(centralizer_size), &out))
    throw InvalidState("Chermak-Delgado measure overflows 64 bits");
  return out;
}

std::uint64_t measure(const Group& g, const Subgroup& h) {
  return chermak_delgado_measure(h.size, centralizer(g, h).size);
}

SpectrumReport spectrum(const Group& g, const SubgroupLattice& lattice, ExecPolicy policy) {
  if (!(lattice.parent == g.hash())) throw InvalidParameter("lattice belongs to a different group");
  std::vector<Bitset> bits;
  bits.reserve(lattice.size());
  for (const auto& s : lattice.subgroups) bits.push_back(s.members);
  const auto cent = policy == ExecPolicy::parallel ? kernels::centralizer_orders_omp(g, bits)
                                                   : kernels::centralizer_orders_serial(g, bits);
  SpectrumReport r;
  r.group_hash = g.hash();
  r.group_order = g.order();
  r.records.reserve(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto hs = lattice.subgroups[i].size;
    r.records.push_back({i, hs, cent[i], chermak_delgado_measure(hs, cent[i])});
    r.im.push_back(r.records.back().measure);
  }
  std::sort(r.im.begin(), r.im.end());
  r.im.erase(std::unique(r.im.begin(), r.im.end()), r.im.end());
  r.im_count = r.im.size();
  r.max_measure = r.im.empty() ? 0 : r.im.back();
  for (const auto& rec : r.records)
    if (rec.measure == r.max_measure) r.cd_members.push_back(rec.subgroup_index);
  return r;
}

SpectrumReport spectrum(const Group& g) { return spectrum(g, all_subgroups(g)); }

std::vector<Subgroup> cd_lattice(const Group& g, const SubgroupLattice& lattice, const SpectrumReport& report) {
  if (!(lattice.parent == g.hash()) || !(report.group_hash == g.hash()))
    throw InvalidParameter("lattice or report belongs to a different group");
  std::vector<Subgroup> out;
  for (auto i : report.cd_members) out.push_back(lattice.subgroups[i]);
  return out;
}

std::vector<Subgroup> cd_lattice(const Group& g) {
  const auto lat = all_subgroups(g);
  return cd_lattice(g, lat, spectrum(g, lat));
}

std::vector<ClassRow> class_rows(const SubgroupLattice& lattice, const SpectrumReport& report) {
  std::vector<ClassRow> rows;
  rows.reserve(lattice.classes.size());
  for (const auto& cls : lattice.classes) {
    const auto& rec = report.records[cls.front()];
    rows.push_back({rec.h_size, cls.size(), rec.centralizer_size, rec.measure});
  }
  return rows;
}

std::uint64_t divisor_pair_bound(std::uint64_t group_order, std::uint64_t center_order) {
  const std::uint64_t t = tau(group_order);
  const std::uint64_t pairs = t >= 2 ? (t - 1) * (t - 2) / 2 : 0;
  return pairs + tau(center_order);
}

DivisorBound check_divisor_bound(const Group& g, std::size_t im_count) {
  DivisorBound b;
  b.group_order = g.order();
  b.center_order = center(g).size;
  b.bound = divisor_pair_bound(b.group_order, b.center_order);
  b.im_count = im_count;
  b.holds = im_count <= b.bound;
  return b;
}

}  // namespace cdlat
