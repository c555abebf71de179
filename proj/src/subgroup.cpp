#include "cdlat/subgroup.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "cdlat/errors.hpp"

namespace cdlat {

bool canonical_less(const Subgroup& a, const Subgroup& b) noexcept {
  if (a.size != b.size) return a.size < b.size;
  return lex_less(a.members, b.members);
}

std::optional<std::size_t> SubgroupLattice::find(const Bitset& members) const {
  const auto n = members.count();
  auto lo = std::lower_bound(subgroups.begin(), subgroups.end(), n,
                             [](const Subgroup& s, std::size_t size) { return s.size < size; });
  for (auto it = lo; it != subgroups.end() && it->size == n; ++it)
    if (it->members == members) return static_cast<std::size_t>(it - subgroups.begin());
  return std::nullopt;
}

namespace {

Subgroup wrap(const Group& g, Bitset members) {
  Subgroup s{g.hash(), std::move(members), 0};
  s.size = s.members.count();
  return s;
}

}  // namespace

Subgroup trivial_subgroup(const Group& g) {
  Bitset b(g.order());
  b.set(Group::identity());
  return wrap(g, std::move(b));
}

Subgroup whole_group(const Group& g) {
  Bitset b(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) b.set(i);
  return wrap(g, std::move(b));
}

bool is_subgroup(const Group& g, const Bitset& members) {
  if (members.size() != g.order() || !members.test(Group::identity())) return false;
  const auto elems = members.elements();
  for (ElementId x : elems)
    for (ElementId y : elems)
      if (!members.test(g.mul(x, y))) return false;
  return true;
}

Subgroup make_subgroup(const Group& g, Bitset members) {
  if (!is_subgroup(g, members)) throw InvalidParameter("element set is not a subgroup");
  return wrap(g, std::move(members));
}

Subgroup generated_subgroup(const Group& g, std::span<const ElementId> seed) {
  auto c = kernels::Closure::trivial(g);
  for (ElementId x : seed) {
    if (x >= g.order()) throw InvalidParameter("seed element out of range");
    kernels::extend(g, c, x);
  }
  return wrap(g, std::move(c.members));
}

std::vector<ElementId> generators_of(const Group& g, const Subgroup& h) {
  auto c = kernels::Closure::trivial(g);
  h.members.for_each([&](std::size_t x) {
    if (!c.members.test(x)) kernels::extend(g, c, static_cast<ElementId>(x));
  });
  return c.generators;
}

SubgroupLattice all_subgroups(const Group& g, const EnumerationOptions& options) {
  auto seeds = kernels::cyclic_seed_generators(g);
  if (options.shuffle_seed) {
    std::mt19937_64 rng(*options.shuffle_seed);
    std::shuffle(seeds.begin(), seeds.end(), rng);
  }
  auto result = options.policy == ExecPolicy::parallel ? kernels::enumerate_subgroups_omp(g, seeds, options.cap)
                                                       : kernels::enumerate_subgroups_serial(g, seeds, options.cap);
  SubgroupLattice lat;
  lat.parent = g.hash();
  lat.group_order = g.order();
  lat.subgroups.reserve(result.subgroups.size());
  for (auto& b : result.subgroups) lat.subgroups.push_back(wrap(g, std::move(b)));
  std::sort(lat.subgroups.begin(), lat.subgroups.end(), canonical_less);
  lat.classes = conjugacy_classes(g, lat.subgroups);
  lat.class_of.assign(lat.subgroups.size(), 0);
  for (std::size_t c = 0; c < lat.classes.size(); ++c)
    for (auto i : lat.classes[c]) lat.class_of[i] = c;
  return lat;
}

Subgroup centralizer(const Group& g, const Subgroup& h) {
  const auto gens = generators_of(g, h);
  Bitset out(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto ex = static_cast<ElementId>(x);
    if (std::all_of(gens.begin(), gens.end(), [&](ElementId y) { return g.mul(ex, y) == g.mul(y, ex); }))
      out.set(x);
  }
  return wrap(g, std::move(out));
}

Subgroup normalizer(const Group& g, const Subgroup& h) {
  const auto gens = generators_of(g, h);
  Bitset out(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto ex = static_cast<ElementId>(x);
    // finite: x^-1 h x <= h forces equality
    if (std::all_of(gens.begin(), gens.end(), [&](ElementId y) { return h.contains(g.conj(y, ex)); })) out.set(x);
  }
  return wrap(g, std::move(out));
}

namespace {

Bitset conjugate_bits(const Group& g, const Bitset& h, ElementId x) {
  Bitset out(g.order());
  h.for_each([&](std::size_t y) { out.set(g.conj(static_cast<ElementId>(y), x)); });
  return out;
}

}  // namespace

Subgroup conjugate_subgroup(const Group& g, const Subgroup& h, ElementId x) {
  if (x >= g.order()) throw InvalidParameter("conjugating element out of range");
  return wrap(g, conjugate_bits(g, h.members, x));
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const Group& g, std::span<const Subgroup> subgroups) {
  std::vector<std::vector<std::size_t>> classes;
  if (g.is_abelian()) {
    for (std::size_t i = 0; i < subgroups.size(); ++i) classes.push_back({i});
    return classes;
  }
  std::unordered_map<Bitset, std::size_t, BitsetHash> index;
  for (std::size_t i = 0; i < subgroups.size(); ++i) index.emplace(subgroups[i].members, i);
  const auto gens = generators_of(g, whole_group(g));
  std::vector<char> done(subgroups.size(), 0);
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> orbit{i};
    done[i] = 1;
    for (std::size_t pos = 0; pos < orbit.size(); ++pos) {
      for (ElementId s : gens) {
        auto it = index.find(conjugate_bits(g, subgroups[orbit[pos]].members, s));
        if (it == index.end()) throw InvalidState("conjugate of a listed subgroup is missing from the lattice");
        if (!done[it->second]) {
          done[it->second] = 1;
          orbit.push_back(it->second);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

Subgroup meet(const Subgroup& a, const Subgroup& b) {
  if (!(a.parent == b.parent)) throw InvalidParameter("meet of subgroups of different groups");
  Subgroup s{a.parent, a.members & b.members, 0};
  s.size = s.members.count();
  return s;
}

Subgroup join(const Group& g, const Subgroup& a, const Subgroup& b) {
  if (!(a.parent == b.parent)) throw InvalidParameter("join of subgroups of different groups");
  auto c = kernels::Closure::trivial(g);
  for (const auto* s : {&a, &b})
    for (ElementId x : generators_of(g, *s)) kernels::extend(g, c, x);
  return wrap(g, std::move(c.members));
}

Group induced_group(const Group& g, const Subgroup& h) {
  const auto elems = h.elements();
  std::vector<ElementId> local(g.order(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<ElementId>(i);
  const std::size_t n = elems.size();
  std::vector<ElementId> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = local[g.mul(elems[i], elems[j])];
  return Group::from_table(n, std::move(t), g.label().empty() ? std::string() : "subgroup of " + g.label());
}

}  // namespace cdlat
