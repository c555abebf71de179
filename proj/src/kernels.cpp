#include "cdlat/kernels.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#ifdef CDLAT_HAVE_OPENMP
#include <omp.h>
#endif

#include "cdlat/errors.hpp"

namespace cdlat {

bool openmp_enabled() noexcept {
#ifdef CDLAT_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

namespace kernels {

Closure Closure::trivial(const Group& g) {
  Closure c{Bitset(g.order()), {Group::identity()}, {}};
  c.members.set(Group::identity());
  return c;
}

void extend(const Group& g, Closure& c, ElementId x) {
  if (c.members.test(x)) return;
  c.generators.push_back(x);
  const std::vector<ElementId> base = c.elements;  // the old subgroup K
  auto add_coset = [&](ElementId t) {
    for (ElementId k : base) {
      const ElementId e = g.mul(k, t);
      c.members.set(e);
      c.elements.push_back(e);
    }
  };
  std::vector<ElementId> reps{Group::identity(), x};
  add_coset(x);
  for (std::size_t pos = 1; pos < reps.size(); ++pos) {
    const ElementId r = reps[pos];
    for (ElementId s : c.generators) {
      const ElementId t = g.mul(r, s);
      if (!c.members.test(t)) {
        add_coset(t);
        reps.push_back(t);
      }
    }
  }
}

std::vector<ElementId> cyclic_seed_generators(const Group& g) {
  const std::size_t n = g.order();
  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<ElementId> seeds;
  for (std::size_t x = 1; x < n; ++x) {
    Bitset b(n);
    ElementId p = static_cast<ElementId>(x);
    while (p != Group::identity()) {
      b.set(p);
      p = g.mul(p, static_cast<ElementId>(x));
    }
    b.set(Group::identity());
    if (seen.insert(std::move(b)).second) seeds.push_back(static_cast<ElementId>(x));
  }
  std::stable_sort(seeds.begin(), seeds.end(),
                   [&](ElementId a, ElementId b) { return g.element_order(a) < g.element_order(b); });
  return seeds;
}

namespace {

[[noreturn]] void explode(std::size_t count, std::size_t cap) {
  throw Explosion("subgroup enumeration exceeded the cap of " + std::to_string(cap) + " subgroups (" +
                      std::to_string(count) + " found so far)",
                  count);
}

}  // namespace

EnumerationResult enumerate_subgroups_serial(const Group& g, std::span<const ElementId> seeds, std::size_t cap) {
  std::vector<Closure> found{Closure::trivial(g)};
  std::unordered_set<Bitset, BitsetHash> index{found[0].members};
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      for (ElementId x : seeds) {
        if (found[idx].members.test(x)) continue;
        Closure j = found[idx];
        extend(g, j, x);
        if (!index.insert(j.members).second) continue;
        found.push_back(std::move(j));
        next.push_back(found.size() - 1);
        if (found.size() > cap) explode(found.size(), cap);
      }
    }
    frontier = std::move(next);
  }
  EnumerationResult out;
  out.subgroups.reserve(found.size());
  for (auto& c : found) out.subgroups.push_back(std::move(c.members));
  return out;
}

EnumerationResult enumerate_subgroups_omp(const Group& g, std::span<const ElementId> seeds, std::size_t cap) {
#ifndef CDLAT_HAVE_OPENMP
  return enumerate_subgroups_serial(g, seeds, cap);
#else
  std::vector<Closure> found{Closure::trivial(g)};
  std::unordered_set<Bitset, BitsetHash> index{found[0].members};
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const int threads = omp_get_max_threads();
    std::vector<std::vector<Closure>> fresh(static_cast<std::size_t>(threads));
    const auto count = static_cast<std::ptrdiff_t>(frontier.size());
#pragma omp parallel
    {
      auto& local = fresh[static_cast<std::size_t>(omp_get_thread_num())];
      std::unordered_set<Bitset, BitsetHash> local_seen;
#pragma omp for schedule(dynamic, 4)
      for (std::ptrdiff_t i = 0; i < count; ++i) {
        const Closure& h = found[frontier[static_cast<std::size_t>(i)]];
        for (ElementId x : seeds) {
          if (h.members.test(x)) continue;
          Closure j = h;
          extend(g, j, x);
          if (index.count(j.members) || !local_seen.insert(j.members).second) continue;
          local.push_back(std::move(j));
        }
      }
    }
    std::vector<std::size_t> next;
    for (auto& local : fresh)
      for (auto& j : local) {
        if (!index.insert(j.members).second) continue;
        found.push_back(std::move(j));
        next.push_back(found.size() - 1);
        if (found.size() > cap) explode(found.size(), cap);
      }
    frontier = std::move(next);
  }
  EnumerationResult out;
  out.subgroups.reserve(found.size());
  for (auto& c : found) out.subgroups.push_back(std::move(c.members));
  return out;
#endif
}

std::vector<Bitset> element_centralizers(const Group& g) {
  const std::size_t n = g.order();
  std::vector<Bitset> cent(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x) {
    const auto row = g.row(static_cast<ElementId>(x));
    for (std::size_t y = 0; y < n; ++y)
      if (row[y] == g.mul(static_cast<ElementId>(y), static_cast<ElementId>(x))) cent[x].set(y);
  }
  return cent;
}

namespace {

std::size_t centralizer_order(const Group& g, const std::vector<Bitset>& cent, const Bitset& h) {
  Closure c = Closure::trivial(g);
  h.for_each([&](std::size_t x) {
    if (!c.members.test(x)) extend(g, c, static_cast<ElementId>(x));
  });
  Bitset acc(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) acc.set(i);
  for (ElementId s : c.generators) acc &= cent[s];
  return acc.count();
}

}  // namespace

std::vector<std::size_t> centralizer_orders_serial(const Group& g, std::span<const Bitset> subgroups) {
  const auto cent = element_centralizers(g);
  std::vector<std::size_t> out(subgroups.size());
  for (std::size_t i = 0; i < subgroups.size(); ++i) out[i] = centralizer_order(g, cent, subgroups[i]);
  return out;
}

std::vector<std::size_t> centralizer_orders_omp(const Group& g, std::span<const Bitset> subgroups) {
  const auto cent = element_centralizers(g);
  std::vector<std::size_t> out(subgroups.size());
  const auto count = static_cast<std::ptrdiff_t>(subgroups.size());
#ifdef CDLAT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = centralizer_order(g, cent, subgroups[k]);
  }
  return out;
}

}  // namespace kernels
}  // namespace cdlat
