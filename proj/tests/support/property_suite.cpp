#include "property_suite.hpp"

#include <algorithm>
#include <numeric>

#include "cdlat/catalog.hpp"
#include "cdlat/measure.hpp"
#include "cdlat/numtheory.hpp"
#include "cdlat/structure.hpp"
#include "cdlat/subgroup.hpp"

namespace cdlat::props {

void PropertyTally::record(bool ok, const std::string& what) {
  ++instances;
  if (ok) return;
  ++failures;
  if (notes.size() < 5) notes.push_back(what);
}

std::size_t SuiteResult::randomized_instances() const {
  std::size_t n = 0;
  for (const auto& p : properties)
    if (p.randomized) n += p.instances;
  return n;
}

bool SuiteResult::ok() const {
  return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.ok(); });
}

namespace {

std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

GroupSpec atom_spec(std::mt19937_64& rng, std::uint64_t max_order) {
  for (;;) {
    GroupSpec s;
    switch (uniform(rng, 0, 7)) {
      case 0:
        s.node = spec::Cyclic{uniform(rng, 2, std::min<std::uint64_t>(max_order, 60))};
        break;
      case 1:
        s.node = spec::Dihedral{2 * uniform(rng, 3, std::max<std::uint64_t>(3, std::min<std::uint64_t>(max_order / 2, 40)))};
        break;
      case 2:
        s.node = spec::Dicyclic{4 * uniform(rng, 2, 16)};
        break;
      case 3: {
        spec::Abelian a;
        const std::size_t parts = uniform(rng, 2, 3);
        for (std::size_t i = 0; i < parts; ++i) a.invariants.push_back(uniform(rng, 2, 6));
        s.node = a;
        break;
      }
      case 4: {
        const std::uint64_t m = uniform(rng, 3, 21), n = uniform(rng, 2, 8);
        std::vector<std::uint64_t> rs;
        for (std::uint64_t r = 2; r < m; ++r)
          if (std::gcd(r, m) == 1 && pow_mod(r, n, m) == 1) rs.push_back(r);
        if (rs.empty()) continue;
        s.node = spec::Semidirect{m, n, rs[uniform(rng, 0, rs.size() - 1)]};
        break;
      }
      case 5: {
        static const std::pair<std::uint64_t, std::uint64_t> jp[] = {{2, 2}, {3, 2}, {3, 3}, {5, 2}};
        const auto [p, m] = jp[uniform(rng, 0, 3)];
        s.node = spec::JordanP{p, m};
        break;
      }
      case 6: {
        static const char* named[] = {"A4", "S4", "A5", "S3"};
        s.node = spec::Named{named[uniform(rng, 0, 3)]};
        break;
      }
      default: {
        const auto& cat = catalog();
        const CatalogEntry& e = cat[uniform(rng, 0, cat.size() - 1)];
        if (e.has_tag("scale")) continue;
        s = e.spec;
        break;
      }
    }
    if (projected_order(s) <= max_order) return s;
  }
}

}  // namespace

namespace {

// Large elementary abelian 2-sections make the lattice explode; keep draws to
// groups with at most 64 elements of order dividing 2.
bool tractable(const GroupSpec& s) {
  const Group g = build(s);
  const auto& orders = g.element_orders();
  return std::count_if(orders.begin(), orders.end(), [](std::uint32_t o) { return o <= 2; }) <= 64;
}

}  // namespace

GroupSpec random_spec(std::mt19937_64& rng, std::uint64_t max_order) {
  for (;;) {
    GroupSpec s = atom_spec(rng, max_order);
    if (uniform(rng, 0, 3) == 0) {
      const std::uint64_t n = projected_order(s);
      if (n * 2 <= max_order) {
        GroupSpec t = atom_spec(rng, max_order / n);
        if (projected_order(t) * n <= max_order) s = make_product(std::move(s), std::move(t));
      }
    }
    if (tractable(s)) return s;
  }
}

PropertyTally check_conjugation_invariance(Workspace& ws, std::mt19937_64& rng, std::size_t draws) {
  PropertyTally t{"conjugation invariance of measures"};
  for (std::size_t d = 0; d < draws; ++d) {
    const Group& g = ws.group(random_spec(rng, 200));
    const auto& lat = ws.lattice(g);
    const auto& rep = ws.spectrum(g);
    const std::size_t i = uniform(rng, 0, lat.size() - 1);
    const ElementId x = static_cast<ElementId>(uniform(rng, 0, g.order() - 1));
    const Subgroup h = conjugate_subgroup(g, lat.subgroups[i], x);
    const auto j = lat.find(h.members);
    const bool ok = j && rep.records[*j].measure == rep.records[i].measure && measure(g, h) == rep.records[i].measure &&
                    lat.class_of[*j] == lat.class_of[i];
    t.record(ok, g.label() + " subgroup " + std::to_string(i) + " by element " + std::to_string(x));
  }
  return t;
}

PropertyTally check_product_law(Workspace& ws, std::mt19937_64& rng, std::size_t draws) {
  PropertyTally t{"product law for A x B in H x K"};
  for (std::size_t d = 0; d < draws; ++d) {
    const GroupSpec hs = atom_spec(rng, 12);
    const std::uint64_t hn = projected_order(hs);
    if (24 / hn < 2) {
      --d;
      continue;
    }
    const GroupSpec ks = atom_spec(rng, 24 / hn);
    const Group& h = ws.group(hs);
    const Group& k = ws.group(ks);
    const Group& g = ws.group(make_product(hs, ks));
    const auto& hl = ws.lattice(h);
    const auto& kl = ws.lattice(k);
    const auto& hr = ws.spectrum(h);
    const auto& kr = ws.spectrum(k);
    bool ok = true;
    std::string where;
    for (std::size_t a = 0; a < hl.size() && ok; ++a)
      for (std::size_t b = 0; b < kl.size() && ok; ++b) {
        Bitset bits(g.order());
        hl.subgroups[a].members.for_each([&](std::size_t x) {
          kl.subgroups[b].members.for_each([&](std::size_t y) { bits.set(x * k.order() + y); });
        });
        const Subgroup ab = make_subgroup(g, std::move(bits));
        if (measure(g, ab) != hr.records[a].measure * kr.records[b].measure) {
          ok = false;
          where = " at A=" + std::to_string(a) + " B=" + std::to_string(b);
        }
      }
    t.record(ok, g.label() + where);
  }
  return t;
}

PropertyTally check_im_count_nontrivial(Workspace& ws, std::mt19937_64& rng, std::size_t draws) {
  PropertyTally t{"im_count >= 2 for nontrivial groups"};
  for (std::size_t d = 0; d < draws; ++d) {
    const Group& g = ws.group(random_spec(rng, 256));
    t.record(ws.im_count(g) >= 2, g.label());
  }
  return t;
}

PropertyTally check_class_count_bound(Workspace& ws, std::mt19937_64& rng, std::size_t draws) {
  PropertyTally t{"im_count <= classes - 1 for non-abelian groups"};
  while (t.instances < draws) {
    const Group& g = ws.group(random_spec(rng, 256));
    if (g.is_abelian()) continue;
    t.record(ws.im_count(g) + 1 <= ws.lattice(g).classes.size(), g.label());
  }
  return t;
}

PropertyTally check_cd_closure(Workspace& ws, std::mt19937_64& rng, std::size_t draws) {
  PropertyTally t{"CD lattice closed under meet and join"};
  for (std::size_t d = 0; d < draws; ++d) {
    const Group& g = ws.group(random_spec(rng, 256));
    const auto& lat = ws.lattice(g);
    const auto& rep = ws.spectrum(g);
    const auto cd = cd_lattice(g, lat, rep);
    auto member = [&](const Subgroup& h) {
      auto i = lat.find(h.members);
      return i && rep.records[*i].measure == rep.max_measure;
    };
    bool ok = !cd.empty();
    for (std::size_t x = 0; x < cd.size() && ok; ++x)
      for (std::size_t y = x + 1; y < cd.size() && ok; ++y)
        ok = member(meet(cd[x], cd[y])) && member(join(g, cd[x], cd[y]));
    t.record(ok, g.label());
  }
  return t;
}

PropertyTally check_product_counts(Workspace& ws, std::mt19937_64& rng, std::size_t draws) {
  PropertyTally t{"im_count of direct products"};
  while (t.instances < draws) {
    const GroupSpec hs = atom_spec(rng, 30);
    const GroupSpec ks = atom_spec(rng, 30);
    if (projected_order(hs) * projected_order(ks) > 240) continue;
    const Group& h = ws.group(hs);
    const Group& k = ws.group(ks);
    const Group& g = ws.group(make_product(hs, ks));
    const std::size_t ih = ws.im_count(h), ik = ws.im_count(k), ig = ws.im_count(g);
    bool ok = ig + 1 >= ih + ik;
    if (std::gcd(h.order(), k.order()) == 1) ok = ok && ig == ih * ik;
    if (k.is_abelian() || h.is_abelian()) ok = ok && ig <= ih * ik;
    t.record(ok, g.label());
  }
  return t;
}

PropertyTally check_pgroup_extremes(Workspace& ws) {
  PropertyTally t{"minimum and maximum measures of non-abelian p-groups"};
  t.randomized = false;
  for (const CatalogEntry& e : catalog()) {
    if (e.has_tag("scale") || !e.has_tag("pgroup")) continue;
    PrimePower pp;
    if (!as_prime_power(projected_order(e.spec), pp)) continue;
    const bool in_scope = (pp.p == 2 && pp.k >= 4 && pp.k <= 7) || (pp.p == 3 && pp.k == 4);
    if (!in_scope) continue;
    const Group& g = ws.group(e.spec);
    if (g.is_abelian()) continue;
    const auto& lat = ws.lattice(g);
    const auto& rep = ws.spectrum(g);
    const Subgroup z = center(g);
    std::uint64_t p3 = pp.p * pp.p * pp.p, top = 1;
    for (unsigned i = 0; i < 2 * pp.k - 2; ++i) top *= pp.p;

    bool ok = true;
    for (std::size_t i = 0; i < lat.size() && ok; ++i) {
      const Subgroup& h = lat.subgroups[i];
      const std::uint64_t m = rep.records[i].measure;
      bool shape = false;
      if (h.size == pp.p && z.size == pp.p) {
        const Subgroup hz = join(g, h, z);
        shape = centralizer(g, h) == hz;
      }
      ok = m >= p3 && (m == p3) == shape && m <= top;
    }
    const bool has_abelian_max = abelian_maximal_subgroup(g, lat).has_value();
    ok = ok && (rep.max_measure == top) == has_abelian_max;
    t.record(ok, e.name);
  }
  return t;
}

PropertyTally check_uniform_centralizers(Workspace& ws) {
  PropertyTally t{"|C_G(s)| = p^2 for uniform s in maximal-class groups"};
  t.randomized = false;
  for (const CatalogEntry& e : catalog()) {
    if (e.has_tag("scale")) continue;
    PrimePower pp;
    if (!as_prime_power(projected_order(e.spec), pp) || pp.k < 4) continue;
    const Group& g = ws.group(e.spec);
    if (!is_maximal_class(g)) continue;
    const UniformElements u = uniform_elements(g);
    bool ok = !u.elements.empty();
    for (ElementId s : u.elements) {
      const ElementId one[] = {s};
      ok = ok && centralizer(g, generated_subgroup(g, one)).size == pp.p * pp.p;
    }
    t.record(ok, e.name + " (" + std::to_string(u.elements.size()) + " uniform elements)");
  }
  return t;
}

SuiteResult run_property_suite(Workspace& ws, std::uint64_t seed, std::size_t draws) {
  std::mt19937_64 rng(seed);
  SuiteResult r;
  r.properties.push_back(check_conjugation_invariance(ws, rng, draws));
  r.properties.push_back(check_product_law(ws, rng, draws / 2));
  r.properties.push_back(check_im_count_nontrivial(ws, rng, draws));
  r.properties.push_back(check_class_count_bound(ws, rng, draws));
  r.properties.push_back(check_cd_closure(ws, rng, draws));
  r.properties.push_back(check_product_counts(ws, rng, draws / 2));
  r.properties.push_back(check_pgroup_extremes(ws));
  r.properties.push_back(check_uniform_centralizers(ws));
  return r;
}

}  // namespace cdlat::props
