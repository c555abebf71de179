#include "cdlat/structure.hpp"

#include <algorithm>
#include <string>

#include "cdlat/errors.hpp"

namespace cdlat {

Subgroup center(const Group& g) { return centralizer(g, whole_group(g)); }

Subgroup commutator_subgroup(const Group& g, const Subgroup& a, const Subgroup& b) {
  if (!(a.parent == b.parent)) throw InvalidParameter("commutator of subgroups of different groups");
  auto c = kernels::Closure::trivial(g);
  const auto bs = b.elements();
  a.members.for_each([&](std::size_t x) {
    for (ElementId y : bs) {
      const ElementId k = g.commutator(static_cast<ElementId>(x), y);
      if (!c.members.test(k)) kernels::extend(g, c, k);
    }
  });
  Subgroup s{g.hash(), std::move(c.members), 0};
  s.size = s.members.count();
  return s;
}

const Subgroup& LowerCentralSeries::term(std::size_t i) const {
  if (i == 0) throw InvalidParameter("lower central series is indexed from 1");
  return terms[std::min(i, terms.size()) - 1];
}

LowerCentralSeries lower_central_series(const Group& g) {
  LowerCentralSeries lcs;
  const Subgroup whole = whole_group(g);
  lcs.terms.push_back(whole);
  while (lcs.terms.back().size > 1) {
    Subgroup next = commutator_subgroup(g, lcs.terms.back(), whole);
    if (next.size == lcs.terms.back().size) break;
    lcs.terms.push_back(std::move(next));
  }
  lcs.nilpotent = lcs.terms.back().size == 1;
  if (lcs.nilpotent) lcs.nilpotency_class = lcs.terms.size() - 1;
  return lcs;
}

bool is_nilpotent(const Group& g) { return lower_central_series(g).nilpotent; }

bool is_maximal_class(const Group& g) {
  PrimePower pp;
  if (!as_prime_power(g.order(), pp) || g.is_abelian()) return false;
  const auto lcs = lower_central_series(g);
  return lcs.nilpotent && *lcs.nilpotency_class + 1 == pp.k;
}

namespace {

PrimePower require_p_group(const Group& g, const char* what) {
  PrimePower pp;
  if (!as_prime_power(g.order(), pp))
    throw InvalidParameter(std::string(what) + " needs a p-group; order " + std::to_string(g.order()) +
                           " is not a prime power");
  return pp;
}

Subgroup section_centralizer_from(const Group& g, const LowerCentralSeries& lcs, std::size_t i) {
  const Subgroup& upper = lcs.term(i);
  const Subgroup& lower = lcs.term(i + 2);
  const auto ys = upper.elements();
  Bitset out(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto ex = static_cast<ElementId>(x);
    if (std::all_of(ys.begin(), ys.end(), [&](ElementId y) { return lower.contains(g.commutator(ex, y)); }))
      out.set(x);
  }
  return make_subgroup(g, std::move(out));
}

}  // namespace

Subgroup section_centralizer(const Group& g, std::size_t i) {
  const auto pp = require_p_group(g, "section_centralizer");
  if (i < 2 || i + 2 > pp.k)
    throw InvalidParameter("section index " + std::to_string(i) + " outside 2.." +
                           (pp.k >= 2 ? std::to_string(pp.k - 2) : std::string("(empty)")));
  return section_centralizer_from(g, lower_central_series(g), i);
}

UniformElements uniform_elements(const Group& g) {
  const auto pp = require_p_group(g, "uniform_elements");
  const auto lcs = lower_central_series(g);
  Bitset covered(g.order());
  for (std::size_t i = 2; i + 2 <= pp.k; ++i) covered |= section_centralizer_from(g, lcs, i).members;
  UniformElements out;
  out.maximal_class_context = !g.is_abelian() && lcs.nilpotent && *lcs.nilpotency_class + 1 == pp.k;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (!covered.test(x)) out.elements.push_back(static_cast<ElementId>(x));
  return out;
}

bool has_uniform_of_order_p(const Group& g) {
  const auto pp = require_p_group(g, "has_uniform_of_order_p");
  const auto u = uniform_elements(g);
  return std::any_of(u.elements.begin(), u.elements.end(),
                     [&](ElementId x) { return g.element_order(x) == pp.p; });
}

bool is_abelian_subgroup(const Group& g, const Subgroup& h) {
  const auto gens = generators_of(g, h);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

std::optional<Subgroup> abelian_maximal_subgroup(const Group& g, const SubgroupLattice& lattice) {
  const auto pp = require_p_group(g, "abelian_maximal_subgroup");
  const std::size_t target = g.order() / pp.p;
  for (const auto& h : lattice.subgroups)
    if (h.size == target && is_abelian_subgroup(g, h)) return h;
  return std::nullopt;
}

std::optional<Subgroup> abelian_maximal_subgroup(const Group& g) {
  require_p_group(g, "abelian_maximal_subgroup");
  return abelian_maximal_subgroup(g, all_subgroups(g));
}

std::vector<Subgroup> sylow_decomposition(const Group& g) {
  if (!is_nilpotent(g)) throw InvalidState("sylow_decomposition needs a nilpotent group");
  std::vector<Subgroup> out;
  if (g.order() == 1) return out;
  for (const auto& [p, k] : factorize(g.order()).pairs) {
    Bitset b(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) {
      std::uint64_t o = g.element_order(static_cast<ElementId>(x));
      while (o % p == 0) o /= p;
      if (o == 1) b.set(x);
    }
    out.push_back(make_subgroup(g, std::move(b)));
  }
  return out;
}

}  // namespace cdlat
