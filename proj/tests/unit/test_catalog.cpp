#include <doctest.h>

#include <map>
#include <set>

#include "cdlat/catalog.hpp"
#include "cdlat/numtheory.hpp"
#include "cdlat/spec.hpp"

using namespace cdlat;

TEST_CASE("names are unique and resolvable") {
  std::set<std::string> names;
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    CHECK(names.insert(e.name).second);
    REQUIRE(find_catalog_entry(e.name) == &e);
  }
  CHECK(find_catalog_entry("no such group") == nullptr);
}

TEST_CASE("every non-scale entry builds within the size guard") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    if (e.has_tag("scale")) continue;
    const Group g = build(e.spec);
    CHECK(g.order() == projected_order(e.spec));
  }
}

TEST_CASE("published values carry a citation") {
  std::size_t published = 0;
  for (const auto& e : catalog()) {
    if (!e.expected || e.expected->provenance != Provenance::published) continue;
    ++published;
    CAPTURE(e.name);
    CHECK_FALSE(e.expected->citation.empty());
  }
  CHECK(published > 40);
}

TEST_CASE("order-60 census has 13 members with distinct indices") {
  const auto census = catalog_with_tag("ex60");
  CHECK(census.size() == 13);
  std::set<std::string> idx;
  for (const auto* e : census) {
    CHECK(projected_order(e->spec) == 60);
    for (const auto& t : e->tags)
      if (t.rfind("ex60:", 0) == 0) idx.insert(t);
  }
  CHECK(idx.size() == 13);
}

TEST_CASE("abelian p-group types are complete for p = 2, 3") {
  // number of partitions of k for k = 1..7
  const std::size_t partitions[] = {0, 1, 2, 3, 5, 7, 11, 15};
  std::size_t count2[8] = {}, count3[8] = {};
  for (const auto* e : catalog_with_tag("abelian")) {
    if (e->has_tag("scale")) continue;
    PrimePower pp;
    REQUIRE(as_prime_power(projected_order(e->spec), pp));
    if (pp.p == 2) ++count2[pp.k];
    if (pp.p == 3) ++count3[pp.k];
  }
  for (unsigned k = 1; k <= 7; ++k) CHECK(count2[k] == partitions[k]);
  for (unsigned k = 1; k <= 5; ++k) CHECK(count3[k] == partitions[k]);
}

TEST_CASE("squarefree orders are complete for 6, 10, 15, 30") {
  std::map<std::uint64_t, std::size_t> per_order;
  for (const auto* e : catalog_with_tag("thmC")) ++per_order[projected_order(e->spec)];
  CHECK(per_order[6] == 2);
  CHECK(per_order[10] == 2);
  CHECK(per_order[15] == 1);
  CHECK(per_order[30] == 4);
}
