#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>

#ifdef CDLAT_HAVE_OPENMP
#include <omp.h>
#endif

#include "cdlat/errors.hpp"
#include "cdlat/kernels.hpp"
#include "cdlat/spec.hpp"
#include "cdlat/subgroup.hpp"

using namespace cdlat;

namespace {

Group g_of(const std::string& s) { return build(parse_spec(s)); }

void force_threads() {
#ifdef CDLAT_HAVE_OPENMP
  omp_set_num_threads(4);
#endif
}

std::vector<std::size_t> sorted_class_sizes(const SubgroupLattice& lat) {
  std::vector<std::size_t> out;
  for (const auto& c : lat.classes) out.push_back(c.size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

// Subgroup counts from tests/oracle/brute_force_oracle.py (naive closure over all elements).
TEST_CASE("subgroup counts match the brute-force oracle") {
  const std::map<std::string, std::size_t> expected{
      {"D6", 6},          {"D8", 10},          {"D12", 16},        {"Q8", 6},
      {"Q16", 11},        {"Q32", 20},         {"SD16", 15},       {"SD32", 28},
      {"M16", 11},        {"M27", 10},         {"Jp(3,2)", 19},    {"Jp(3,3)", 50},
      {"Jp(2,2)", 10},    {"C8", 4},           {"A4", 10},         {"A5", 59},
      {"C30", 8},         {"D30", 28},         {"C3 x D10", 16},   {"C5 x S3", 12},
      {"Ab(2,2,15)", 20}, {"D8 x C3", 20},     {"Q8 x C3", 12},    {"(C15 : C4 @ 2)", 40},
      {"(C15 : C4 @ 14)", 32}, {"C5 x (C3 : C4 @ 2)", 16}, {"C3 x (C5 : C4 @ 2)", 28},
      {"C3 x (C5 : C4 @ 4)", 20}, {"C5 x A4", 20}, {"C6 x D10", 44}, {"C10 x S3", 32},
      {"D60", 80},        {"S3 x D10", 72},    {"C60", 12},        {"Ab(2,30)", 20}};
  for (const auto& [spec, count] : expected) {
    CAPTURE(spec);
    CHECK(all_subgroups(g_of(spec)).size() == count);
  }
}

TEST_CASE("conjugacy classes match the oracle") {
  CHECK(sorted_class_sizes(all_subgroups(g_of("D6"))) == std::vector<std::size_t>{1, 1, 1, 3});
  CHECK(sorted_class_sizes(all_subgroups(g_of("A5"))) ==
        std::vector<std::size_t>{1, 1, 5, 5, 6, 6, 10, 10, 15});
  const auto ab = all_subgroups(g_of("Ab(2,4)"));
  CHECK(ab.classes.size() == ab.size());
}

TEST_CASE("lattice is in canonical order with consistent class_of") {
  const Group g = g_of("S4");
  const auto lat = all_subgroups(g);
  CHECK(lat.size() == 30);
  CHECK(lat.subgroups.front().size == 1);
  CHECK(lat.subgroups.back().size == 24);
  for (std::size_t i = 1; i < lat.size(); ++i) CHECK(canonical_less(lat.subgroups[i - 1], lat.subgroups[i]));
  for (std::size_t c = 0; c < lat.classes.size(); ++c)
    for (std::size_t i : lat.classes[c]) CHECK(lat.class_of[i] == c);
  for (std::size_t i = 0; i < lat.size(); ++i) CHECK(lat.find(lat.subgroups[i].members) == i);
}

TEST_CASE("serial and OpenMP enumeration agree") {
  force_threads();
  for (const char* s : {"D60", "S4 x C2", "Jp(3,3)", "Ab(2,2,2,2,2)", "A5"}) {
    CAPTURE(s);
    const Group g = g_of(s);
    EnumerationOptions serial, parallel;
    serial.policy = ExecPolicy::serial;
    parallel.policy = ExecPolicy::parallel;
    const auto a = all_subgroups(g, serial);
    const auto b = all_subgroups(g, parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.subgroups[i] == b.subgroups[i]);
    CHECK(a.classes == b.classes);
  }
}

TEST_CASE("seed order does not change the lattice") {
  const Group g = g_of("S3 x D10");
  const auto base = all_subgroups(g);
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    for (ExecPolicy p : {ExecPolicy::serial, ExecPolicy::parallel}) {
      EnumerationOptions o;
      o.shuffle_seed = seed;
      o.policy = p;
      const auto lat = all_subgroups(g, o);
      REQUIRE(lat.size() == base.size());
      for (std::size_t i = 0; i < lat.size(); ++i) CHECK(lat.subgroups[i] == base.subgroups[i]);
      CHECK(lat.classes == base.classes);
    }
  }
}

TEST_CASE("centralizer kernels agree") {
  force_threads();
  const Group g = g_of("S4 x C2");
  const auto lat = all_subgroups(g);
  std::vector<Bitset> members;
  for (const auto& h : lat.subgroups) members.push_back(h.members);
  const auto a = kernels::centralizer_orders_serial(g, members);
  const auto b = kernels::centralizer_orders_omp(g, members);
  CHECK(a == b);
  for (std::size_t i = 0; i < lat.size(); ++i) CHECK(a[i] == centralizer(g, lat.subgroups[i]).size);
}

TEST_CASE("subgroup cap raises an explosion error") {
  EnumerationOptions o;
  o.cap = 100;
  CHECK_THROWS_AS(all_subgroups(g_of("Ab(2,2,2,2,2)"), o), Explosion);
  try {
    all_subgroups(g_of("Ab(2,2,2,2,2)"), o);
  } catch (const Explosion& e) {
    CHECK(e.partial_count() > 100);
  }
}

TEST_CASE("generation, meet, join, normalizer") {
  const Group g = make_dihedral(12);  // a^i = i, a^i b = 6 + i
  const ElementId a = 1, b = 6;
  const ElementId ga[] = {a};
  const ElementId gb[] = {b};
  const Subgroup rot = generated_subgroup(g, ga);
  const Subgroup refl = generated_subgroup(g, gb);
  CHECK(rot.size == 6);
  CHECK(refl.size == 2);
  CHECK(join(g, rot, refl).size == 12);
  CHECK(meet(rot, refl).size == 1);
  CHECK(normalizer(g, rot).size == 12);
  CHECK(normalizer(g, refl).size == 4);
  CHECK(centralizer(g, rot) == rot);
  CHECK(is_subgroup(g, rot.members));
  Bitset bad(12);
  bad.set(0);
  bad.set(1);
  CHECK_FALSE(is_subgroup(g, bad));
  CHECK_THROWS_AS(make_subgroup(g, bad), InvalidParameter);
  CHECK(generated_subgroup(g, generators_of(g, join(g, rot, refl))).size == 12);
}

TEST_CASE("conjugate subgroups and induced groups") {
  const Group g = make_dihedral(8);
  const ElementId gb[] = {4};
  const Subgroup refl = generated_subgroup(g, gb);
  const Subgroup conj = conjugate_subgroup(g, refl, 1);
  CHECK(conj.size == 2);
  CHECK_FALSE(conj == refl);
  const ElementId ga[] = {1};
  const Group c4 = induced_group(g, generated_subgroup(g, ga));
  CHECK(c4.order() == 4);
  CHECK(c4.is_abelian());
}

TEST_CASE("Dimino extension builds the right closure") {
  const Group g = make_alternating(5);
  auto c = kernels::Closure::trivial(g);
  const auto seeds = kernels::cyclic_seed_generators(g);
  for (ElementId x : seeds) kernels::extend(g, c, x);
  CHECK(c.elements.size() == 60);
  CHECK(c.members.count() == 60);
}
