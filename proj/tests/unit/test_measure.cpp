#include <doctest.h>

#include <map>
#include <string>

#ifdef CDLAT_HAVE_OPENMP
#include <omp.h>
#endif

#include "cdlat/errors.hpp"
#include "cdlat/measure.hpp"
#include "cdlat/spec.hpp"
#include "cdlat/structure.hpp"

using namespace cdlat;

namespace {

Group g_of(const std::string& s) { return build(parse_spec(s)); }

}  // namespace

// Measure spectra from tests/oracle/brute_force_oracle.py.
TEST_CASE("spectra match the brute-force oracle") {
  using V = std::vector<std::uint64_t>;
  const std::map<std::string, std::pair<V, std::size_t>> expected{
      {"D6", {{4, 6, 9}, 1}},
      {"D8", {{8, 16}, 5}},
      {"D12", {{8, 12, 16, 18, 24, 36}, 1}},
      {"Q8", {{8, 16}, 5}},
      {"Q32", {{16, 32, 64, 128, 256}, 1}},
      {"SD16", {{8, 16, 32, 64}, 1}},
      {"M16", {{16, 32, 64}, 5}},
      {"M27", {{27, 81}, 6}},
      {"Jp(3,3)", {{27, 81, 243, 729}, 1}},
      {"C8", {{8, 16, 32, 64}, 1}},
      {"A4", {{8, 9, 12, 16}, 1}},
      {"A5", {{6, 8, 9, 10, 12, 16, 25, 60}, 2}},
      {"D30", {{4, 6, 10, 30, 45, 75, 225}, 1}},
      {"C5 x S3", {{20, 30, 45, 100, 150, 225}, 1}},
      {"D8 x C3", {{24, 48, 72, 144}, 5}},
      {"(C15 : C4 @ 2)", {{16, 20, 24, 30, 36, 60, 75, 90, 225}, 1}},
      {"(C15 : C4 @ 14)", {{16, 24, 40, 60, 90, 120, 150, 180, 300, 450, 900}, 1}},
      {"C5 x A4", {{40, 45, 60, 80, 200, 225, 300, 400}, 1}},
      {"D60", {{8, 12, 16, 20, 24, 40, 60, 90, 120, 150, 180, 300, 450, 900}, 1}},
      {"S3 x D10", {{8, 12, 16, 20, 24, 30, 36, 40, 60, 90, 100, 150, 225}, 1}},
  };
  for (const auto& [spec, want] : expected) {
    CAPTURE(spec);
    const SpectrumReport r = spectrum(g_of(spec));
    CHECK(r.im == want.first);
    CHECK(r.im_count == want.first.size());
    CHECK(r.max_measure == want.first.back());
    CHECK(r.cd_members.size() == want.second);
  }
}

TEST_CASE("report invariants") {
  for (const char* s : {"S4", "Q16", "C3 x (C5 : C4 @ 4)", "Jp(5,2)"}) {
    CAPTURE(s);
    const Group g = g_of(s);
    const auto lat = all_subgroups(g);
    const SpectrumReport r = spectrum(g, lat);
    REQUIRE(r.records.size() == lat.size());
    std::vector<std::uint64_t> seen;
    for (std::size_t i = 0; i < r.records.size(); ++i) {
      const auto& rec = r.records[i];
      CHECK(rec.subgroup_index == i);
      CHECK(rec.measure == rec.h_size * rec.centralizer_size);
      CHECK(rec.measure <= g.order() * g.order());
      seen.push_back(rec.measure);
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    CHECK(seen == r.im);
    for (std::size_t i : r.cd_members) CHECK(r.records[i].measure == r.max_measure);
    // m(G) = m(Z(G)) = |G||Z(G)|
    CHECK(measure(g, whole_group(g)) == measure(g, center(g)));
  }
}

TEST_CASE("single measures") {
  const Group d6 = make_dihedral(6);
  const ElementId a[] = {1};
  CHECK(measure(d6, generated_subgroup(d6, a)) == 9);
  CHECK(measure(d6, trivial_subgroup(d6)) == 6);
}

TEST_CASE("CD lattice") {
  const Group c12 = make_cyclic(12);
  const auto cd = cd_lattice(c12);
  REQUIRE(cd.size() == 1);
  CHECK(cd.front().size == 12);

  const Group d8 = make_dihedral(8);
  const auto d8cd = cd_lattice(d8);
  CHECK(d8cd.size() == 5);
  for (const auto& h : d8cd) CHECK((h.size == 2 || h.size == 4 || h.size == 8));

  const Group a5 = make_alternating(5);
  const auto a5cd = cd_lattice(a5);
  REQUIRE(a5cd.size() == 2);
  CHECK(a5cd[0].size == 1);
  CHECK(a5cd[1].size == 60);
}

TEST_CASE("parallel and serial spectra agree") {
#ifdef CDLAT_HAVE_OPENMP
  omp_set_num_threads(4);
#endif
  const Group g = g_of("S3 x D10");
  const auto lat = all_subgroups(g);
  const auto a = spectrum(g, lat, ExecPolicy::serial);
  const auto b = spectrum(g, lat, ExecPolicy::parallel);
  CHECK(a.im == b.im);
  for (std::size_t i = 0; i < a.records.size(); ++i) CHECK(a.records[i].measure == b.records[i].measure);
}

TEST_CASE("class rows aggregate conjugacy classes") {
  const Group g = make_dihedral(6);
  const auto lat = all_subgroups(g);
  const auto rows = class_rows(lat, spectrum(g, lat));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].h_order == 1);
  CHECK(rows[0].measure == 6);
  CHECK(rows[1].h_order == 2);
  CHECK(rows[1].class_size == 3);
  CHECK(rows[1].measure == 4);
  CHECK(rows[3].measure == 6);
}

TEST_CASE("divisor bound") {
  CHECK(divisor_pair_bound(6, 6) == 7);
  CHECK(divisor_pair_bound(6, 1) == 4);
  CHECK(divisor_pair_bound(1, 1) == 1);
  const auto b = check_divisor_bound(make_cyclic(6), 4);
  CHECK(b.bound == 7);
  CHECK(b.holds);
  CHECK(check_divisor_bound(make_symmetric(3), 3).bound == 4);
}

TEST_CASE("measure overflow is checked") {
  CHECK(chermak_delgado_measure(5000, 5000) == 25000000);
  CHECK_THROWS(chermak_delgado_measure(std::size_t{1} << 40, std::size_t{1} << 40));
}
