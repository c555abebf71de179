#include <doctest.h>

#include <string>

#include "cdlat/errors.hpp"
#include "cdlat/harness.hpp"
#include "cdlat/spec.hpp"
#include "cdlat/structure.hpp"

using namespace cdlat;

namespace {

Group g_of(const std::string& s) { return build(parse_spec(s)); }

std::vector<std::size_t> series_orders(const Group& g) {
  std::vector<std::size_t> out;
  for (const auto& t : lower_central_series(g).terms) out.push_back(t.size);
  return out;
}

}  // namespace

TEST_CASE("center and commutator subgroup") {
  CHECK(center(g_of("D8")).size == 2);
  CHECK(center(g_of("A5")).size == 1);
  CHECK(center(g_of("C6")).size == 6);
  const Group a4 = g_of("A4");
  CHECK(commutator_subgroup(a4, whole_group(a4), whole_group(a4)).size == 4);
  const Group s4 = g_of("S4");
  CHECK(commutator_subgroup(s4, whole_group(s4), whole_group(s4)).size == 12);
}

TEST_CASE("lower central series") {
  CHECK(series_orders(g_of("D16")) == std::vector<std::size_t>{16, 4, 2, 1});
  const auto d16 = lower_central_series(g_of("D16"));
  CHECK(d16.nilpotent);
  CHECK(d16.nilpotency_class == 3);
  CHECK(d16.term(10).size == 1);
  const auto s3 = lower_central_series(g_of("S3"));
  CHECK_FALSE(s3.nilpotent);
  CHECK_FALSE(s3.nilpotency_class.has_value());
  CHECK(lower_central_series(g_of("C5")).nilpotency_class == 1);
  CHECK(is_nilpotent(g_of("D8 x C3")));
  CHECK_FALSE(is_nilpotent(g_of("A4")));
}

TEST_CASE("maximal class") {
  for (const char* s : {"D8", "Q8", "D16", "Q16", "SD16", "D64", "Jp(3,2)", "Jp(3,3)"}) {
    CAPTURE(s);
    CHECK(is_maximal_class(g_of(s)));
  }
  for (const char* s : {"M16", "C2 x D8", "C16", "Ab(2,2)", "S3", "C3 x Jp(3,2)"}) {
    CAPTURE(s);
    CHECK_FALSE(is_maximal_class(g_of(s)));
  }
}

TEST_CASE("section centralizers and uniform elements") {
  const Group d16 = g_of("D16");  // a^i = i, a^i b = 8 + i
  const Subgroup c2 = section_centralizer(d16, 2);
  CHECK(c2.size == 8);
  for (ElementId x = 0; x < 8; ++x) CHECK(c2.contains(x));
  const UniformElements u = uniform_elements(d16);
  CHECK(u.maximal_class_context);
  CHECK(u.elements.size() == 8);
  for (ElementId x : u.elements) CHECK(x >= 8);
  CHECK(has_uniform_of_order_p(d16));
  CHECK_FALSE(has_uniform_of_order_p(g_of("Q16")));
  CHECK(has_uniform_of_order_p(g_of("SD16")));

  CHECK_THROWS_AS(section_centralizer(g_of("S3"), 2), InvalidParameter);
  CHECK_THROWS_AS(section_centralizer(d16, 3), InvalidParameter);
  CHECK_THROWS_AS(uniform_elements(g_of("C6")), InvalidParameter);
}

TEST_CASE("abelian maximal subgroups") {
  CHECK(abelian_maximal_subgroup(g_of("D16")).has_value());
  CHECK(abelian_maximal_subgroup(g_of("Jp(3,3)")).has_value());
  CHECK(abelian_maximal_subgroup(g_of("Q8")).has_value());
  const Group g = g_of("Jp(3,2) x D8");
  CHECK_THROWS_AS(abelian_maximal_subgroup(g), InvalidParameter);
  // C2 x C2 x D8 has the abelian maximal subgroup C2 x C2 x C4
  CHECK(abelian_maximal_subgroup(g_of("Ab(2,2) x D8"))->size == 16);
}

TEST_CASE("Sylow decomposition of nilpotent groups") {
  const Group g = g_of("D8 x C3");
  const auto syl = sylow_decomposition(g);
  REQUIRE(syl.size() == 2);
  CHECK(syl[0].size == 8);
  CHECK(syl[1].size == 3);
  CHECK(sylow_decomposition(g_of("C60")).size() == 3);
  CHECK_THROWS_AS(sylow_decomposition(g_of("S3")), InvalidState);
}

TEST_CASE("Theorem A classification") {
  CHECK(classify_theorem_a(g_of("C16")).qualifies);
  CHECK(classify_theorem_a(g_of("Ab(2,2,2,2,2)")).qualifies);
  CHECK(classify_theorem_a(g_of("D64")).qualifies);
  CHECK(classify_theorem_a(g_of("D32")).qualifies);
  CHECK(classify_theorem_a(g_of("SD32")).qualifies);
  const auto q64 = classify_theorem_a(g_of("Q64"));
  CHECK_FALSE(q64.qualifies);
  CHECK(q64.reason.find("no uniform element of order p") != std::string::npos);
  CHECK_FALSE(classify_theorem_a(g_of("Q32")).qualifies);
  CHECK_FALSE(classify_theorem_a(g_of("M64")).qualifies);
  CHECK_FALSE(classify_theorem_a(g_of("D16")).qualifies);  // k = 4 requires abelian
  CHECK_FALSE(classify_theorem_a(g_of("Ab(2,2,2,2,2,2)")).qualifies);
  CHECK_THROWS_AS(classify_theorem_a(g_of("C6")), InvalidParameter);
}
