#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cdlat/cache.hpp"
#include "cdlat/spec.hpp"
#include "cdlat/workspace.hpp"

using namespace cdlat;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("cdlat-cache-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << text;
}

}  // namespace

TEST_CASE("empty cache misses") {
  TempDir d;
  LatticeCache c(d.path);
  CHECK_FALSE(c.get(make_dihedral(8)).has_value());
  CHECK(c.stats().entries == 0);
}

TEST_CASE("put then get preserves the canonical lattice") {
  TempDir d;
  LatticeCache c(d.path / "nested");
  const Group g = build(parse_spec("S3 x D10"));
  const SubgroupLattice lat = all_subgroups(g);
  c.put(lat);
  CHECK(fs::exists(c.path_for(g.hash())));
  const auto back = c.get(g);
  REQUIRE(back.has_value());
  REQUIRE(back->size() == lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i) CHECK(back->subgroups[i] == lat.subgroups[i]);
  CHECK(back->classes == lat.classes);
  CHECK(back->class_of == lat.class_of);
  CHECK(c.stats().entries == 1);
  // no temporary files left behind
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(c.dir())) {
    (void)e;
    ++files;
  }
  CHECK(files == 1);
}

TEST_CASE("a different group with the same file name is rejected") {
  TempDir d;
  LatticeCache c(d.path);
  const Group a = make_cyclic(6), b = make_dihedral(6);
  c.put(all_subgroups(a));
  fs::copy_file(c.path_for(a.hash()), c.path_for(b.hash()));
  CHECK_FALSE(c.get(b).has_value());
}

TEST_CASE("version mismatch misses and leaves the file untouched") {
  TempDir d;
  LatticeCache c(d.path);
  const Group g = make_dihedral(8);
  c.put(all_subgroups(g));
  const fs::path p = c.path_for(g.hash());
  std::string text = slurp(p);
  const auto pos = text.find("\"version\":1");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 11, "\"version\":2");
  spit(p, text);
  CHECK_FALSE(c.get(g).has_value());
  CHECK(slurp(p) == text);
}

TEST_CASE("corrupt files are ignored and recomputed") {
  TempDir d;
  const Group g = make_dihedral(12);
  LatticeCache c(d.path);
  spit(c.path_for(g.hash()), "{not json");
  CHECK_FALSE(c.get(g).has_value());

  WorkspaceOptions opts;
  opts.cache_dir = d.path;
  Workspace ws(opts);
  CHECK(ws.lattice(g).size() == 16);
  // the workspace rewrote a good entry
  CHECK(c.get(g).has_value());
}

TEST_CASE("truncated subgroup lists and bad bitsets are rejected") {
  TempDir d;
  LatticeCache c(d.path);
  const Group g = make_dihedral(8);
  c.put(all_subgroups(g));
  const fs::path p = c.path_for(g.hash());
  std::string text = slurp(p);
  const auto pos = text.find("\"subgroups\":[\"");
  REQUIRE(pos != std::string::npos);
  text.replace(pos + 14, 2, "zz");
  spit(p, text);
  CHECK_FALSE(c.get(g).has_value());
}

TEST_CASE("gc removes stale and corrupt entries only") {
  TempDir d;
  LatticeCache c(d.path);
  const Group g = make_cyclic(12);
  c.put(all_subgroups(g));
  spit(d.path / "deadbeef.json", "garbage");
  spit(d.path / ".tmp-abc-1-0", "partial");
  CHECK(c.gc() == 2);
  CHECK(c.stats().entries == 1);
  CHECK(c.get(g).has_value());
}

TEST_CASE("default directory honours CDLAT_CACHE") {
  ::setenv("CDLAT_CACHE", "/tmp/somewhere", 1);
  CHECK(default_cache_dir() == fs::path("/tmp/somewhere"));
  ::unsetenv("CDLAT_CACHE");
  CHECK(default_cache_dir() == fs::path(".cdlat-cache"));
}
