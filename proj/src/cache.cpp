#include "cdlat/cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include <json.hpp>

#include "cdlat/errors.hpp"

namespace cdlat {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path default_cache_dir() {
  if (const char* env = std::getenv("CDLAT_CACHE"); env && *env) return env;
  return ".cdlat-cache";
}

LatticeCache::LatticeCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path LatticeCache::path_for(const GroupHash& hash) const { return dir_ / (hash.hex() + ".json"); }

namespace {

std::optional<json> read_json(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  try {
    return json::parse(in);
  } catch (const json::exception&) {
    return json();  // null marks a parse failure
  }
}

void warn(const fs::path& p, const std::string& why) {
  std::cerr << "cdlat: warning: ignoring cache file " << p.string() << ": " << why << "\n";
}

}  // namespace

std::optional<SubgroupLattice> LatticeCache::get(const Group& g) const {
  const fs::path p = path_for(g.hash());
  std::error_code ec;
  if (!fs::exists(p, ec)) return std::nullopt;
  auto doc = read_json(p);
  if (!doc) return std::nullopt;
  if (doc->is_null() || !doc->is_object()) {
    warn(p, "not valid JSON");
    return std::nullopt;
  }
  try {
    if (doc->at("version").get<int>() != kCacheVersion) return std::nullopt;
    if (doc->at("group_hash").get<std::string>() != g.hash().hex()) {
      warn(p, "hash mismatch");
      return std::nullopt;
    }
    if (doc->at("order").get<std::size_t>() != g.order()) {
      warn(p, "order mismatch");
      return std::nullopt;
    }
    SubgroupLattice lat;
    lat.parent = g.hash();
    lat.group_order = g.order();
    for (const auto& h : doc->at("subgroups")) {
      Bitset b(g.order());
      if (!Bitset::from_hex(h.get<std::string>(), g.order(), b)) {
        warn(p, "malformed subgroup bitset");
        return std::nullopt;
      }
      std::size_t n = b.count();
      lat.subgroups.push_back({g.hash(), std::move(b), n});
    }
    for (std::size_t i = 1; i < lat.subgroups.size(); ++i)
      if (!canonical_less(lat.subgroups[i - 1], lat.subgroups[i])) {
        warn(p, "subgroups not in canonical order");
        return std::nullopt;
      }
    lat.class_of.assign(lat.subgroups.size(), SIZE_MAX);
    for (const auto& c : doc->at("classes")) {
      std::vector<std::size_t> cls = c.get<std::vector<std::size_t>>();
      for (std::size_t i : cls) {
        if (i >= lat.subgroups.size() || lat.class_of[i] != SIZE_MAX) {
          warn(p, "malformed class partition");
          return std::nullopt;
        }
        lat.class_of[i] = lat.classes.size();
      }
      lat.classes.push_back(std::move(cls));
    }
    for (std::size_t c : lat.class_of)
      if (c == SIZE_MAX) {
        warn(p, "class partition incomplete");
        return std::nullopt;
      }
    return lat;
  } catch (const json::exception& e) {
    warn(p, e.what());
    return std::nullopt;
  }
}

void LatticeCache::put(const SubgroupLattice& lattice) const {
  json doc;
  doc["version"] = kCacheVersion;
  doc["group_hash"] = lattice.parent.hex();
  doc["order"] = lattice.group_order;
  json subs = json::array();
  for (const auto& s : lattice.subgroups) subs.push_back(s.members.to_hex());
  doc["subgroups"] = std::move(subs);
  doc["classes"] = lattice.classes;

  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw Error("cannot create cache directory " + dir_.string() + ": " + ec.message());

  static std::atomic<unsigned> counter{0};
  const fs::path target = path_for(lattice.parent);
  std::ostringstream tmp_name;
  tmp_name << ".tmp-" << lattice.parent.hex().substr(0, 16) << "-" << ::getpid() << "-" << counter++;
  const fs::path tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    out << doc.dump();
    if (!out.flush()) throw Error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error("cannot install cache file " + target.string());
  }
}

CacheStats LatticeCache::stats() const {
  CacheStats s;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return s;
  for (const auto& e : fs::directory_iterator(dir_, ec)) {
    if (!e.is_regular_file() || e.path().extension() != ".json") continue;
    ++s.entries;
    s.bytes += e.file_size();
  }
  return s;
}

std::size_t LatticeCache::gc() const {
  std::size_t removed = 0;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return 0;
  std::vector<fs::path> doomed;
  for (const auto& e : fs::directory_iterator(dir_, ec)) {
    if (!e.is_regular_file()) continue;
    const fs::path& p = e.path();
    if (p.filename().string().rfind(".tmp-", 0) == 0) {
      doomed.push_back(p);
      continue;
    }
    if (p.extension() != ".json") continue;
    auto doc = read_json(p);
    bool keep = doc && doc->is_object() && doc->contains("version") && (*doc)["version"] == kCacheVersion &&
                doc->contains("group_hash") && (*doc)["group_hash"].is_string() &&
                (*doc)["group_hash"].get<std::string>() + ".json" == p.filename().string();
    if (!keep) doomed.push_back(p);
  }
  for (const auto& p : doomed)
    if (fs::remove(p, ec)) ++removed;
  return removed;
}

}  // namespace cdlat
