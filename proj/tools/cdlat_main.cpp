#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <regex>
#include <string>

#include <CLI11.hpp>

#include "cdlat/cache.hpp"
#include "cdlat/errors.hpp"
#include "cdlat/harness.hpp"
#include "cdlat/report.hpp"
#include "cdlat/spec.hpp"
#include "cdlat/workspace.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSize = 3;

struct Globals {
  std::string format;
  std::size_t max_order = cdlat::kDefaultMaxOrder;
  std::size_t max_subgroups = cdlat::kDefaultSubgroupCap;
  bool no_cache = false;
  bool serial = false;
  std::string cache_dir;
};

std::filesystem::path cache_dir_of(const Globals& g) {
  return g.cache_dir.empty() ? cdlat::default_cache_dir() : std::filesystem::path(g.cache_dir);
}

cdlat::Workspace make_workspace(const Globals& g) {
  cdlat::WorkspaceOptions opts;
  opts.limits.max_order = g.max_order;
  opts.subgroup_cap = g.max_subgroups;
  opts.policy = g.serial ? cdlat::ExecPolicy::serial : cdlat::ExecPolicy::parallel;
  if (!g.no_cache) opts.cache_dir = cache_dir_of(g);
  return cdlat::Workspace(opts);
}

cdlat::ReportFormat format_of(const Globals& g, cdlat::ReportFormat fallback) {
  if (g.format.empty()) return fallback;
  return *cdlat::parse_report_format(g.format);
}

bool parse_range(const std::string& text, std::uint64_t& lo, std::uint64_t& hi) {
  static const std::regex re(R"(\s*(\d+)\s*\.\.\s*(\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) return false;
  try {
    lo = std::stoull(m[1]);
    hi = std::stoull(m[2]);
  } catch (const std::exception&) {
    return false;
  }
  return lo <= hi;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chermak-Delgado measures and subgroup lattices of finite groups"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format: json, csv or md")
      ->check(CLI::IsMember({"json", "csv", "md"}));
  app.add_option("--max-order", g.max_order, "Refuse groups larger than this")->check(CLI::PositiveNumber);
  app.add_option("--max-subgroups", g.max_subgroups, "Abort enumeration past this many subgroups")
      ->check(CLI::PositiveNumber);
  app.add_flag("--no-cache", g.no_cache, "Neither read nor write the lattice cache");
  app.add_option("--cache-dir", g.cache_dir, "Lattice cache directory (overrides CDLAT_CACHE)");
  app.add_flag("--serial", g.serial, "Use the serial reference kernels");

  std::string spec_text, claim, orders = "1..64";
  auto* show = app.add_subcommand("show", "Order, center, nilpotency class and structural flags");
  show->add_option("spec", spec_text, "Group specification")->required();
  auto* measures = app.add_subcommand("measures", "Chermak-Delgado measure spectrum");
  measures->add_option("spec", spec_text, "Group specification")->required();
  auto* lattice = app.add_subcommand("lattice", "Subgroups in canonical order with conjugacy classes");
  lattice->add_option("spec", spec_text, "Group specification")->required();
  auto* verify = app.add_subcommand("verify", "Check one claim against brute force");
  verify->add_option("claim", claim, "Claim id")->required()->check(CLI::IsMember(cdlat::claim_ids()));
  auto* survey = app.add_subcommand("survey", "im_count and predicted bound for catalog groups");
  survey->add_option("--orders", orders, "Order range A..B")->capture_default_str();
  auto* cache = app.add_subcommand("cache", "Lattice cache maintenance");
  cache->require_subcommand(1);
  auto* cache_gc = cache->add_subcommand("gc", "Remove unreadable and stale entries");
  auto* cache_stats = cache->add_subcommand("stats", "Entry count and size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*show) {
      cdlat::GroupSpec s = cdlat::parse_spec(spec_text);
      cdlat::BuildLimits limits{g.max_order};
      std::cout << cdlat::render_show(cdlat::summarize(cdlat::build(s, limits)), format_of(g, cdlat::ReportFormat::md));
      return 0;
    }
    if (*measures || *lattice) {
      cdlat::Workspace ws = make_workspace(g);
      const cdlat::Group& grp = ws.group(cdlat::parse_spec(spec_text));
      const auto f = format_of(g, cdlat::ReportFormat::md);
      if (*measures)
        std::cout << cdlat::render_spectrum(grp, ws.lattice(grp), ws.spectrum(grp), f);
      else
        std::cout << cdlat::render_lattice(grp, ws.lattice(grp), f);
      return 0;
    }
    if (*verify) {
      cdlat::Workspace ws = make_workspace(g);
      const cdlat::VerificationReport r = cdlat::verify(claim, ws);
      std::cout << cdlat::render_verification(r, format_of(g, cdlat::ReportFormat::md));
      return r.overall_pass ? 0 : kExitVerifyFailed;
    }
    if (*survey) {
      std::uint64_t lo = 0, hi = 0;
      if (!parse_range(orders, lo, hi)) {
        std::cerr << "cdlat: --orders expects A..B with A <= B, got '" << orders << "'\n";
        return kExitUsage;
      }
      cdlat::Workspace ws = make_workspace(g);
      std::cout << cdlat::render_survey(cdlat::survey(ws, lo, hi), format_of(g, cdlat::ReportFormat::csv));
      return 0;
    }
    if (*cache) {
      cdlat::LatticeCache c(cache_dir_of(g));
      if (*cache_gc) {
        std::cout << "removed " << c.gc() << " entries from " << c.dir().string() << "\n";
      } else if (*cache_stats) {
        const cdlat::CacheStats st = c.stats();
        std::cout << "directory " << c.dir().string() << "\nentries " << st.entries << "\nbytes " << st.bytes << "\n";
      }
      return 0;
    }
  } catch (const cdlat::SpecSyntaxError& e) {
    std::cerr << "cdlat: syntax error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cdlat::SpecSemanticError& e) {
    std::cerr << "cdlat: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cdlat::SizeLimit& e) {
    std::cerr << "cdlat: size guard: " << e.what() << "\n";
    return kExitSize;
  } catch (const cdlat::Explosion& e) {
    std::cerr << "cdlat: subgroup cap: " << e.what() << " (" << e.partial_count() << " found)\n";
    return kExitSize;
  } catch (const cdlat::Error& e) {
    std::cerr << "cdlat: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
