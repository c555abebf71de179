#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdlat/group.hpp"
#include "cdlat/harness.hpp"
#include "cdlat/measure.hpp"
#include "cdlat/subgroup.hpp"

namespace cdlat {

enum class ReportFormat { json, csv, md };

std::optional<ReportFormat> parse_report_format(std::string_view text);

/// Quotes a CSV field when it holds a comma, quote or line break.
std::string csv_field(std::string_view s);

struct GroupSummary {
  std::string spec;
  std::string group_hash;
  std::size_t order = 0;
  std::size_t center_order = 0;
  bool abelian = false;
  bool nilpotent = false;
  std::optional<std::size_t> nilpotency_class;
  bool maximal_class = false;
};

GroupSummary summarize(const Group& g);

// Every renderer returns the full text including a trailing newline; output is a pure function of its inputs.
std::string render_show(const GroupSummary& s, ReportFormat f);
std::string render_spectrum(const Group& g, const SubgroupLattice& lattice, const SpectrumReport& report,
                            ReportFormat f);
std::string render_lattice(const Group& g, const SubgroupLattice& lattice, ReportFormat f);
std::string render_verification(const VerificationReport& r, ReportFormat f);
std::string render_survey(const std::vector<SurveyRow>& rows, ReportFormat f);

}  // namespace cdlat
