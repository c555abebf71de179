#include "cdlat/report.hpp"

#include <sstream>

#include <json.hpp>

#include "cdlat/structure.hpp"

namespace cdlat {

using nlohmann::ordered_json;

std::optional<ReportFormat> parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::json;
  if (text == "csv") return ReportFormat::csv;
  if (text == "md") return ReportFormat::md;
  return std::nullopt;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

std::string md_cell(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string join_ints(const std::vector<std::uint64_t>& xs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::to_string(xs[i]);
  return s;
}

}  // namespace

GroupSummary summarize(const Group& g) {
  GroupSummary s;
  s.spec = g.label();
  s.group_hash = g.hash().hex();
  s.order = g.order();
  s.center_order = center(g).size;
  s.abelian = g.is_abelian();
  const LowerCentralSeries lcs = lower_central_series(g);
  s.nilpotent = lcs.nilpotent;
  s.nilpotency_class = lcs.nilpotency_class;
  s.maximal_class = is_maximal_class(g);
  return s;
}

std::string render_show(const GroupSummary& s, ReportFormat f) {
  const std::string cls = s.nilpotency_class ? std::to_string(*s.nilpotency_class) : "";
  switch (f) {
    case ReportFormat::json: {
      ordered_json j;
      j["spec"] = s.spec;
      j["group_hash"] = s.group_hash;
      j["order"] = s.order;
      j["center_order"] = s.center_order;
      j["class"] = s.nilpotency_class ? ordered_json(*s.nilpotency_class) : ordered_json(nullptr);
      j["abelian"] = s.abelian;
      j["nilpotent"] = s.nilpotent;
      j["maximal_class"] = s.maximal_class;
      return dump(j);
    }
    case ReportFormat::csv: {
      std::ostringstream o;
      o << "spec,group_hash,order,center_order,class,abelian,nilpotent,maximal_class\n"
        << csv_field(s.spec) << ',' << s.group_hash << ',' << s.order << ',' << s.center_order << ',' << cls << ','
        << yes_no(s.abelian) << ',' << yes_no(s.nilpotent) << ',' << yes_no(s.maximal_class) << '\n';
      return o.str();
    }
    case ReportFormat::md: {
      std::ostringstream o;
      o << "| field | value |\n|---|---|\n"
        << "| spec | " << md_cell(s.spec) << " |\n"
        << "| group_hash | " << s.group_hash << " |\n"
        << "| order | " << s.order << " |\n"
        << "| center_order | " << s.center_order << " |\n"
        << "| class | " << (cls.empty() ? "not nilpotent" : cls) << " |\n"
        << "| abelian | " << yes_no(s.abelian) << " |\n"
        << "| nilpotent | " << yes_no(s.nilpotent) << " |\n"
        << "| maximal_class | " << yes_no(s.maximal_class) << " |\n";
      return o.str();
    }
  }
  return {};
}

std::string render_spectrum(const Group& g, const SubgroupLattice& lattice, const SpectrumReport& report,
                            ReportFormat f) {
  const std::vector<ClassRow> rows = class_rows(lattice, report);
  const std::size_t z = center(g).size;
  switch (f) {
    case ReportFormat::json: {
      ordered_json j;
      j["spec"] = g.label();
      j["order"] = g.order();
      j["center_order"] = z;
      ordered_json classes = ordered_json::array();
      for (const ClassRow& r : rows)
        classes.push_back({{"h_order", r.h_order},
                           {"class_size", r.class_size},
                           {"centralizer_order", r.centralizer_order},
                           {"measure", r.measure}});
      j["classes"] = std::move(classes);
      j["im"] = report.im;
      j["im_count"] = report.im_count;
      j["cd_measure"] = report.max_measure;
      j["cd_member_count"] = report.cd_members.size();
      return dump(j);
    }
    case ReportFormat::csv: {
      std::ostringstream o;
      o << "h_order,class_size,centralizer_order,measure\n";
      for (const ClassRow& r : rows)
        o << r.h_order << ',' << r.class_size << ',' << r.centralizer_order << ',' << r.measure << '\n';
      return o.str();
    }
    case ReportFormat::md: {
      std::ostringstream o;
      o << "**" << md_cell(g.label()) << "**: order " << g.order() << ", |Z| = " << z << ", im_count = "
        << report.im_count << ", CD measure = " << report.max_measure << " (" << report.cd_members.size()
        << " members)\n\n"
        << "Im = {" << join_ints(report.im, ", ") << "}\n\n"
        << "| \\|H\\| | class size | \\|C_G(H)\\| | measure |\n|---:|---:|---:|---:|\n";
      for (const ClassRow& r : rows)
        o << "| " << r.h_order << " | " << r.class_size << " | " << r.centralizer_order << " | " << r.measure
          << " |\n";
      return o.str();
    }
  }
  return {};
}

std::string render_lattice(const Group& g, const SubgroupLattice& lattice, ReportFormat f) {
  switch (f) {
    case ReportFormat::json: {
      ordered_json j;
      j["spec"] = g.label();
      j["order"] = g.order();
      j["subgroup_count"] = lattice.size();
      j["class_count"] = lattice.classes.size();
      ordered_json subs = ordered_json::array();
      for (std::size_t i = 0; i < lattice.size(); ++i)
        subs.push_back({{"index", i},
                        {"order", lattice.subgroups[i].size},
                        {"class", lattice.class_of[i]},
                        {"members", lattice.subgroups[i].members.to_hex()}});
      j["subgroups"] = std::move(subs);
      j["classes"] = lattice.classes;
      return dump(j);
    }
    case ReportFormat::csv: {
      std::ostringstream o;
      o << "index,order,class,members\n";
      for (std::size_t i = 0; i < lattice.size(); ++i)
        o << i << ',' << lattice.subgroups[i].size << ',' << lattice.class_of[i] << ','
          << lattice.subgroups[i].members.to_hex() << '\n';
      return o.str();
    }
    case ReportFormat::md: {
      std::ostringstream o;
      o << "**" << md_cell(g.label()) << "**: " << lattice.size() << " subgroups in " << lattice.classes.size()
        << " conjugacy classes\n\n| class | \\|H\\| | class size | first index |\n|---:|---:|---:|---:|\n";
      for (std::size_t c = 0; c < lattice.classes.size(); ++c)
        o << "| " << c << " | " << lattice.subgroups[lattice.classes[c].front()].size << " | "
          << lattice.classes[c].size() << " | " << lattice.classes[c].front() << " |\n";
      return o.str();
    }
  }
  return {};
}

std::string render_verification(const VerificationReport& r, ReportFormat f) {
  switch (f) {
    case ReportFormat::json: {
      ordered_json j;
      j["claim_id"] = r.claim_id;
      j["overall_pass"] = r.overall_pass;
      ordered_json xs = ordered_json::array();
      for (const auto& i : r.instances) {
        ordered_json x;
        x["name"] = i.name;
        x["predicted"] = i.predicted;
        x["computed"] = i.computed;
        x["relation"] = i.relation;
        x["pass"] = i.pass;
        if (i.skipped) x["skipped"] = true;
        if (!i.note.empty()) x["note"] = i.note;
        xs.push_back(std::move(x));
      }
      j["instances"] = std::move(xs);
      return dump(j);
    }
    case ReportFormat::csv: {
      std::ostringstream o;
      o << "name,predicted,computed,relation,pass,skipped,note\n";
      for (const auto& i : r.instances)
        o << csv_field(i.name) << ',' << i.predicted << ',' << i.computed << ',' << i.relation << ','
          << yes_no(i.pass) << ',' << yes_no(i.skipped) << ',' << csv_field(i.note) << '\n';
      return o.str();
    }
    case ReportFormat::md: {
      std::ostringstream o;
      o << "**" << r.claim_id << "**: " << (r.overall_pass ? "PASS" : "FAIL") << " (" << r.instances.size()
        << " instances)\n\n| instance | predicted | computed | relation | result | note |\n|---|---:|---:|---|---|---|\n";
      for (const auto& i : r.instances)
        o << "| " << md_cell(i.name) << " | " << i.predicted << " | " << (i.skipped ? "-" : std::to_string(i.computed))
          << " | " << i.relation << " | " << (i.skipped ? "skipped" : i.pass ? "pass" : "FAIL") << " | "
          << md_cell(i.note) << " |\n";
      return o.str();
    }
  }
  return {};
}

std::string render_survey(const std::vector<SurveyRow>& rows, ReportFormat f) {
  switch (f) {
    case ReportFormat::json: {
      ordered_json j = ordered_json::array();
      for (const auto& r : rows)
        j.push_back({{"name", r.name},
                     {"order", r.order},
                     {"im_count", r.im_count},
                     {"predicted_bound", r.predicted_bound},
                     {"bound_source", r.bound_source},
                     {"attains", r.attains}});
      return dump(j);
    }
    case ReportFormat::csv: {
      std::ostringstream o;
      o << "name,order,im_count,predicted_bound,bound_source,attains\n";
      for (const auto& r : rows)
        o << csv_field(r.name) << ',' << r.order << ',' << r.im_count << ',' << r.predicted_bound << ','
          << r.bound_source << ',' << yes_no(r.attains) << '\n';
      return o.str();
    }
    case ReportFormat::md: {
      std::ostringstream o;
      o << "| name | order | im_count | predicted_bound | bound_source | attains |\n|---|---:|---:|---:|---|---|\n";
      for (const auto& r : rows)
        o << "| " << md_cell(r.name) << " | " << r.order << " | " << r.im_count << " | " << r.predicted_bound << " | "
          << r.bound_source << " | " << yes_no(r.attains) << " |\n";
      return o.str();
    }
  }
  return {};
}

}  // namespace cdlat
