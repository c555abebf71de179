#include "cdlat/catalog.hpp"

#include <algorithm>
#include <functional>

namespace cdlat {

bool CatalogEntry::has_tag(std::string_view t) const {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

namespace {

Expectation published(std::size_t im, std::string citation) { return {im, Provenance::published, std::move(citation)}; }
Expectation derived(std::size_t im) { return {im, Provenance::derived, {}}; }

class Builder {
 public:
  std::vector<CatalogEntry> entries;

  /// Adds text (named by its canonical rendering unless `name` is given), merging tags on repeats.
  void add(const std::string& text, std::vector<std::string> tags, std::optional<Expectation> expected = std::nullopt,
           std::string name = {}) {
    GroupSpec s = parse_spec(text);
    if (name.empty()) name = render(s);
    auto it = std::find_if(entries.begin(), entries.end(), [&](const CatalogEntry& e) { return e.name == name; });
    if (it != entries.end()) {
      for (auto& t : tags)
        if (!it->has_tag(t)) it->tags.push_back(std::move(t));
      if (expected && !it->expected) it->expected = std::move(expected);
      return;
    }
    entries.push_back({std::move(name), std::move(s), std::move(expected), std::move(tags)});
  }
};

/// Partitions of k as non-increasing part lists.
void partitions(unsigned k, unsigned max_part, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(k, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(k - part, part, cur, out);
    cur.pop_back();
  }
}

void add_abelian_p_groups(Builder& b, unsigned p, unsigned max_k) {
  for (unsigned k = 1; k <= max_k; ++k) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    partitions(k, k, cur, parts);
    for (const auto& lambda : parts) {
      std::string text;
      if (lambda.size() == 1) {
        std::uint64_t q = 1;
        for (unsigned i = 0; i < lambda[0]; ++i) q *= p;
        text = "C" + std::to_string(q);
      } else {
        text = "Ab(";
        for (std::size_t i = 0; i < lambda.size(); ++i) {
          std::uint64_t q = 1;
          for (unsigned j = 0; j < lambda[i]; ++j) q *= p;
          text += (i ? "," : "") + std::to_string(q);
        }
        text += ")";
      }
      b.add(text, {"pgroup", "abelian", "thmA"},
            published(k + 1, "abelian group of order p^k has exactly k+1 distinct measures"));
    }
  }
}

std::vector<CatalogEntry> make_catalog() {
  Builder b;

  add_abelian_p_groups(b, 2, 7);
  add_abelian_p_groups(b, 3, 5);
  b.add("C5", {"pgroup", "abelian", "thmA", "squarefree", "thmC"},
        published(2, "abelian group of order p^k has exactly k+1 distinct measures"));
  b.add("C7", {"pgroup", "abelian", "thmA", "squarefree", "thmC"},
        published(2, "abelian group of order p^k has exactly k+1 distinct measures"));

  const std::string p3 = "non-abelian group of order p^3 has exactly 2 distinct measures";
  const std::string dih = "D_{2n}: 2tau(n)-1, 2tau(n)-2 or 2tau(n)-4 as n is odd, 2 mod 4, or 0 mod 4";
  const std::vector<std::string> pg{"pgroup", "nonabelian", "thmA"};

  // order p^3
  b.add("D8", pg, published(2, p3));
  b.add("Q8", pg, published(2, p3));
  b.add("Jp(3,2)", pg, published(2, p3));
  b.add("(C9 : C3 @ 4)", pg, published(2, p3), "M27");
  b.add("Jp(5,2)", pg, published(2, p3));
  // order 16
  b.add("D16", pg, published(4, dih));
  b.add("Q16", pg, derived(3));
  b.add("(C8 : C2 @ 3)", pg, derived(4), "SD16");
  b.add("(C8 : C2 @ 5)", pg, derived(3), "M16");
  b.add("C2 x D8", pg);
  b.add("C2 x Q8", pg);
  b.add("(C4 : C4 @ 3)", pg);
  // order 32
  b.add("D32", pg, published(6, dih));
  b.add("Q32", pg, derived(5));
  b.add("(C16 : C2 @ 7)", pg, derived(6), "SD32");
  b.add("(C16 : C2 @ 9)", pg, std::nullopt, "M32");
  b.add("C2 x D16", pg);
  b.add("C4 x D8", pg);
  b.add("Ab(2,2) x D8", pg);
  b.add("(C8 : C4 @ 3)", pg);
  b.add("(C8 : C4 @ 5)", pg);
  // order 64
  b.add("D64", pg, published(8, dih));
  b.add("Q64", pg);
  b.add("(C32 : C2 @ 15)", pg, std::nullopt, "SD64");
  b.add("(C32 : C2 @ 17)", pg, std::nullopt, "M64");
  b.add("C2 x D32", pg);
  b.add("C2 x Q32", pg);
  b.add("Ab(2,2,2) x D8", pg);
  // order 81
  b.add("Jp(3,3)", pg, derived(4));
  b.add("C3 x Jp(3,2)", pg);
  b.add("(C27 : C3 @ 10)", pg, std::nullopt, "M81");
  b.add("(C9 : C9 @ 4)", pg);
  // order 128
  b.add("D128", pg, published(10, dih));
  b.add("Q128", pg);
  b.add("(C64 : C2 @ 31)", pg, std::nullopt, "SD128");
  b.add("(C64 : C2 @ 33)", pg, std::nullopt, "M128");
  b.add("C2 x D64", pg);
  // order 243
  b.add("C3 x Jp(3,3)", pg);
  b.add("C9 x Jp(3,2)", pg);
  b.add("(C81 : C3 @ 28)", pg, std::nullopt, "M243");
  // order 625
  b.add("Jp(5,3)", pg);
  // odd p with k > 5: listed so reports show them as skipped
  b.add("Jp(5,5)", {"pgroup", "nonabelian", "thmA", "scale"});
  b.add("Ab(9,9,9)", {"pgroup", "abelian", "thmA", "scale"});

  // squarefree orders, complete up to isomorphism for 6, 10, 15, 21, 30
  const std::vector<std::string> sf{"squarefree", "thmC"};
  const std::string thm_c = "squarefree order with s primes: 2^s exactly for the abelian group";
  b.add("C2", sf);
  b.add("C3", sf);
  b.add("C6", sf, published(4, thm_c));
  b.add("S3", sf, published(3, dih));
  b.add("C10", sf, published(4, thm_c));
  b.add("D10", sf, published(3, dih));
  b.add("C15", sf, published(4, thm_c));
  b.add("C21", sf, published(4, thm_c));
  b.add("(C7 : C3 @ 2)", sf);
  b.add("C30", sf, published(8, thm_c));
  b.add("D30", sf, published(7, dih));
  b.add("C3 x D10", sf, derived(6));
  b.add("C5 x S3", sf, derived(6));

  // order 60: the 11 non-nilpotent groups, then the two nilpotent ones
  b.add("A5", {"ex60", "ex60:1"}, published(8, "the non-solvable group of order 60 has 8 distinct measures"));
  b.add("(C15 : C4 @ 2)", {"ex60", "ex60:2"}, derived(9));
  b.add("(C15 : C4 @ 14)", {"ex60", "ex60:3"}, derived(11));
  b.add("C5 x (C3 : C4 @ 2)", {"ex60", "ex60:4"}, derived(10));
  b.add("C3 x (C5 : C4 @ 2)", {"ex60", "ex60:5"}, derived(10));
  b.add("C3 x (C5 : C4 @ 4)", {"ex60", "ex60:6"}, derived(10));
  b.add("C5 x A4", {"ex60", "ex60:7"}, published(8, "C5 x A4 has 2*4 = 8 distinct measures"));
  b.add("C6 x D10", {"ex60", "ex60:8"}, derived(12));
  b.add("C10 x S3", {"ex60", "ex60:9"}, derived(12));
  b.add("D60", {"ex60", "ex60:10"}, published(14, "D60 is the unique group of order 60 with 14 distinct measures"));
  b.add("S3 x D10", {"ex60", "ex60:11"}, published(13, "S3 x D10 has 13 distinct measures"));
  b.add("C60", {"ex60", "ex60:12", "nilpotent"}, published(12, "nilpotent groups of order 60 have at most 12"));
  b.add("Ab(2,30)", {"ex60", "ex60:13", "nilpotent"}, derived(12));

  // nilpotent, composite order
  const std::vector<std::string> nil{"nilpotent"};
  b.add("C4 x C15", nil, published(12, "nilpotent groups of order 60 have at most 12"));
  b.add("Ab(2,2,15)", nil, derived(12));
  b.add("D8 x C3", nil, derived(4));
  b.add("Q8 x C3", nil, derived(4));
  b.add("D8 x C5", nil);
  b.add("Ab(6,6)", nil);
  b.add("C12", nil);
  b.add("D16 x C3", nil);
  b.add("Jp(3,2) x C4", nil);
  b.add("C8 x C9", nil);
  b.add("D8 x C9", nil);
  b.add("C32 x C3", nil);
  b.add("D32 x C3", nil);
  b.add("Q32 x C3", nil);
  b.add("(C16 : C2 @ 7) x C3", nil);
  b.add("D64 x C3", nil);
  b.add("Jp(3,2) x D8", nil);

  // assorted non-nilpotent groups
  const std::vector<std::string> misc{"misc"};
  b.add("A4", misc, published(4, "A4 has 4 distinct measures"));
  b.add("S4", misc);
  b.add("D12", misc, published(6, dih));
  b.add("D18", misc, published(5, dih));
  b.add("D24", misc, published(8, dih));
  b.add("(C3 : C4 @ 2)", misc);
  b.add("(C5 : C4 @ 2)", misc);
  b.add("(C5 : C4 @ 4)", misc);
  b.add("(C13 : C3 @ 3)", misc);
  b.add("(C9 : C2 @ 8)", misc);
  b.add("(C9 : C6 @ 2)", misc);
  b.add("C2 x S3", misc);
  b.add("S3 x S3", misc);
  b.add("A4 x C2", misc);
  b.add("S4 x C2", misc);
  b.add("Q12", misc);
  b.add("Perm(4|(0 1 2 3),(0 1))", misc, std::nullopt, "S4perm");
  return b.entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

std::vector<const CatalogEntry*> catalog_with_tag(std::string_view tag) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog())
    if (e.has_tag(tag)) out.push_back(&e);
  return out;
}

}  // namespace cdlat
