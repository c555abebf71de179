#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cdlat/group.hpp"
#include "cdlat/subgroup.hpp"
#include "cdlat/workspace.hpp"

namespace cdlat {

/// Largest |Im(m_G)| over groups of order p^k: k+1 for k<5, 6 for k=5, 2k-4 for k>5.
std::uint64_t predict_immax_prime_power(std::uint64_t p, std::uint64_t k);
/// Largest |Im(m_G)| over nilpotent groups of order n: product over p^k || n of the prime-power value.
std::uint64_t predict_immax_nilpotent(std::uint64_t n);
/// 2^s for squarefree n with s prime factors.
std::uint64_t predict_immax_squarefree(std::uint64_t n);
/// |Im(m_G)| of D_{2n}: 2tau(n)-1, 2tau(n)-2, 2tau(n)-4 for n = 2^l k with l = 0, 1, >= 2.
std::uint64_t predict_im_dihedral(std::uint64_t n);

struct TheoremAClass {
  bool qualifies = false;
  std::string reason;
};

/// Whether a group of order p^k has the shape that attains the prime-power maximum:
/// abelian when k<5; maximal class with an abelian maximal subgroup and a uniform element of order p when k>5;
/// either when k=5.
TheoremAClass classify_theorem_a(const Group& g, const SubgroupLattice& lattice);
TheoremAClass classify_theorem_a(const Group& g);

struct InstanceResult {
  std::string name;
  std::uint64_t predicted = 0;
  std::uint64_t computed = 0;
  /// How computed is compared to predicted: "eq", "le", "lt" or "ge".
  std::string relation;
  bool pass = false;
  /// Not evaluated; counted as passing and flagged in the report.
  bool skipped = false;
  std::string note;
};

struct VerificationReport {
  std::string claim_id;
  std::vector<InstanceResult> instances;
  bool overall_pass = false;
};

const std::vector<std::string>& claim_ids();
bool is_claim_id(std::string_view id);

/// Runs one claim. Throws InvalidParameter on an unknown id.
VerificationReport verify(std::string_view claim_id, Workspace& ws);

VerificationReport verify_theorem_a(Workspace& ws);
VerificationReport verify_theorem_b(Workspace& ws);
VerificationReport verify_theorem_c(Workspace& ws);
VerificationReport verify_dihedral_formula(Workspace& ws, std::uint64_t n_max = 100);
VerificationReport verify_example_60(Workspace& ws);
VerificationReport verify_bounds_section4(Workspace& ws);
VerificationReport verify_s3xd10_table(Workspace& ws);
VerificationReport verify_cd_closure(Workspace& ws);
VerificationReport verify_invariants(Workspace& ws);

struct SurveyRow {
  std::string name;
  std::uint64_t order = 0;
  std::size_t im_count = 0;
  std::uint64_t predicted_bound = 0;
  /// "thmA", "thmB", "thmC" or "thm4.1".
  std::string bound_source;
  bool attains = false;
};

/// One row per catalog group with lo <= order <= hi, in increasing order (catalog order within an order).
std::vector<SurveyRow> survey(Workspace& ws, std::uint64_t lo, std::uint64_t hi);

}  // namespace cdlat
