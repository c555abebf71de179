#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cdlat/errors.hpp"
#include "cdlat/group.hpp"

namespace cdlat {

struct GroupSpec;
using SpecPtr = std::shared_ptr<const GroupSpec>;

namespace spec {
struct Cyclic {
  std::uint64_t n = 1;
};
/// Total group order, as in D_{2n}.
struct Dihedral {
  std::uint64_t order = 4;
};
/// Total group order.
struct Dicyclic {
  std::uint64_t order = 8;
};
struct Abelian {
  std::vector<std::uint64_t> invariants;
};
/// (C_m : C_n @ r) with b^-1 a b = a^r.
struct Semidirect {
  std::uint64_t m = 2, n = 1, r = 1;
};
struct Product {
  SpecPtr left, right;
};
/// Generators in disjoint-cycle notation; an empty cycle list is the identity.
struct Perm {
  std::uint32_t degree = 1;
  std::vector<std::vector<std::vector<std::uint32_t>>> generators;
};
struct JordanP {
  std::uint64_t p = 2, m = 2;
};
/// Catalog entry, or A<n> / S<n> for alternating and symmetric groups.
struct Named {
  std::string name;
};
}  // namespace spec

struct GroupSpec {
  std::variant<spec::Cyclic, spec::Dihedral, spec::Dicyclic, spec::Abelian, spec::Semidirect, spec::Product,
               spec::Perm, spec::JordanP, spec::Named>
      node;
};

bool operator==(const GroupSpec& a, const GroupSpec& b);

/// Syntax error with 1-based position and the set of tokens that would have been accepted.
class SpecSyntaxError : public Error {
 public:
  SpecSyntaxError(std::size_t line, std::size_t column, std::set<std::string> expected, const std::string& found);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::set<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t line_, column_;
  std::set<std::string> expected_;
};

/// Well-formed text whose parameters violate a constructor precondition.
class SpecSemanticError : public Error {
 public:
  SpecSemanticError(std::size_t line, std::size_t column, std::string parameter, const std::string& message);
  const std::string& parameter() const noexcept { return parameter_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_, column_;
  std::string parameter_;
};

GroupSpec parse_spec(std::string_view text);
/// Canonical text; parse_spec(render(s)) == s.
std::string render(const GroupSpec& s);

/// Builds the group; its label is the canonical rendering.
Group build(const GroupSpec& s, const BuildLimits& limits = {});

/// Checked group order without building anything (products multiply, named entries resolve).
std::uint64_t projected_order(const GroupSpec& s);

GroupSpec make_product(GroupSpec left, GroupSpec right);

}  // namespace cdlat
