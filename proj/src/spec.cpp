#include "cdlat/spec.hpp"

#include <cctype>
#include <numeric>
#include <optional>
#include <utility>

#include "cdlat/catalog.hpp"
#include "cdlat/numtheory.hpp"

namespace cdlat {

namespace {

std::string join_expected(const std::set<std::string>& e) {
  std::string out;
  for (const auto& s : e) out += (out.empty() ? "" : ", ") + s;
  return out;
}

}  // namespace

SpecSyntaxError::SpecSyntaxError(std::size_t line, std::size_t column, std::set<std::string> expected,
                                 const std::string& found)
    : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": expected one of {" +
            join_expected(expected) + "}, found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

SpecSemanticError::SpecSemanticError(std::size_t line, std::size_t column, std::string parameter,
                                     const std::string& message)
    : Error("invalid parameter '" + parameter + "' at " + std::to_string(line) + ":" + std::to_string(column) + ": " +
            message),
      line_(line),
      column_(column),
      parameter_(std::move(parameter)) {}

bool operator==(const GroupSpec& a, const GroupSpec& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, spec::Cyclic>) return x.n == y.n;
        else if constexpr (std::is_same_v<T, spec::Dihedral> || std::is_same_v<T, spec::Dicyclic>)
          return x.order == y.order;
        else if constexpr (std::is_same_v<T, spec::Abelian>) return x.invariants == y.invariants;
        else if constexpr (std::is_same_v<T, spec::Semidirect>) return x.m == y.m && x.n == y.n && x.r == y.r;
        else if constexpr (std::is_same_v<T, spec::Product>) return *x.left == *y.left && *x.right == *y.right;
        else if constexpr (std::is_same_v<T, spec::Perm>) return x.degree == y.degree && x.generators == y.generators;
        else if constexpr (std::is_same_v<T, spec::JordanP>) return x.p == y.p && x.m == y.m;
        else return x.name == y.name;
      },
      a.node);
}

GroupSpec make_product(GroupSpec left, GroupSpec right) {
  return GroupSpec{spec::Product{std::make_shared<const GroupSpec>(std::move(left)),
                                 std::make_shared<const GroupSpec>(std::move(right))}};
}

namespace {

/// Degree of A<n> / S<n> names, if the name has that shape.
std::optional<std::pair<char, std::uint32_t>> alt_sym_name(std::string_view name) {
  if (name.size() < 2 || (name[0] != 'A' && name[0] != 'S')) return std::nullopt;
  std::uint64_t v = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    v = v * 10 + static_cast<std::uint64_t>(name[i] - '0');
    if (v > 1000) return std::nullopt;
  }
  if (v == 0) return std::nullopt;
  return std::make_pair(name[0], static_cast<std::uint32_t>(v));
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec s = product();
    skip_ws();
    if (pos_ < text_.size()) fail({"x", "end of input"});
    return s;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  struct Pos {
    std::size_t line, column;
  };

  Pos where(std::size_t at) const {
    Pos p{1, 1};
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++p.line;
        p.column = 1;
      } else {
        ++p.column;
      }
    }
    return p;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  std::string found() const {
    if (pos_ >= text_.size()) return "end of input";
    return std::string("'") + text_[pos_] + "'";
  }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    const auto p = where(pos_);
    throw SpecSyntaxError(p.line, p.column, std::move(expected), found());
  }

  [[noreturn]] void semantic(std::size_t at, const std::string& parameter, const std::string& message) const {
    const auto p = where(at);
    throw SpecSemanticError(p.line, p.column, parameter, message);
  }

  void expect(char c) {
    if (!accept(c)) fail({std::string(1, c)});
  }

  std::uint64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (UINT64_MAX - d) / 10) semantic(start, "INT", "integer literal is too large");
      v = v * 10 + d;
      ++pos_;
    }
    if (pos_ == start) fail({"INT"});
    return v;
  }

  bool at_operator_x() {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == 'x';
  }

  GroupSpec product() {
    GroupSpec left = term();
    while (at_operator_x()) {
      ++pos_;
      GroupSpec right = term();
      left = make_product(std::move(left), std::move(right));
    }
    return left;
  }

  GroupSpec term() {
    skip_ws();
    const std::size_t start = pos_;
    if (accept('(')) {
      GroupSpec inner = product();
      if (accept(':')) {
        GroupSpec acting = atom();
        expect('@');
        const std::size_t r_at = (skip_ws(), pos_);
        const std::uint64_t r = integer();
        expect(')');
        const auto* base = std::get_if<spec::Cyclic>(&inner.node);
        const auto* top = std::get_if<spec::Cyclic>(&acting.node);
        if (!base) semantic(start + 1, "m", "semidirect normal factor must be cyclic (C<m>)");
        if (!top) semantic(start + 1, "n", "semidirect acting factor must be cyclic (C<n>)");
        spec::Semidirect sd{base->n, top->n, r};
        validate_semidirect(sd, start, r_at);
        return GroupSpec{sd};
      }
      if (!peek(')')) fail({":", ")", "x"});
      ++pos_;
      return inner;
    }
    return atom();
  }

  void validate_semidirect(const spec::Semidirect& sd, std::size_t start, std::size_t r_at) const {
    if (sd.m < 2) semantic(start + 1, "m", "normal factor order must be at least 2");
    if (sd.r < 1 || sd.r >= sd.m) semantic(r_at, "r", "exponent must satisfy 1 <= r < m");
    if (std::gcd(sd.r, sd.m) != 1) semantic(r_at, "r", "gcd(r, m) must be 1");
    if (pow_mod(sd.r, sd.n, sd.m) != 1) semantic(r_at, "r", "r^n must be 1 mod m");
  }

  std::string word() {
    std::string w;
    while (pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      w.push_back(text_[pos_++]);
    return w;
  }

  static std::set<std::string> atom_starts() {
    return {"C", "D", "Q", "A", "S", "Ab(", "Jp(", "Perm(", "(", "NAME"};
  }

  GroupSpec atom() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string w = word();
    if (w.empty()) fail(atom_starts());
    if (w == "C" || w == "D" || w == "Q" || w == "A" || w == "S") {
      const std::size_t int_at = (skip_ws(), pos_);
      const std::uint64_t v = integer();
      if (w == "C") {
        if (v < 1) semantic(int_at, "n", "cyclic order must be positive");
        return GroupSpec{spec::Cyclic{v}};
      }
      if (w == "D") {
        if (v < 4 || v % 2) semantic(int_at, "order", "dihedral order must be even and at least 4");
        return GroupSpec{spec::Dihedral{v}};
      }
      if (w == "Q") {
        if (v < 8 || v % 4) semantic(int_at, "order", "dicyclic order must be a multiple of 4, at least 8");
        return GroupSpec{spec::Dicyclic{v}};
      }
      if (v < 1 || v > 1000) semantic(int_at, "degree", "degree must be between 1 and 1000");
      return GroupSpec{spec::Named{w + std::to_string(v)}};
    }
    if ((w == "Ab" || w == "Jp" || w == "Perm") && peek('(')) {
      ++pos_;
      if (w == "Ab") return abelian();
      if (w == "Jp") return jordan();
      return perm();
    }
    // NAME: letters followed by optional digits
    std::string name = w;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) name.push_back(text_[pos_++]);
    if (!alt_sym_name(name) && !find_catalog_entry(name)) semantic(start, "NAME", "unknown group name '" + name + "'");
    return GroupSpec{spec::Named{name}};
  }

  GroupSpec abelian() {
    spec::Abelian ab;
    do {
      const std::size_t at = (skip_ws(), pos_);
      const std::uint64_t d = integer();
      if (d < 2) semantic(at, "d" + std::to_string(ab.invariants.size() + 1), "abelian invariants must be at least 2");
      ab.invariants.push_back(d);
    } while (accept(','));
    if (!accept(')')) fail({",", ")"});
    return GroupSpec{ab};
  }

  GroupSpec jordan() {
    const std::size_t p_at = (skip_ws(), pos_);
    const std::uint64_t p = integer();
    expect(',');
    const std::size_t m_at = (skip_ws(), pos_);
    const std::uint64_t m = integer();
    expect(')');
    if (!is_prime(p)) semantic(p_at, "p", "must be prime");
    if (m < 2 || m > p) semantic(m_at, "m", "must satisfy 2 <= m <= p");
    return GroupSpec{spec::JordanP{p, m}};
  }

  GroupSpec perm() {
    spec::Perm pm;
    const std::size_t deg_at = (skip_ws(), pos_);
    const std::uint64_t degree = integer();
    if (degree < 1 || degree > 64) semantic(deg_at, "degree", "permutation degree must be between 1 and 64");
    pm.degree = static_cast<std::uint32_t>(degree);
    expect('|');
    do {
      std::vector<std::vector<std::uint32_t>> gen;
      std::vector<char> used(pm.degree, 0);
      if (!peek('(')) fail({"("});
      while (accept('(')) {
        std::vector<std::uint32_t> cyc;
        while (!accept(')')) {
          const std::size_t at = (skip_ws(), pos_);
          if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail({"INT", ")"});
          const std::uint64_t v = integer();
          if (v >= pm.degree) semantic(at, "point", "point " + std::to_string(v) + " is not below the degree");
          if (used[v]++) semantic(at, "point", "point " + std::to_string(v) + " repeats within a generator");
          cyc.push_back(static_cast<std::uint32_t>(v));
        }
        if (!cyc.empty()) gen.push_back(std::move(cyc));
      }
      pm.generators.push_back(std::move(gen));
    } while (accept(','));
    if (!accept(')')) fail({",", "(", ")"});
    return GroupSpec{pm};
  }
};

std::string render_cycles(const std::vector<std::vector<std::uint32_t>>& gen) {
  if (gen.empty()) return "()";
  std::string out;
  for (const auto& c : gen) {
    out += "(";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + std::to_string(c[i]);
    out += ")";
  }
  return out;
}

}  // namespace

GroupSpec parse_spec(std::string_view text) { return Parser(text).parse(); }

std::string render(const GroupSpec& s) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, spec::Cyclic>) return "C" + std::to_string(x.n);
        else if constexpr (std::is_same_v<T, spec::Dihedral>) return "D" + std::to_string(x.order);
        else if constexpr (std::is_same_v<T, spec::Dicyclic>) return "Q" + std::to_string(x.order);
        else if constexpr (std::is_same_v<T, spec::Abelian>) {
          std::string out = "Ab(";
          for (std::size_t i = 0; i < x.invariants.size(); ++i) out += (i ? "," : "") + std::to_string(x.invariants[i]);
          return out + ")";
        } else if constexpr (std::is_same_v<T, spec::Semidirect>)
          return "(C" + std::to_string(x.m) + " : C" + std::to_string(x.n) + " @ " + std::to_string(x.r) + ")";
        else if constexpr (std::is_same_v<T, spec::Product>) {
          const bool nested = std::holds_alternative<spec::Product>(x.right->node);
          return render(*x.left) + " x " + (nested ? "(" + render(*x.right) + ")" : render(*x.right));
        } else if constexpr (std::is_same_v<T, spec::Perm>) {
          std::string out = "Perm(" + std::to_string(x.degree) + "|";
          for (std::size_t i = 0; i < x.generators.size(); ++i) out += (i ? "," : "") + render_cycles(x.generators[i]);
          return out + ")";
        } else if constexpr (std::is_same_v<T, spec::JordanP>)
          return "Jp(" + std::to_string(x.p) + "," + std::to_string(x.m) + ")";
        else return x.name;
      },
      s.node);
}

namespace {

Group build_node(const GroupSpec& s, const BuildLimits& limits) {
  return std::visit(
      [&](const auto& x) -> Group {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, spec::Cyclic>) return make_cyclic(x.n, limits);
        else if constexpr (std::is_same_v<T, spec::Dihedral>) return make_dihedral(x.order, limits);
        else if constexpr (std::is_same_v<T, spec::Dicyclic>) return make_dicyclic(x.order, limits);
        else if constexpr (std::is_same_v<T, spec::Abelian>) return make_abelian(x.invariants, limits);
        else if constexpr (std::is_same_v<T, spec::Semidirect>) return make_semidirect_cyclic(x.m, x.n, x.r, limits);
        else if constexpr (std::is_same_v<T, spec::Product>) {
          const std::uint64_t order = projected_order(s);
          if (order > limits.max_order)
            throw SizeLimit(render(s) + " has order " + std::to_string(order) + ", above the size guard of " +
                            std::to_string(limits.max_order));
          return direct_product(build_node(*x.left, limits), build_node(*x.right, limits), limits);
        } else if constexpr (std::is_same_v<T, spec::Perm>) {
          std::vector<Permutation> gens;
          for (const auto& gen : x.generators) gens.push_back(permutation_from_cycles(x.degree, gen));
          return from_permutations(x.degree, gens, limits);
        } else if constexpr (std::is_same_v<T, spec::JordanP>) return make_jordan_p_group(x.p, x.m, limits);
        else {
          if (const auto as = alt_sym_name(x.name))
            return as->first == 'A' ? make_alternating(as->second, limits) : make_symmetric(as->second, limits);
          const auto* entry = find_catalog_entry(x.name);
          if (!entry) throw InvalidParameter("unknown group name '" + x.name + "'");
          return build_node(entry->spec, limits);
        }
      },
      s.node);
}

std::uint64_t factorial_order(char kind, std::uint32_t n) {
  std::uint64_t f = 1;
  for (std::uint32_t i = 2; i <= n; ++i)
    if (__builtin_mul_overflow(f, static_cast<std::uint64_t>(i), &f)) return UINT64_MAX;
  if (kind == 'A' && n >= 2) f /= 2;
  return f;
}

}  // namespace

Group build(const GroupSpec& s, const BuildLimits& limits) { return build_node(s, limits).with_label(render(s)); }

std::uint64_t projected_order(const GroupSpec& s) {
  return std::visit(
      [&](const auto& x) -> std::uint64_t {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, spec::Cyclic>) return x.n;
        else if constexpr (std::is_same_v<T, spec::Dihedral> || std::is_same_v<T, spec::Dicyclic>) return x.order;
        else if constexpr (std::is_same_v<T, spec::Abelian>) {
          std::uint64_t o = 1;
          for (auto d : x.invariants)
            if (__builtin_mul_overflow(o, d, &o)) return UINT64_MAX;
          return o;
        } else if constexpr (std::is_same_v<T, spec::Semidirect>) {
          std::uint64_t o = 0;
          return __builtin_mul_overflow(x.m, x.n, &o) ? UINT64_MAX : o;
        } else if constexpr (std::is_same_v<T, spec::Product>) {
          std::uint64_t o = 0;
          return __builtin_mul_overflow(projected_order(*x.left), projected_order(*x.right), &o) ? UINT64_MAX : o;
        } else if constexpr (std::is_same_v<T, spec::Perm>) {
          std::vector<Permutation> gens;
          for (const auto& gen : x.generators) gens.push_back(permutation_from_cycles(x.degree, gen));
          return from_permutations(x.degree, gens, BuildLimits{SIZE_MAX}).order();
        } else if constexpr (std::is_same_v<T, spec::JordanP>) {
          std::uint64_t o = 1;
          for (std::uint64_t i = 0; i <= x.m; ++i)
            if (__builtin_mul_overflow(o, x.p, &o)) return UINT64_MAX;
          return o;
        } else {
          if (const auto as = alt_sym_name(x.name)) return factorial_order(as->first, as->second);
          const auto* entry = find_catalog_entry(x.name);
          if (!entry) throw InvalidParameter("unknown group name '" + x.name + "'");
          return projected_order(entry->spec);
        }
      },
      s.node);
}

}  // namespace cdlat
