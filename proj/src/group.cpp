#include "cdlat/group.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>

#include "cdlat/errors.hpp"
#include "cdlat/numtheory.hpp"

namespace cdlat {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw SizeLimit(std::string(what) + ": order overflows 64 bits");
  return out;
}

void guard(std::uint64_t order, const BuildLimits& limits, const std::string& what) {
  if (order > limits.max_order)
    throw SizeLimit(what + " has order " + std::to_string(order) + ", above the size guard of " +
                    std::to_string(limits.max_order));
}

void check_associative(std::size_t n, const std::vector<ElementId>& t) {
  auto m = [&](std::size_t x, std::size_t y) { return static_cast<std::size_t>(t[x * n + y]); };
  if (n <= kExhaustiveAssociativityOrder) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t xy = m(x, y);
        for (std::size_t z = 0; z < n; ++z)
          if (m(xy, z) != m(x, m(y, z))) throw InvalidParameter("Cayley table is not associative");
      }
    return;
  }
  std::mt19937_64 rng(0x5eed0000ULL + n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t s = 0; s < kAssociativitySamples; ++s) {
    const std::size_t x = pick(rng), y = pick(rng), z = pick(rng);
    if (m(m(x, y), z) != m(x, m(y, z))) throw InvalidParameter("Cayley table is not associative");
  }
}

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : p) h = (h ^ v) * 1099511628211ULL;
    return h;
  }
};

}  // namespace

std::string GroupHash::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(64);
  for (auto b : digest) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xfU]);
  }
  return out;
}

bool GroupHash::from_hex(const std::string& hex, GroupHash& out) {
  if (hex.size() != 64) return false;
  auto val = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
  };
  GroupHash h;
  for (std::size_t i = 0; i < 32; ++i) {
    const int hi = val(hex[2 * i]), lo = val(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) return false;
    h.digest[i] = static_cast<std::uint8_t>(hi * 16 + lo);
  }
  out = h;
  return true;
}

GroupHash hash_bytes(std::span<const std::uint8_t> bytes) {
  GroupHash h;
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), h.digest.data(), &len, EVP_sha256(), nullptr) != 1 || len != 32)
    throw InvalidState("SHA-256 digest failed");
  return h;
}

Group Group::from_table(std::size_t order, std::vector<ElementId> table, std::string label) {
  const std::size_t n = order;
  if (n == 0) throw InvalidParameter("group order must be positive");
  if (table.size() != n * n) throw InvalidParameter("Cayley table has the wrong number of entries");
  for (auto v : table)
    if (v >= n) throw InvalidParameter("Cayley table entry out of range");

  for (std::size_t x = 0; x < n; ++x)
    if (table[x] != x || table[x * n] != x) throw InvalidParameter("element 0 is not the identity");

  std::vector<std::uint8_t> seen(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t y = 0; y < n; ++y) {
      if (seen[table[x * n + y]]++) throw InvalidParameter("Cayley table row is not a permutation");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t y = 0; y < n; ++y) {
      if (seen[table[y * n + x]]++) throw InvalidParameter("Cayley table column is not a permutation");
    }
  }

  check_associative(n, table);

  Group g;
  g.order_ = n;
  g.table_ = std::move(table);
  g.label_ = std::move(label);
  g.inv_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y)
      if (g.table_[x * n + y] == 0) {
        g.inv_[x] = static_cast<ElementId>(y);
        break;
      }
    if (g.table_[g.inv_[x] * n + x] != 0) throw InvalidParameter("left and right inverses differ");
  }
  g.elt_order_.assign(n, 1);
  for (std::size_t x = 0; x < n; ++x) {
    ElementId p = static_cast<ElementId>(x);
    std::uint32_t k = 1;
    while (p != 0) {
      p = g.table_[p * n + x];
      ++k;
    }
    g.elt_order_[x] = k;
  }
  g.abelian_ = true;
  for (std::size_t x = 0; x < n && g.abelian_; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (g.table_[x * n + y] != g.table_[y * n + x]) {
        g.abelian_ = false;
        break;
      }
  g.hash_ = hash_bytes(g.canonical_bytes());
  return g;
}

ElementId Group::pow(ElementId x, std::uint64_t k) const noexcept {
  k %= elt_order_[x];
  ElementId r = 0;
  ElementId b = x;
  while (k) {
    if (k & 1U) r = mul(r, b);
    b = mul(b, b);
    k >>= 1U;
  }
  return r;
}

std::vector<std::uint8_t> Group::canonical_bytes() const {
  std::vector<std::uint8_t> out;
  out.reserve(8 + 4 * table_.size());
  const auto n = static_cast<std::uint64_t>(order_);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>((n >> (8 * i)) & 0xffU));
  for (auto v : table_)
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xffU));
  return out;
}

Group make_cyclic(std::uint64_t n, const BuildLimits& limits) {
  if (n == 0) throw InvalidParameter("cyclic order must be positive");
  guard(n, limits, "C" + std::to_string(n));
  std::vector<ElementId> t(n * n);
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j) t[i * n + j] = static_cast<ElementId>((i + j) % n);
  return Group::from_table(n, std::move(t), "C" + std::to_string(n));
}

Group make_abelian(std::span<const std::uint64_t> type, const BuildLimits& limits) {
  std::string label = "Ab(";
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < type.size(); ++i) {
    if (type[i] < 2) throw InvalidParameter("abelian invariant " + std::to_string(type[i]) + " must be at least 2");
    total = checked_mul(total, type[i], "abelian group");
    label += (i ? "," : "") + std::to_string(type[i]);
  }
  label += ")";
  guard(total, limits, label);
  Group g = make_cyclic(1, limits);
  for (auto d : type) g = direct_product(g, make_cyclic(d, limits), limits);
  return g.with_label(type.empty() ? "C1" : label);
}

Group make_dihedral(std::uint64_t two_n, const BuildLimits& limits) {
  if (two_n < 4 || two_n % 2 != 0)
    throw InvalidParameter("dihedral order " + std::to_string(two_n) + " must be even and at least 4");
  guard(two_n, limits, "D" + std::to_string(two_n));
  const std::uint64_t n = two_n / 2;
  std::vector<ElementId> t(two_n * two_n);
  for (std::uint64_t x = 0; x < two_n; ++x) {
    const std::uint64_t i = x % n, j = x / n;
    for (std::uint64_t y = 0; y < two_n; ++y) {
      const std::uint64_t k = y % n, l = y / n;
      // b a^k = a^-k b
      const std::uint64_t e = j == 0 ? (i + k) % n : (i + n - k) % n;
      const std::uint64_t f = (j + l) % 2;
      t[x * two_n + y] = static_cast<ElementId>(e + n * f);
    }
  }
  return Group::from_table(two_n, std::move(t), "D" + std::to_string(two_n));
}

Group make_dicyclic(std::uint64_t four_m, const BuildLimits& limits) {
  if (four_m < 8 || four_m % 4 != 0)
    throw InvalidParameter("dicyclic order " + std::to_string(four_m) + " must be a multiple of 4 and at least 8");
  guard(four_m, limits, "Q" + std::to_string(four_m));
  const std::uint64_t m = four_m / 4, two_m = 2 * m;
  std::vector<ElementId> t(four_m * four_m);
  for (std::uint64_t x = 0; x < four_m; ++x) {
    const std::uint64_t i = x % two_m, j = x / two_m;
    for (std::uint64_t y = 0; y < four_m; ++y) {
      const std::uint64_t k = y % two_m, l = y / two_m;
      std::uint64_t e = 0, f = 0;
      if (j == 0) {
        e = (i + k) % two_m;
        f = l;
      } else if (l == 0) {
        e = (i + two_m - k) % two_m;
        f = 1;
      } else {
        e = (i + two_m - k + m) % two_m;  // x^2 = a^m
        f = 0;
      }
      t[x * four_m + y] = static_cast<ElementId>(e + two_m * f);
    }
  }
  return Group::from_table(four_m, std::move(t), "Q" + std::to_string(four_m));
}

Group make_semidirect_cyclic(std::uint64_t m, std::uint64_t n, std::uint64_t r, const BuildLimits& limits) {
  const std::string label =
      "(C" + std::to_string(m) + " : C" + std::to_string(n) + " @ " + std::to_string(r) + ")";
  if (m < 2 || n < 1) throw InvalidParameter(label + ": need m >= 2 and n >= 1");
  if (r < 1 || r >= m) throw InvalidAction(label + ": exponent r must satisfy 1 <= r < m");
  if (std::gcd(r, m) != 1) throw InvalidAction(label + ": gcd(r, m) must be 1");
  if (pow_mod(r, n, m) != 1 % m) throw InvalidAction(label + ": r^n is not 1 mod m");
  const std::uint64_t order = checked_mul(m, n, "semidirect product");
  guard(order, limits, label);
  // b a^k b^-1 = a^{k s} with s = r^-1 mod m
  const std::uint64_t s = inverse_mod(r, m);
  std::vector<std::uint64_t> spow(n);
  spow[0] = 1 % m;
  for (std::uint64_t j = 1; j < n; ++j) spow[j] = spow[j - 1] * s % m;
  std::vector<ElementId> t(order * order);
  for (std::uint64_t x = 0; x < order; ++x) {
    const std::uint64_t i = x % m, j = x / m;
    for (std::uint64_t y = 0; y < order; ++y) {
      const std::uint64_t k = y % m, l = y / m;
      const std::uint64_t e = (i + k * spow[j]) % m;
      const std::uint64_t f = (j + l) % n;
      t[x * order + y] = static_cast<ElementId>(e + m * f);
    }
  }
  return Group::from_table(order, std::move(t), label);
}

Group direct_product(const Group& g, const Group& h, const BuildLimits& limits) {
  const std::uint64_t a = g.order(), b = h.order();
  const std::uint64_t order = checked_mul(a, b, "direct product");
  std::string label = g.label() + " x " + h.label();
  guard(order, limits, label);
  std::vector<ElementId> t(order * order);
  for (std::uint64_t x = 0; x < order; ++x) {
    const auto x1 = static_cast<ElementId>(x / b), x2 = static_cast<ElementId>(x % b);
    for (std::uint64_t y = 0; y < order; ++y) {
      const auto y1 = static_cast<ElementId>(y / b), y2 = static_cast<ElementId>(y % b);
      t[x * order + y] = static_cast<ElementId>(g.mul(x1, y1) * b + h.mul(x2, y2));
    }
  }
  return Group::from_table(order, std::move(t), std::move(label));
}

Permutation permutation_from_cycles(std::uint32_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0U);
  std::vector<std::uint8_t> used(degree, 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree) throw InvalidParameter("cycle point " + std::to_string(c[i]) + " exceeds the degree");
      if (used[c[i]]++) throw InvalidParameter("cycles are not disjoint at point " + std::to_string(c[i]));
      p[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return p;
}

Group from_permutations(std::uint32_t degree, std::span<const Permutation> generators, const BuildLimits& limits,
                        std::string label) {
  if (degree == 0) throw InvalidParameter("permutation degree must be positive");
  std::vector<Permutation> gens;
  for (const auto& s : generators) {
    if (s.size() != degree) throw InvalidParameter("generator has the wrong degree");
    std::vector<std::uint8_t> hit(degree, 0);
    for (auto v : s) {
      if (v >= degree || hit[v]++) throw InvalidParameter("generator is not a bijection");
    }
    gens.push_back(s);
  }

  Permutation ident(degree);
  std::iota(ident.begin(), ident.end(), 0U);
  std::vector<Permutation> elems{ident};
  std::unordered_map<Permutation, ElementId, PermHash> index{{ident, 0}};
  std::vector<std::pair<ElementId, std::size_t>> parent{{0, 0}};
  const std::size_t k = gens.size();
  std::vector<ElementId> right;  // right[z*k + s] = id of z then gens[s]

  for (std::size_t pos = 0; pos < elems.size(); ++pos) {
    for (std::size_t s = 0; s < k; ++s) {
      Permutation z(degree);
      for (std::uint32_t i = 0; i < degree; ++i) z[i] = gens[s][elems[pos][i]];
      auto [it, fresh] = index.emplace(z, static_cast<ElementId>(elems.size()));
      if (fresh) {
        if (elems.size() + 1 > limits.max_order)
          throw SizeLimit("permutation group exceeds the size guard of " + std::to_string(limits.max_order));
        elems.push_back(std::move(z));
        parent.emplace_back(static_cast<ElementId>(pos), s);
      }
      right.push_back(it->second);
    }
  }

  const std::size_t n = elems.size();
  std::vector<ElementId> t(n * n);
  // x*y = (x*parent(y)) * gen(y); ids are in BFS order so parents come first
  for (std::size_t x = 0; x < n; ++x) {
    t[x * n] = static_cast<ElementId>(x);
    for (std::size_t y = 1; y < n; ++y) {
      const auto [py, s] = parent[y];
      t[x * n + y] = right[static_cast<std::size_t>(t[x * n + py]) * k + s];
    }
  }
  return Group::from_table(n, std::move(t), std::move(label));
}

Group make_jordan_p_group(std::uint64_t p, std::uint64_t m, const BuildLimits& limits) {
  const std::string label = "Jp(" + std::to_string(p) + "," + std::to_string(m) + ")";
  if (!is_prime(p)) throw InvalidParameter(label + ": p must be prime");
  if (m < 2) throw InvalidParameter(label + ": m must be at least 2");
  if (m > p) throw InvalidParameter(label + ": m must not exceed p");
  std::uint64_t vecs = 1;
  for (std::uint64_t i = 0; i < m; ++i) vecs = checked_mul(vecs, p, "Jordan p-group");
  const std::uint64_t order = checked_mul(vecs, p, "Jordan p-group");
  guard(order, limits, label);

  auto digits = [&](std::uint64_t v) {
    std::vector<std::uint64_t> d(m);
    for (std::uint64_t i = 0; i < m; ++i) {
      d[i] = v % p;
      v /= p;
    }
    return d;
  };
  auto encode = [&](const std::vector<std::uint64_t>& d) {
    std::uint64_t v = 0;
    for (std::uint64_t i = m; i-- > 0;) v = v * p + d[i];
    return v;
  };
  // act[s][w] = J^s w with (J w)_i = w_i + w_{i+1}
  std::vector<std::vector<std::uint64_t>> act(p, std::vector<std::uint64_t>(vecs));
  for (std::uint64_t w = 0; w < vecs; ++w) {
    auto d = digits(w);
    for (std::uint64_t s = 0; s < p; ++s) {
      act[s][w] = encode(d);
      std::vector<std::uint64_t> nd(m);
      for (std::uint64_t i = 0; i < m; ++i) nd[i] = (d[i] + (i + 1 < m ? d[i + 1] : 0)) % p;
      d = std::move(nd);
    }
  }
  std::vector<std::vector<std::uint64_t>> dig(vecs);
  for (std::uint64_t v = 0; v < vecs; ++v) dig[v] = digits(v);

  std::vector<ElementId> t(order * order);
  std::vector<std::uint64_t> sum(m);
  for (std::uint64_t x = 0; x < order; ++x) {
    const std::uint64_t v = x % vecs, s = x / vecs;
    for (std::uint64_t y = 0; y < order; ++y) {
      const std::uint64_t w = y % vecs, tt = y / vecs;
      const auto& dv = dig[v];
      const auto& dw = dig[act[s][w]];
      for (std::uint64_t i = 0; i < m; ++i) sum[i] = (dv[i] + dw[i]) % p;
      t[x * order + y] = static_cast<ElementId>(encode(sum) + vecs * ((s + tt) % p));
    }
  }
  return Group::from_table(order, std::move(t), label);
}

Group make_symmetric(std::uint32_t degree, const BuildLimits& limits) {
  if (degree == 0) throw InvalidParameter("symmetric group degree must be positive");
  std::vector<Permutation> gens;
  if (degree >= 2) {
    std::vector<std::uint32_t> full(degree);
    std::iota(full.begin(), full.end(), 0U);
    gens.push_back(permutation_from_cycles(degree, {full}));
    gens.push_back(permutation_from_cycles(degree, {{0, 1}}));
  }
  return from_permutations(degree, gens, limits, "S" + std::to_string(degree));
}

Group make_alternating(std::uint32_t degree, const BuildLimits& limits) {
  if (degree == 0) throw InvalidParameter("alternating group degree must be positive");
  std::vector<Permutation> gens;
  for (std::uint32_t i = 2; i < degree; ++i) gens.push_back(permutation_from_cycles(degree, {{0, 1, i}}));
  return from_permutations(degree, gens, limits, "A" + std::to_string(degree));
}

}  // namespace cdlat
