#include "cdlat/numtheory.hpp"

#include <algorithm>

#include "cdlat/errors.hpp"

namespace cdlat {

std::uint64_t Factorization::value() const {
  std::uint64_t v = 1;
  for (const auto& [p, k] : pairs)
    for (unsigned i = 0; i < k; ++i) v *= p;
  return v;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw InvalidParameter("cannot factorize 0");
  Factorization f;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    if (k) f.pairs.emplace_back(d, k);
  }
  if (n > 1) f.pairs.emplace_back(n, 1);
  return f;
}

std::uint64_t tau(std::uint64_t n) {
  std::uint64_t t = 1;
  for (const auto& [p, k] : factorize(n).pairs) t *= k + 1;
  return t;
}

std::uint64_t sigma(std::uint64_t n) {
  std::uint64_t s = 0;
  for (auto d : divisors(n)) s += d;
  return s;
}

bool is_squarefree(std::uint64_t n) {
  const auto f = factorize(n);
  return std::all_of(f.pairs.begin(), f.pairs.end(), [](const auto& pk) { return pk.second == 1; });
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw InvalidParameter("0 has no finite divisor list");
  std::vector<std::uint64_t> lo, hi;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    lo.push_back(d);
    if (d != n / d) hi.push_back(n / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 r = 1, b = base % mod;
  while (exp) {
    if (exp & 1U) r = r * b % mod;
    b = b * b % mod;
    exp >>= 1U;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  // extended Euclid over signed 128-bit
  __int128 old_r = static_cast<__int128>(a % m), r = static_cast<__int128>(m);
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  if (old_r != 1) throw InvalidParameter("value is not invertible modulo m");
  __int128 v = old_s % static_cast<__int128>(m);
  if (v < 0) v += m;
  return static_cast<std::uint64_t>(v);
}

bool as_prime_power(std::uint64_t n, PrimePower& out) {
  if (n < 2) return false;
  const auto f = factorize(n);
  if (f.pairs.size() != 1) return false;
  out = {f.pairs[0].first, f.pairs[0].second};
  return true;
}

}  // namespace cdlat
