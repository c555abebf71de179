#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cdlat {

/// Prime factorization as (prime, exponent) pairs with increasing primes.
struct Factorization {
  std::vector<std::pair<std::uint64_t, unsigned>> pairs;

  std::uint64_t value() const;
  std::size_t distinct_primes() const noexcept { return pairs.size(); }
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

bool is_prime(std::uint64_t n);
/// Trial division up to sqrt(n); factorize(1) is empty.
Factorization factorize(std::uint64_t n);
/// Number of positive divisors.
std::uint64_t tau(std::uint64_t n);
/// Sum of positive divisors.
std::uint64_t sigma(std::uint64_t n);
bool is_squarefree(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
/// Requires gcd(a, m) = 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

/// p and k with n = p^k, k >= 1, or nothing when n is not a prime power.
struct PrimePower {
  std::uint64_t p = 0;
  unsigned k = 0;
};
bool as_prime_power(std::uint64_t n, PrimePower& out);

}  // namespace cdlat
