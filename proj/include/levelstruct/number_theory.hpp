#pragma once

#include <cstdint>
#include <vector>

namespace levelstruct {

struct PrimePower {
  std::int64_t prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes. 1 factors as the
/// empty product.
using Factorization = std::vector<PrimePower>;

/// Trial division. Throws std::invalid_argument for n <= 0.
Factorization factorize(std::int64_t n);

bool is_prime(std::int64_t n);

/// Legendre symbol (a/p) for an odd prime p, via Euler's criterion.
/// Throws std::invalid_argument if p is even or composite.
int legendre(std::int64_t a, std::int64_t p);

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod);
std::int64_t mod_floor(std::int64_t a, std::int64_t m);
std::int64_t euler_phi(std::int64_t n);

/// Positive divisors in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

/// N^3 * prod_{p|N} (1 - 1/p^2) = |SL2(Z/N)|.
std::int64_t sl2_order(std::int64_t n);

/// N * prod_{p|N} (1 + 1/p), the Dedekind psi function.
std::int64_t dedekind_psi(std::int64_t n);

}  // namespace levelstruct
