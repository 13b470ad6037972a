#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace subnil {

bool is_prime(std::uint64_t n);

// Prime factorization by trial division, factors in ascending order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// Distinct prime divisors of n, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// Largest power of p dividing n (the p-part of n).
std::uint64_t p_part_of(std::uint64_t n, std::uint64_t p);

// Exponent of p in n.
unsigned p_valuation(std::uint64_t n, std::uint64_t p);

// True iff n is a power of p (n = p^e, e >= 0; n = 1 counts).
bool is_p_power(std::uint64_t n, std::uint64_t p);

// True iff n is a prime power p^e with e >= 1; sets p to the prime.
bool prime_power_base(std::uint64_t n, std::uint64_t &p);

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

// Inverse of a modulo m; requires gcd(a, m) = 1.
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t m);

} // namespace subnil
