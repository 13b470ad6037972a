#include "subnil/numeric.hpp"

#include <cassert>
#include <stdexcept>

namespace subnil {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  if (n % 2 == 0)
    return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> factors;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p)
      continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (n > 1)
    factors.emplace_back(n, 1);
  return factors;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (auto &[p, e] : factorize(n))
    primes.push_back(p);
  return primes;
}

std::uint64_t p_part_of(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

unsigned p_valuation(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

bool is_p_power(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0)
    n /= p;
  return n == 1;
}

bool prime_power_base(std::uint64_t n, std::uint64_t &p) {
  if (n < 2)
    return false;
  auto factors = factorize(n);
  if (factors.size() != 1)
    return false;
  p = factors[0].first;
  return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t mod) {
  assert(mod > 0);
  using u128 = unsigned __int128;
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1)
      result = static_cast<std::uint64_t>(u128(result) * base % mod);
    base = static_cast<std::uint64_t>(u128(base) * base % mod);
    exp >>= 1;
  }
  return result;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t m) {
  // Extended Euclid on (a mod m, m).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m),
               new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1)
    throw std::invalid_argument("mod_inv: arguments not coprime");
  if (t < 0)
    t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

} // namespace subnil
