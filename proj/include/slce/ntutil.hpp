#ifndef SLCE_NTUTIL_HPP
#define SLCE_NTUTIL_HPP

// Small elementary number-theory helpers shared across the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace slce {

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t f = 3; f * f <= n; f += 2)
    if (n % f == 0) return false;
  return true;
}

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Inverse of a mod m, or -1 when gcd(a,m) != 1.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t t = 0, new_t = 1, r = m, new_r = mod_floor(a, m);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) return -1;
  return mod_floor(t, m);
}

inline std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t result = 1 % m;
  base = mod_floor(base, m);
  while (exp > 0) {
    if (exp & 1) result = (result * base) % m;
    base = (base * base) % m;
    exp >>= 1;
  }
  return result;
}

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t f : prime_factors(n)) result -= result / f;
  return result;
}

// Multiplicative order of a mod m; requires gcd(a,m)=1.
inline std::int64_t mult_order(std::int64_t a, std::int64_t m) {
  std::int64_t x = mod_floor(a, m), acc = x, ord = 1;
  while (acc != 1 % m) {
    acc = (acc * x) % m;
    ++ord;
  }
  return ord;
}

inline std::vector<std::int64_t> units_mod(std::int64_t m) {
  std::vector<std::int64_t> u;
  for (std::int64_t x = 1; x < m; ++x)
    if (std::gcd(x, m) == 1) u.push_back(x);
  if (m == 1) u.push_back(0);  // trivial group
  return u;
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> d;
  for (std::int64_t f = 1; f * f <= n; ++f) {
    if (n % f == 0) {
      d.push_back(f);
      if (f != n / f) d.push_back(n / f);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

// All odd prime powers p^d <= cap, as (p, d, q) triples ordered by q.
struct PrimePower {
  std::int64_t p;
  int d;
  std::int64_t q;
};

inline std::vector<PrimePower> odd_prime_powers_upto(std::int64_t cap) {
  std::vector<PrimePower> out;
  for (std::int64_t p = 3; p <= cap; p += 2) {
    if (!is_prime(p)) continue;
    std::int64_t q = p;
    int d = 1;
    while (q <= cap) {
      out.push_back({p, d, q});
      if (q > cap / p) break;
      q *= p;
      ++d;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.q < b.q; });
  return out;
}

inline std::vector<std::int64_t> odd_primes_upto(std::int64_t cap) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 3; p <= cap; p += 2)
    if (is_prime(p)) out.push_back(p);
  return out;
}

}  // namespace slce

#endif  // SLCE_NTUTIL_HPP
