#pragma once

// Test-only reference implementations. These deliberately take the slow,
// obvious route (per-index divisor enumeration, gcd counting, subset
// enumeration) so they share no code path with the library.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "liouville/arith_func.hpp"

namespace oracle {

inline std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

inline bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d < n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Values at 1..N as rationals, whatever the domain.
inline std::vector<mpq_class> values(const liouville::ArithFunc& f) {
  std::vector<mpq_class> out(f.bound() + 1);
  for (std::size_t n = 1; n <= f.bound(); ++n) out[n] = f.at(n).to_rational();
  return out;
}

// (a*b)(n) = sum over every d | n, found by trial division of n.
inline std::vector<mpq_class> convolve(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
  const std::size_t bound = std::min(a.size(), b.size()) - 1;
  std::vector<mpq_class> out(bound + 1);
  for (std::size_t n = 1; n <= bound; ++n) {
    for (const std::size_t d : divisors(n)) out[n] += a[d] * b[n / d];
  }
  return out;
}

inline long mobius(std::size_t n) {
  long sign = 1;
  std::size_t m = n;
  for (std::size_t p = 2; p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

inline long euler_phi(std::size_t n) {
  long count = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) == 1) ++count;
  }
  return count;
}

inline mpz_class sigma(std::size_t n, unsigned k) {
  mpz_class total = 0;
  for (const std::size_t d : divisors(n)) {
    mpz_class term;
    mpz_ui_pow_ui(term.get_mpz_t(), d, k);
    total += term;
  }
  return total;
}

inline long big_omega(std::size_t n) {
  long count = 0;
  for (std::size_t p = 2; p <= n; ++p) {
    while (n % p == 0) {
      n /= p;
      ++count;
    }
  }
  return count;
}

inline long prime_count(std::size_t n) {
  long count = 0;
  for (std::size_t k = 2; k <= n; ++k) count += is_prime(k) ? 1 : 0;
  return count;
}

// Largest antichain among `elements` under divisibility, by enumerating
// every subset. Only for small posets (<= ~20 elements).
inline std::size_t max_antichain_bruteforce(const std::vector<std::uint64_t>& elements) {
  const std::size_t n = elements.size();
  std::vector<std::uint32_t> comparable(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && (elements[i] % elements[j] == 0 || elements[j] % elements[i] == 0)) {
        comparable[i] |= 1u << j;
      }
    }
  }
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if ((mask >> i & 1u) && (comparable[i] & mask)) ok = false;
    }
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

// Random functions with entries in [lo, hi]; `zero_prefix` leading zeros.
inline liouville::ArithFunc random_function(std::mt19937_64& rng, std::size_t bound, liouville::Domain domain,
                                            long lo = -9, long hi = 9, std::size_t zero_prefix = 0) {
  std::uniform_int_distribution<long> pick(lo, hi);
  std::vector<liouville::Coefficient> v;
  v.reserve(bound);
  for (std::size_t n = 1; n <= bound; ++n) {
    v.emplace_back(n <= zero_prefix ? 0L : pick(rng), domain);
  }
  return liouville::ArithFunc::make(v, domain);
}

// Random rationals p/q with |p| <= 9, 1 <= q <= 5.
inline liouville::ArithFunc random_rational_function(std::mt19937_64& rng, std::size_t bound) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  std::vector<liouville::Coefficient> v;
  for (std::size_t n = 1; n <= bound; ++n) v.emplace_back(mpq_class(num(rng), den(rng)));
  return liouville::ArithFunc::make(v, liouville::Domain::Rational);
}

// Nonzero function whose rank is exactly `rank`.
inline liouville::ArithFunc random_with_rank(std::mt19937_64& rng, std::size_t bound, liouville::Domain domain,
                                             std::size_t rank) {
  std::uniform_int_distribution<long> pick(-9, 9);
  std::uniform_int_distribution<long> nonzero(1, 9);
  std::vector<liouville::Coefficient> v;
  for (std::size_t n = 1; n <= bound; ++n) {
    long x = 0;
    if (n == rank) x = nonzero(rng) * (pick(rng) < 0 ? -1 : 1);
    else if (n > rank) x = pick(rng);
    v.emplace_back(x, domain);
  }
  return liouville::ArithFunc::make(v, domain);
}

// A unit with alpha(1) = +-1 (Z) or nonzero (Q) and the rest random.
inline liouville::ArithFunc random_unit(std::mt19937_64& rng, std::size_t bound, liouville::Domain domain) {
  std::uniform_int_distribution<long> pick(-9, 9);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<liouville::Coefficient> v;
  for (std::size_t n = 1; n <= bound; ++n) {
    long x = pick(rng);
    if (n == 1) {
      if (domain == liouville::Domain::Integer) x = coin(rng) ? 1 : -1;
      else while (x == 0) x = pick(rng);
    }
    v.emplace_back(x, domain);
  }
  return liouville::ArithFunc::make(v, domain);
}

}  // namespace oracle
