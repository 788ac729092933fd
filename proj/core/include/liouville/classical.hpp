#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "liouville/arith_func.hpp"

namespace liouville::classical {

/// Built-in functions. Parameterized families carry `k`.
enum class Kind {
  One,              ///< constant 1
  Id,               ///< n^k, k >= 1
  Epsilon,          ///< Dirichlet identity
  Mobius,           ///< mu
  EulerPhi,         ///< phi
  Tau,              ///< number of divisors
  Sigma,            ///< sum of k-th powers of divisors, k >= 0
  LiouvilleLambda,  ///< (-1)^Omega(n)
  PrimeChar,        ///< 1 on primes
  PiSquared,        ///< (number of primes <= n)^2
};

inline constexpr unsigned max_power = 64;

struct NamedFunction {
  Kind kind;
  unsigned k = 0;

  /// Registry name: "one", "id_2", "sigma_0", "mobius", ...
  std::string name() const;

  friend bool operator==(const NamedFunction&, const NamedFunction&) = default;
};

/// Parses a registry name. "id" and "sigma" mean k = 1; "mu" and "phi"
/// are aliases. Throws UnknownFunction or OutOfRange (bad k).
NamedFunction parse_name(std::string_view name);

/// Canonical names of all unparameterized built-ins plus id_k / sigma_k.
std::vector<std::string> registry_names();

/// Values on 1..bound over Z, from a linear sieve (no per-index
/// factorization). Use ArithFunc::in to move into Q.
ArithFunc build(NamedFunction function, std::size_t bound);
ArithFunc build(std::string_view name, std::size_t bound);

/// Smallest prime factor of every n <= bound (spf[1] = 1, spf[0] = 0).
std::vector<std::size_t> smallest_prime_factors(std::size_t bound);

struct IdentityCheck {
  std::string name;        ///< e.g. "mu*1=eps"
  bool passed = false;
  std::size_t first_failure = 0;  ///< 0 when passed
};

/// At the given bound, exactly: mu*1 = eps, 1*1 = tau, 1*id = sigma_1,
/// mu*id = phi.
std::vector<IdentityCheck> identity_suite(std::size_t bound);

}  // namespace liouville::classical
