#include "liouville/classical.hpp"

#include <charconv>

#include "liouville/errors.hpp"
#include "liouville/ring.hpp"

namespace liouville::classical {

namespace {

struct Sieve {
  std::vector<std::size_t> spf;
  std::vector<std::size_t> primes;
  std::vector<std::size_t> rest;      // n with its spf-power stripped
  std::vector<unsigned> exponent;     // exponent of spf(n) in n
};

// Linear sieve: every composite is crossed out once, by its smallest prime.
Sieve run_sieve(std::size_t bound) {
  Sieve s;
  s.spf.assign(bound + 1, 0);
  s.rest.assign(bound + 1, 1);
  s.exponent.assign(bound + 1, 0);
  if (bound >= 1) s.spf[1] = 1;
  for (std::size_t n = 2; n <= bound; ++n) {
    if (s.spf[n] == 0) {
      s.spf[n] = n;
      s.primes.push_back(n);
    }
    for (const std::size_t p : s.primes) {
      if (p > s.spf[n] || n * p > bound) break;
      s.spf[n * p] = p;
    }
    const std::size_t p = s.spf[n];
    const std::size_t q = n / p;
    if (q > 1 && s.spf[q] == p) {
      s.rest[n] = s.rest[q];
      s.exponent[n] = s.exponent[q] + 1;
    } else {
      s.rest[n] = q;
      s.exponent[n] = 1;
    }
  }
  return s;
}

unsigned parse_power(std::string_view digits, std::string_view name) {
  unsigned k = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw UnknownFunction("unknown function '" + std::string(name) + "'");
  }
  return k;
}

void check_power(const NamedFunction& f) {
  if (f.kind == Kind::Id && (f.k < 1 || f.k > max_power)) {
    throw OutOfRange("id_k needs 1 <= k <= " + std::to_string(max_power));
  }
  if (f.kind == Kind::Sigma && f.k > max_power) {
    throw OutOfRange("sigma_k needs 0 <= k <= " + std::to_string(max_power));
  }
}

mpz_class power(std::size_t base, unsigned k) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, k);
  return out;
}

std::size_t first_difference(const ArithFunc& lhs, const ArithFunc& rhs) {
  const auto& a = lhs.integer_storage();
  const auto& b = rhs.integer_storage();
  const std::size_t bound = std::min(a.size(), b.size()) - 1;
  for (std::size_t n = 1; n <= bound; ++n) {
    if (a[n] != b[n]) return n;
  }
  return 0;
}

}  // namespace

std::string NamedFunction::name() const {
  switch (kind) {
    case Kind::One: return "one";
    case Kind::Id: return "id_" + std::to_string(k);
    case Kind::Epsilon: return "epsilon";
    case Kind::Mobius: return "mobius";
    case Kind::EulerPhi: return "euler_phi";
    case Kind::Tau: return "tau";
    case Kind::Sigma: return "sigma_" + std::to_string(k);
    case Kind::LiouvilleLambda: return "liouville_lambda";
    case Kind::PrimeChar: return "prime_char";
    case Kind::PiSquared: return "pi_squared";
  }
  return {};
}

NamedFunction parse_name(std::string_view name) {
  NamedFunction f{Kind::One, 0};
  if (name == "one") f = {Kind::One, 0};
  else if (name == "epsilon" || name == "eps") f = {Kind::Epsilon, 0};
  else if (name == "mobius" || name == "mu") f = {Kind::Mobius, 0};
  else if (name == "euler_phi" || name == "phi") f = {Kind::EulerPhi, 0};
  else if (name == "tau") f = {Kind::Tau, 0};
  else if (name == "liouville_lambda" || name == "lambda") f = {Kind::LiouvilleLambda, 0};
  else if (name == "prime_char") f = {Kind::PrimeChar, 0};
  else if (name == "pi_squared") f = {Kind::PiSquared, 0};
  else if (name == "id") f = {Kind::Id, 1};
  else if (name == "sigma") f = {Kind::Sigma, 1};
  else if (name.starts_with("id_")) f = {Kind::Id, parse_power(name.substr(3), name)};
  else if (name.starts_with("sigma_")) f = {Kind::Sigma, parse_power(name.substr(6), name)};
  else throw UnknownFunction("unknown function '" + std::string(name) + "'");
  check_power(f);
  return f;
}

std::vector<std::string> registry_names() {
  return {"one", "id_k", "epsilon", "mobius", "euler_phi", "tau", "sigma_k",
          "liouville_lambda", "prime_char", "pi_squared"};
}

std::vector<std::size_t> smallest_prime_factors(std::size_t bound) {
  return run_sieve(bound).spf;
}

ArithFunc build(NamedFunction function, std::size_t bound) {
  if (bound == 0) throw InvalidArgument("bound must be >= 1");
  check_power(function);
  const Sieve s = run_sieve(bound);
  ArithFunc::IntegerValues v(bound + 1);

  switch (function.kind) {
    case Kind::One:
      for (std::size_t n = 1; n <= bound; ++n) v[n] = 1;
      break;
    case Kind::Epsilon:
      v[1] = 1;
      break;
    case Kind::Id:
      for (std::size_t n = 1; n <= bound; ++n) v[n] = power(n, function.k);
      break;
    case Kind::Mobius:
      v[1] = 1;
      for (std::size_t n = 2; n <= bound; ++n) {
        if (s.exponent[n] == 1) v[n] = -v[s.rest[n]];
      }
      break;
    case Kind::EulerPhi:
      v[1] = 1;
      for (std::size_t n = 2; n <= bound; ++n) {
        const std::size_t p = s.spf[n];
        v[n] = v[n / p] * (s.exponent[n] > 1 ? p : p - 1);
      }
      break;
    case Kind::Tau:
      v[1] = 1;
      for (std::size_t n = 2; n <= bound; ++n) v[n] = v[s.rest[n]] * (s.exponent[n] + 1);
      break;
    case Kind::Sigma:
      v[1] = 1;
      for (std::size_t n = 2; n <= bound; ++n) {
        if (s.rest[n] == 1) {
          // prime power: sigma_k(p^e) = sigma_k(p^(e-1)) + (p^e)^k
          v[n] = v[n / s.spf[n]] + power(n, function.k);
        } else {
          v[n] = v[s.rest[n]] * v[n / s.rest[n]];
        }
      }
      break;
    case Kind::LiouvilleLambda:
      v[1] = 1;
      for (std::size_t n = 2; n <= bound; ++n) v[n] = -v[n / s.spf[n]];
      break;
    case Kind::PrimeChar:
      for (const std::size_t p : s.primes) v[p] = 1;
      break;
    case Kind::PiSquared: {
      unsigned long count = 0;
      for (std::size_t n = 1; n <= bound; ++n) {
        if (n > 1 && s.spf[n] == n) ++count;
        v[n] = count * count;
      }
      break;
    }
  }
  return ArithFunc::from_storage(std::move(v));
}

ArithFunc build(std::string_view name, std::size_t bound) {
  return build(parse_name(name), bound);
}

std::vector<IdentityCheck> identity_suite(std::size_t bound) {
  const ArithFunc one = build({Kind::One}, bound);
  const ArithFunc mu = build({Kind::Mobius}, bound);
  const ArithFunc id = build({Kind::Id, 1}, bound);

  const auto check = [](std::string name, const ArithFunc& lhs, const ArithFunc& rhs) {
    const std::size_t failure = first_difference(lhs, rhs);
    return IdentityCheck{std::move(name), failure == 0, failure};
  };

  std::vector<IdentityCheck> out;
  out.push_back(check("mu*1=eps", convolve(mu, one), epsilon(bound, Domain::Integer)));
  out.push_back(check("1*1=tau", convolve(one, one), build({Kind::Tau}, bound)));
  out.push_back(check("1*id=sigma_1", convolve(one, id), build({Kind::Sigma, 1}, bound)));
  out.push_back(check("mu*id=phi", convolve(mu, id), build({Kind::EulerPhi}, bound)));
  return out;
}

}  // namespace liouville::classical
