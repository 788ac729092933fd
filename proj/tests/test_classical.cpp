#include <gtest/gtest.h>

#include "liouville/classical.hpp"
#include "liouville/errors.hpp"
#include "liouville/ring.hpp"
#include "oracles.hpp"

using namespace liouville;
using classical::Kind;

namespace {

std::vector<std::string> as_strings(const ArithFunc& f) {
  std::vector<std::string> out;
  for (const auto& c : f.values()) out.push_back(c.to_string());
  return out;
}

}  // namespace

TEST(Build, MobiusFirstTen) {
  // Frozen from the per-index factorization oracle.
  const std::vector<long> expected{1, -1, -1, 0, -1, 1, -1, 0, 0, 1};
  for (std::size_t n = 1; n <= 10; ++n) ASSERT_EQ(oracle::mobius(n), expected[n - 1]);
  EXPECT_EQ(as_strings(classical::build("mobius", 10)),
            (std::vector<std::string>{"1", "-1", "-1", "0", "-1", "1", "-1", "0", "0", "1"}));
}

TEST(Build, EulerPhiFirstTen) {
  const std::vector<long> expected{1, 1, 2, 2, 4, 2, 6, 4, 6, 4};
  for (std::size_t n = 1; n <= 10; ++n) ASSERT_EQ(oracle::euler_phi(n), expected[n - 1]);
  EXPECT_EQ(as_strings(classical::build("euler_phi", 10)),
            (std::vector<std::string>{"1", "1", "2", "2", "4", "2", "6", "4", "6", "4"}));
}

TEST(Build, PrimeCharFirstEight) {
  EXPECT_EQ(as_strings(classical::build("prime_char", 8)),
            (std::vector<std::string>{"0", "1", "1", "0", "1", "0", "1", "0"}));
}

TEST(Build, AgreesWithNaiveOracleUpToThousand) {
  constexpr std::size_t N = 1000;
  const ArithFunc mu = classical::build("mobius", N);
  const ArithFunc phi = classical::build("euler_phi", N);
  const ArithFunc tau = classical::build("tau", N);
  const ArithFunc sigma0 = classical::build("sigma_0", N);
  const ArithFunc sigma1 = classical::build("sigma_1", N);
  const ArithFunc sigma3 = classical::build("sigma_3", N);
  const ArithFunc id2 = classical::build("id_2", N);
  const ArithFunc lambda = classical::build("liouville_lambda", N);
  const ArithFunc chi = classical::build("prime_char", N);
  const ArithFunc pi2 = classical::build("pi_squared", N);
  const ArithFunc one = classical::build("one", N);
  const ArithFunc eps = classical::build("epsilon", N);

  long primes = 0;
  for (std::size_t n = 1; n <= N; ++n) {
    const bool prime = oracle::is_prime(n);
    primes += prime ? 1 : 0;
    ASSERT_EQ(mu.at(n).to_integer(), oracle::mobius(n)) << n;
    ASSERT_EQ(phi.at(n).to_integer(), oracle::euler_phi(n)) << n;
    ASSERT_EQ(tau.at(n).to_integer(), static_cast<long>(oracle::divisors(n).size())) << n;
    ASSERT_EQ(sigma0.at(n), tau.at(n)) << n;
    ASSERT_EQ(sigma1.at(n).to_integer(), oracle::sigma(n, 1)) << n;
    ASSERT_EQ(sigma3.at(n).to_integer(), oracle::sigma(n, 3)) << n;
    ASSERT_EQ(id2.at(n).to_integer(), mpz_class(n) * n) << n;
    ASSERT_EQ(lambda.at(n).to_integer(), oracle::big_omega(n) % 2 == 0 ? 1 : -1) << n;
    ASSERT_EQ(chi.at(n).to_integer(), prime ? 1 : 0) << n;
    ASSERT_EQ(pi2.at(n).to_integer(), primes * primes) << n;
    ASSERT_EQ(one.at(n).to_integer(), 1) << n;
    ASSERT_EQ(eps.at(n).to_integer(), n == 1 ? 1 : 0) << n;
  }
}

TEST(Build, ArbitraryPrecisionPowers) {
  const ArithFunc id = classical::build("id_40", 12);
  mpz_class expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), 12, 40);
  EXPECT_EQ(id.at(12).to_integer(), expected);
  EXPECT_EQ(classical::build("sigma_40", 12).at(12).to_integer(), oracle::sigma(12, 40));
}

TEST(Build, MultiplicativeBuiltinsAreUnits) {
  for (const char* name : {"one", "id_1", "id_3", "epsilon", "mobius", "euler_phi", "tau", "sigma_0", "sigma_2",
                           "liouville_lambda"}) {
    const ArithFunc f = classical::build(name, 50);
    EXPECT_EQ(f.at(1), Coefficient(1, Domain::Integer)) << name;
    EXPECT_TRUE(is_unit(f)) << name;
    EXPECT_TRUE(is_unit(f.in(Domain::Rational))) << name;
  }
  for (const char* name : {"prime_char", "pi_squared"}) {
    const ArithFunc f = classical::build(name, 50);
    EXPECT_TRUE(f.is_zero_at(1)) << name;
    EXPECT_FALSE(f.is_zero_at(2)) << name;
  }
}

TEST(Build, Deterministic) {
  EXPECT_EQ(classical::build("sigma_2", 500), classical::build("sigma_2", 500));
}

TEST(Registry, NamesAndErrors) {
  EXPECT_EQ(classical::parse_name("id"), (classical::NamedFunction{Kind::Id, 1}));
  EXPECT_EQ(classical::parse_name("sigma_0"), (classical::NamedFunction{Kind::Sigma, 0}));
  EXPECT_EQ(classical::parse_name("mu").name(), "mobius");
  EXPECT_EQ(classical::parse_name("id_7").name(), "id_7");
  EXPECT_THROW(classical::parse_name("zeta"), UnknownFunction);
  EXPECT_THROW(classical::parse_name("id_"), UnknownFunction);
  EXPECT_THROW(classical::parse_name("id_x"), UnknownFunction);
  EXPECT_THROW(classical::parse_name("id_0"), OutOfRange);
  EXPECT_THROW(classical::parse_name("sigma_65"), OutOfRange);
  EXPECT_THROW(classical::build("one", 0), InvalidArgument);
  EXPECT_EQ(classical::registry_names().size(), 10u);
}

TEST(SmallestPrimeFactors, MatchesTrialDivision) {
  const auto spf = classical::smallest_prime_factors(2000);
  for (std::size_t n = 2; n <= 2000; ++n) {
    std::size_t d = 2;
    while (n % d != 0) ++d;
    ASSERT_EQ(spf[n], d) << n;
  }
}

TEST(IdentitySuite, SmallValues) {
  const ArithFunc one = classical::build("one", 10);
  EXPECT_EQ(convolve(classical::build("mobius", 10), one).at(1), Coefficient(1, Domain::Integer));
  // 1 + 2 + 3 + 6
  EXPECT_EQ(convolve(one, classical::build("id", 10)).at(6), Coefficient(12, Domain::Integer));
}

TEST(IdentitySuite, AllPassAtTenThousand) {
  const auto results = classical::identity_suite(10'000);
  ASSERT_EQ(results.size(), 4u);
  for (const auto& r : results) {
    EXPECT_TRUE(r.passed) << r.name << " failed at " << r.first_failure;
    EXPECT_EQ(r.first_failure, 0u);
  }
}

TEST(IdentitySuite, DirectSummationAtRandomIndices) {
  constexpr std::size_t N = 10'000;
  const ArithFunc mu = classical::build("mobius", N);
  const ArithFunc phi = classical::build("euler_phi", N);
  const ArithFunc sigma = classical::build("sigma_1", N);
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(1, N);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = pick(rng);
    mpz_class mu_sum = 0;
    mpz_class mu_id = 0;
    mpz_class id_sum = 0;
    for (const std::size_t d : oracle::divisors(n)) {
      mu_sum += oracle::mobius(d);
      mu_id += oracle::mobius(d) * static_cast<long>(n / d);
      id_sum += static_cast<long>(d);
    }
    EXPECT_EQ(mu_sum, n == 1 ? 1 : 0) << n;
    EXPECT_EQ(mu_id, phi.at(n).to_integer()) << n;
    EXPECT_EQ(id_sum, sigma.at(n).to_integer()) << n;
  }
}
