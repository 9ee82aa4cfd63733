#include "regint/arithmetic.hpp"
#include "regint/factorization.hpp"
#include "regint/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

using namespace regint;

TEST_CASE("factorize basic shapes") {
  CHECK(factorize(1).factors().empty());
  CHECK(factorize(1).n() == 1);

  Factorization f12 = factorize(12);
  REQUIRE(f12.factors().size() == 2);
  CHECK(f12.factors()[0] == PrimePower{2, 2});
  CHECK(f12.factors()[1] == PrimePower{3, 1});

  // primorial of 19, expected value built by direct multiplication
  std::uint64_t primorial = 1;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19}) primorial *= p;
  REQUIRE(primorial == 9699690);
  Factorization fp = factorize(primorial);
  REQUIRE(fp.factors().size() == 8);
  for (std::size_t i = 0; i < 8; ++i) CHECK(fp.factors()[i].nu == 1);

  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize beyond the sieve bound") {
  // 2^61 - 1 is prime; also a composite with two large factors
  Factorization f = factorize((1ull << 61) - 1);
  REQUIRE(f.factors().size() == 1);
  CHECK(f.factors()[0].nu == 1);

  std::uint64_t a = 1'000'003, b = 998'244'353;  // both prime
  Factorization g = factorize(a * b);
  REQUIRE(g.factors().size() == 2);
  CHECK(g.factors()[0].p == a);
  CHECK(g.factors()[1].p == b);
}

TEST_CASE("reconstruction over the first million") {
  for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
    Factorization f = factorize(n);
    std::uint64_t prod = 1;
    for (const auto& [p, nu] : f.factors())
      for (std::uint32_t i = 0; i < nu; ++i) prod *= p;
    if (prod != n) {
      FAIL("reconstruction failed at n = " << n);
    }
  }
  SUCCEED();
}

TEST_CASE("divisors and unitary divisors") {
  CHECK(unitary_divisors(12) == std::vector<std::uint64_t>{1, 3, 4, 12});
  for (std::uint64_t q : {8ull, 27ull, 121ull}) {
    CHECK(unitary_divisors(q) == std::vector<std::uint64_t>{1, q});
  }
  CHECK(unitary_divisors(30) == divisors(30));  // squarefree
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});

  for (std::uint64_t n = 1; n <= 200; ++n) {
    auto uds = unitary_divisors(n);
    CHECK(uds.front() == 1);
    CHECK(uds.back() == n);
    for (std::uint64_t d : divisors(n)) {
      bool in_list = std::binary_search(uds.begin(), uds.end(), d);
      CHECK(in_list == (std::gcd(d, n / d) == 1));
    }
  }
}

TEST_CASE("classical multiplicative functions") {
  CHECK(euler_phi(12) == 4);
  CHECK(kappa(12) == 6);
  CHECK(tau(12) == 6);
  CHECK(omega(12) == 2);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  CHECK(mobius(6) == 1);
  CHECK(mangoldt(8) == LogExact{2});
  CHECK(mangoldt(12) == LogExact{1});
  CHECK(sigma_s(6, 2) == 50);  // 1 + 4 + 9 + 36
}

TEST_CASE("LogExact addition multiplies bases") {
  CHECK((LogExact{2} + LogExact{3}).base == 6);
  // The unitary sum of von Mangoldt terms is log kappa(n), bit-exact.
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    LogExact sum{1};
    for (std::uint64_t d : unitary_divisors(n)) sum += mangoldt(d);
    CHECK(sum.base == kappa(n));
  }
}

TEST_CASE("jordan_phi examples and definitional sum") {
  CHECK(jordan_phi(2, 12) == BigRat(96));
  for (std::int64_t s = -3; s <= 3; ++s) CHECK(jordan_phi(s, 1) == BigRat(1));
  CHECK(jordan_phi(-1, 4) == BigRat(-1, 4));
  CHECK(jordan_phi(1, 360) == BigRat(euler_phi(360)));

  for (std::uint64_t n = 1; n <= 500; ++n) {
    for (std::int64_t s = -3; s <= 4; ++s) {
      BigRat definitional(0);
      for (std::uint64_t d : divisors(n)) {
        int mu = mobius(n / d);
        if (mu != 0) definitional += BigRat(mu) * int_pow_rat(d, s);
      }
      if (jordan_phi(s, n) != definitional) {
        FAIL("jordan_phi mismatch at n = " << n << ", s = " << s);
      }
    }
  }
  SUCCEED();
}

TEST_CASE("ramanujan sums") {
  CHECK(ramanujan_sum(12, 0) == 4);  // c_n(0) = phi(n)
  for (std::uint64_t n = 1; n <= 50; ++n) CHECK(ramanujan_sum(n, 1) == mobius(n));
  CHECK(ramanujan_sum(9, 3) == -3);

  SECTION("periodicity in t and the divisor route") {
    for (std::uint64_t n = 1; n <= 200; ++n) {
      for (std::int64_t t = -200; t <= 200; ++t) {
        std::int64_t c = ramanujan_sum(n, t);
        CHECK(c == ramanujan_sum(n, t + static_cast<std::int64_t>(n)));
        CHECK(c == oracle::ramanujan_sum_divisor_route(n, t));
      }
    }
  }

  SECTION("integrality bound |c_n(t)| <= phi(n)") {
    for (std::uint64_t n = 1; n <= 500; ++n) {
      std::int64_t phi = static_cast<std::int64_t>(euler_phi(n));
      for (std::int64_t t = -500; t <= 500; ++t) {
        if (std::llabs(ramanujan_sum(n, t)) > phi)
          FAIL("|c_n(t)| > phi(n) at n=" << n << " t=" << t);
      }
    }
    SUCCEED();
  }

  SECTION("exponential-sum oracle at 1e-9") {
    for (std::uint64_t n = 1; n <= 60; ++n) {
      for (std::int64_t t = -60; t <= 60; ++t) {
        oracle::ComplexSum s = oracle::weighted_exponential_sum(
            oracle::Domain::Coprime, n, t, [](std::uint64_t) { return 1.0L; });
        CHECK(fabsl(s.re - static_cast<long double>(ramanujan_sum(n, t))) <= 1e-9L);
        CHECK(fabsl(s.im) <= 1e-9L);
      }
    }
  }
}

TEST_CASE("multiplicative_eval") {
  auto rho_local = [](std::uint64_t p, std::uint32_t nu) -> BigRat {
    return int_pow_rat(p, nu) - int_pow_rat(p, nu - 1) + 1;
  };
  CHECK(multiplicative_eval(rho_local, 12) == BigRat(9));
  CHECK(multiplicative_eval(rho_local, 1) == BigRat(1));
  auto identity_local = [](std::uint64_t p, std::uint32_t nu) -> BigRat {
    return int_pow_rat(p, nu);
  };
  CHECK(multiplicative_eval(identity_local, 360) == BigRat(360));
}

TEST_CASE("unitary convolution preserves multiplicativity") {
  std::mt19937_64 rng(20120901);
  int found = 0;
  while (found < 400) {
    std::uint64_t m = rng() % 10'000 + 1;
    std::uint64_t n = rng() % 10'000 + 1;
    if (std::gcd(m, n) != 1) continue;
    ++found;
    CHECK(euler_phi(m * n) == euler_phi(m) * euler_phi(n));
    CHECK(tau(m * n) == tau(m) * tau(n));
    CHECK(sigma_s(m * n, 2) == sigma_s(m, 2) * sigma_s(n, 2));
    CHECK(mobius(m * n) == mobius(m) * mobius(n));
    CHECK(kappa(m * n) == kappa(m) * kappa(n));
    CHECK(jordan_phi(3, m * n) == jordan_phi(3, m) * jordan_phi(3, n));
    CHECK(jordan_phi(-2, m * n) == jordan_phi(-2, m) * jordan_phi(-2, n));
  }
}

TEST_CASE("factorization invariants are enforced") {
  CHECK_THROWS_AS(Factorization(12, {{3, 1}, {2, 2}}), std::invalid_argument);  // order
  CHECK_THROWS_AS(Factorization(12, {{2, 2}, {3, 2}}), std::invalid_argument);  // product
  CHECK_THROWS_AS(Factorization(8, {{8, 1}}), std::invalid_argument);           // not prime
}
