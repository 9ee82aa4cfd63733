#include "regint/oracles.hpp"
#include "regint/products.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace regint;

TEST_CASE("factorial core A(n)") {
  CHECK(factorial_core(1) == BigRat(1));
  CHECK(factorial_core(2) == BigRat(1, 2));
  CHECK(factorial_core(4) == BigRat(3, 16));
  CHECK_THROWS_AS(factorial_core(kFactorialBound + 1), CapacityError);
}

TEST_CASE("coprime product Q'") {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    BigInt q = product_coprime(n);
    CHECK(q > 0);
    CHECK(q == oracle::product_over(oracle::Domain::Coprime, n));
  }
}

TEST_CASE("regular product Q-bar") {
  CHECK(product_regular(4) == 12);  // 1 * 3 * 4
  CHECK(product_regular(1) == 1);
  CHECK(product_regular(6) == 720);  // squarefree: 6!
  for (std::uint64_t n = 1; n <= 300; ++n) {
    BigInt q = product_regular(n);
    CHECK(q == oracle::product_over(oracle::Domain::Regular, n));
    if (factorize(n).squarefree()) CHECK(q == oracle::product_over(oracle::Domain::All, n));
  }
  CHECK_THROWS_AS(product_regular(kFactorialBound + 1), CapacityError);
}

TEST_CASE("log Q-bar decomposition in exact bookkeeping") {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    BigInt lhs = product_regular(n);
    BigInt rhs = pow_big(BigInt(n), rho(n));
    for (std::uint64_t d : unitary_divisors(n)) {
      lhs *= pow_big(BigInt(d), euler_phi(d));
      rhs *= product_coprime(d);
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("ExactProduct composition") {
  ExactProduct a{BigInt(12), BigRat(3, 16)};
  ExactProduct b{BigInt(5), BigRat(4, 3)};
  ExactProduct c = a;
  c *= b;
  CHECK(c.value() == BigRat(12) * BigRat(3, 16) * BigRat(5) * BigRat(4, 3));
  CHECK(ExactProduct{}.value() == BigRat(1));
}

TEST_CASE("gamma products, pinned closed forms") {
  const double pi = 3.14159265358979323846;
  CHECK(gamma_product_all(2).log_abs == Catch::Approx(0.5 * std::log(pi)).margin(1e-12));
  CHECK(gamma_product_coprime(4).log_abs ==
        Catch::Approx(std::log(pi * std::sqrt(2.0))).margin(1e-12));
  CHECK(gamma_product_regular(12).log_abs ==
        Catch::Approx(4.0 * std::log(2.0 * pi) - 0.5 * std::log(6.0)).margin(1e-12));
  CHECK(gamma_product_regular(12).value() == Catch::Approx(636.2557).epsilon(1e-4));
  CHECK(gamma_product_regular(1).log_abs == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("gamma products against brute lgamma sums") {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    CHECK(std::fabs(gamma_product_all(n).log_abs -
                    oracle::gamma_product_brute(oracle::Domain::All, n).log_abs) <= 1e-9);
    if (n >= 2)
      CHECK(std::fabs(gamma_product_coprime(n).log_abs -
                      oracle::gamma_product_brute(oracle::Domain::Coprime, n).log_abs) <= 1e-9);
    CHECK(std::fabs(gamma_product_regular(n).log_abs -
                    oracle::gamma_product_brute(oracle::Domain::Regular, n).log_abs) <= 1e-9);
    if (factorize(n).squarefree())
      CHECK(std::fabs(gamma_product_regular(n).log_abs - gamma_product_all(n).log_abs) <= 1e-12);
  }
}

TEST_CASE("trig sums pinned and brute-checked") {
  CHECK(trig_sum(TrigKind::Cos2, TrigDomain::Regular, 12) == BigRat(9, 2));
  CHECK(trig_sum(TrigKind::Tan2, TrigDomain::Regular, 9) == BigRat(66));
  for (std::uint64_t n = 2; n <= 50; ++n)
    CHECK(trig_sum(TrigKind::Cos2, TrigDomain::All, n) == BigRat(n, 2));

  CHECK_THROWS_AS(trig_sum(TrigKind::Tan2, TrigDomain::All, 10), std::invalid_argument);
  CHECK_THROWS_AS(trig_sum(TrigKind::Cos2, TrigDomain::All, 1), std::invalid_argument);

  for (std::uint64_t n = 2; n <= 100; ++n) {
    for (auto domain : {TrigDomain::All, TrigDomain::Coprime, TrigDomain::Regular}) {
      oracle::Domain od = domain == TrigDomain::All       ? oracle::Domain::All
                          : domain == TrigDomain::Coprime ? oracle::Domain::Coprime
                                                          : oracle::Domain::Regular;
      long double closed = trig_sum(TrigKind::Cos2, domain, n).convert_to<long double>();
      CHECK(fabsl(oracle::trig_sum_brute(TrigKind::Cos2, od, n) - closed) <= 1e-7L);
      if (n % 2 == 1) {
        for (auto kind : {TrigKind::Tan2, TrigKind::Tan4}) {
          long double c = trig_sum(kind, domain, n).convert_to<long double>();
          CHECK(fabsl(oracle::trig_sum_brute(kind, od, n) - c) <= 1e-7L);
        }
      }
    }
  }
}

TEST_CASE("trig products pinned") {
  CHECK(trig_product(TrigProductKind::Sin, TrigProductDomain::RegularMod, 4) == 0.5);
  CHECK(trig_product(TrigProductKind::Sin, TrigProductDomain::RegularMod, 12) ==
        Catch::Approx(3.0 / 128.0).epsilon(1e-12));
  CHECK(trig_product(TrigProductKind::Cos, TrigProductDomain::RegularMod, 9) ==
        Catch::Approx(-1.0 / 64.0).epsilon(1e-12));
  CHECK_THROWS_AS(trig_product(TrigProductKind::Cos, TrigProductDomain::RegularMod, 8),
                  std::invalid_argument);
}

TEST_CASE("trig products against brute (relative, in log space)") {
  for (std::uint64_t n = 2; n <= 100; ++n) {
    // U(n) and the modified U*(n)
    LogSpaceReal u_brute =
        oracle::trig_product_brute(TrigProductKind::Sin, oracle::Domain::Coprime, n, false);
    double u_closed = trig_product(TrigProductKind::Sin, TrigProductDomain::Coprime, n);
    REQUIRE(u_brute.sign == 1);
    CHECK(std::fabs(u_brute.log_abs - std::log(u_closed)) <= 1e-9);

    LogSpaceReal us_brute =
        oracle::trig_product_brute(TrigProductKind::Sin, oracle::Domain::Regular, n, true);
    double us_closed = trig_product(TrigProductKind::Sin, TrigProductDomain::RegularMod, n);
    REQUIRE(us_brute.sign == 1);
    CHECK(std::fabs(us_brute.log_abs - std::log(us_closed)) <= 1e-9);

    if (n >= 3) {
      LogSpaceReal v_brute =
          oracle::trig_product_brute(TrigProductKind::Cos, oracle::Domain::Coprime, n, false);
      double v_closed = trig_product(TrigProductKind::Cos, TrigProductDomain::Coprime, n);
      REQUIRE(v_brute.sign == (v_closed > 0 ? 1 : -1));
      CHECK(std::fabs(v_brute.log_abs - std::log(std::fabs(v_closed))) <= 1e-9);
    }
    if (n >= 3 && n % 2 == 1) {
      LogSpaceReal vs_brute =
          oracle::trig_product_brute(TrigProductKind::Cos, oracle::Domain::Regular, n, true);
      double vs_closed = trig_product(TrigProductKind::Cos, TrigProductDomain::RegularMod, n);
      REQUIRE(vs_brute.sign == (vs_closed > 0 ? 1 : -1));
      CHECK(std::fabs(vs_brute.log_abs - std::log(std::fabs(vs_closed))) <= 1e-9);
    }
  }
}

TEST_CASE("full sine product over Reg_n vanishes") {
  for (std::uint64_t n = 1; n <= 100; ++n)
    CHECK(oracle::trig_product_brute(TrigProductKind::Sin, oracle::Domain::Regular, n, false)
              .sign == 0);
}

TEST_CASE("rho(n) is odd for odd n") {
  for (std::uint64_t n = 1; n <= 100'000; n += 2) {
    if (rho(n) % 2 != 1) FAIL("rho even at odd n = " << n);
  }
  SUCCEED();
}

TEST_CASE("LogSpaceReal") {
  LogSpaceReal a = LogSpaceReal::from_value(-2.0);
  LogSpaceReal b = LogSpaceReal::from_value(8.0);
  LogSpaceReal c = a * b;
  CHECK(c.sign == -1);
  CHECK(c.value() == Catch::Approx(-16.0).epsilon(1e-12));
  CHECK((a * LogSpaceReal::from_value(0.0)).sign == 0);
}
