#include "regint/bernoulli.hpp"
#include "regint/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace regint;

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli_number(0) == BigRat(1));
  CHECK(bernoulli_number(1) == BigRat(-1, 2));
  CHECK(bernoulli_number(2) == BigRat(1, 6));
  CHECK(bernoulli_number(4) == BigRat(-1, 30));
  CHECK(bernoulli_number(7) == BigRat(0));
  for (std::uint32_t m = 3; m <= 41; m += 2) CHECK(bernoulli_number(m) == BigRat(0));
  CHECK(bernoulli_number(12) == BigRat(-691, 2730));
}

TEST_CASE("B_12 cross-checked through a power-sum reconstruction") {
  // Independent route: sum k^12 for k <= 10 brute, then recover B_12 from the
  // Faulhaber expansion using the cached B_0..B_10.
  BigInt brute = 0;
  for (std::uint64_t k = 1; k <= 10; ++k) brute += pow_big(BigInt(k), 12);
  const std::uint64_t n = 10;
  const std::uint32_t r = 12;
  // S_r(n) = n^r/2 + 1/(r+1) * sum_m C(r+1, 2m) B_2m n^{r+1-2m}
  BigRat rest = BigRat(pow_big(BigInt(n), r)) / 2;
  for (std::uint32_t m = 0; m < r / 2; ++m)
    rest += BigRat(binomial_big(r + 1, 2 * m)) * bernoulli_number(2 * m) *
            BigRat(pow_big(BigInt(n), r + 1 - 2 * m)) / BigRat(r + 1);
  // remaining term: C(13, 12) B_12 n / 13 = B_12 n
  BigRat recovered = (BigRat(brute) - rest) / BigRat(n);
  CHECK(recovered == bernoulli_number(12));
}

TEST_CASE("recurrence identities") {
  // sum_{j=0}^{m-1} C(m, j) B_j = 0 for m >= 2
  for (std::uint32_t m = 2; m <= 40; ++m) {
    BigRat acc(0);
    for (std::uint32_t j = 0; j < m; ++j)
      acc += BigRat(binomial_big(m, j)) * bernoulli_number(j);
    CHECK(acc == BigRat(0));
  }
  // closure used at the end of the power-sum proof
  for (std::uint32_t r = 1; r <= 40; ++r) {
    BigRat acc(0);
    for (std::uint32_t m = 0; 2 * m <= r; ++m)
      acc += BigRat(binomial_big(r + 1, 2 * m)) * bernoulli_number(2 * m);
    CHECK(acc == BigRat(r + 1, 2));
  }
}

TEST_CASE("bernoulli polynomials") {
  RationalPolynomial b2 = bernoulli_poly(2);
  CHECK(b2.coefficients() == std::vector<BigRat>{BigRat(1, 6), BigRat(-1), BigRat(1)});
  RationalPolynomial b3 = bernoulli_poly(3);
  CHECK(b3.coefficients() ==
        std::vector<BigRat>{BigRat(0), BigRat(1, 2), BigRat(-3, 2), BigRat(1)});
  CHECK(bernoulli_poly_eval(2, BigRat(1, 2)) == BigRat(-1, 12));
  for (std::uint32_t m = 0; m <= 12; ++m) {
    CHECK(bernoulli_poly_eval(m, BigRat(0)) == bernoulli_number(m));
    if (m >= 2) CHECK(bernoulli_poly_eval(m, BigRat(1)) == bernoulli_number(m));
  }
}

TEST_CASE("power sums, all residues") {
  CHECK(power_sum_all(1, 10) == 55);
  CHECK(power_sum_all(2, 4) == 30);
  CHECK(power_sum_all(3, 5) == 225);
  CHECK(power_sum_all(3, 5) == power_sum_all(1, 5) * power_sum_all(1, 5));
  for (std::uint64_t n = 1; n <= 400; ++n)
    for (std::uint32_t r = 1; r <= 6; ++r)
      CHECK(power_sum_all(r, n) == oracle::power_sum(oracle::Domain::All, r, n));
}

TEST_CASE("power sums, coprime residues") {
  CHECK(power_sum_coprime(1, 12) == 24);
  CHECK(power_sum_coprime(2, 12) == 196);
  CHECK(power_sum_coprime(2, 2) == 1);
  CHECK(power_sum_coprime(5, 1) == 1);  // n = 1 convention
  for (std::uint64_t n = 1; n <= 400; ++n)
    for (std::uint32_t r = 1; r <= 6; ++r)
      CHECK(power_sum_coprime(r, n) == oracle::power_sum(oracle::Domain::Coprime, r, n));
}

TEST_CASE("power sums, regular residues") {
  CHECK(power_sum_regular(1, 12) == 60);
  CHECK(power_sum_regular(2, 12) == 510);
  for (std::uint32_t r = 1; r <= 6; ++r) CHECK(power_sum_regular(r, 1) == 1);
  for (std::uint64_t n = 1; n <= 400; ++n) {
    const bool squarefree = factorize(n).squarefree();
    for (std::uint32_t r = 1; r <= 6; ++r) {
      CHECK(power_sum_regular(r, n) == oracle::power_sum(oracle::Domain::Regular, r, n));
      if (squarefree) CHECK(power_sum_regular(r, n) == power_sum_all(r, n));
    }
  }
}

TEST_CASE("special case sums r = 1..4") {
  SpecialCaseSums s12 = special_case_sums(12);
  CHECK(s12.s1 == 60);
  CHECK(s12.s2 == 510);
  for (std::uint64_t n = 1; n <= 300; ++n) {
    SpecialCaseSums s = special_case_sums(n);  // throws if a display disagrees
    CHECK(s.s1 == oracle::power_sum(oracle::Domain::Regular, 1, n));
    CHECK(s.s4 == oracle::power_sum(oracle::Domain::Regular, 4, n));
  }
}

TEST_CASE("partial power sums over regular k <= x") {
  PartialPowerSum p = partial_power_sum_regular(0.0, 12, 1200.0);
  CHECK(p.value == 900.0);  // 100 full periods of 9
  CHECK(p.main_term == Catch::Approx(900.0).margin(1e-9));

  PartialPowerSum q = partial_power_sum_regular(0.0, 1, 100.0);
  CHECK(q.value == 100.0);
  CHECK(q.main_term == Catch::Approx(100.0).margin(1e-9));

  // s = 1, n = 12, x = 1200: the brute sum is exactly 540600 by periodicity
  // (100 full periods: 9 * 12 * (0+...+99) + 100 * 60), main term 540000.
  PartialPowerSum r = partial_power_sum_regular(1.0, 12, 1200.0);
  CHECK(r.value == Catch::Approx(540600.0).margin(1e-6));
  CHECK(r.main_term == Catch::Approx(540000.0).margin(1e-6));
  CHECK(std::fabs(r.value - r.main_term) <= 1200.0 * 9.0);  // x^s 3^omega

  CHECK_THROWS_AS(partial_power_sum_regular(0.0, 12, 2e7), CapacityError);
  CHECK_THROWS_AS(partial_power_sum_regular(-1.0, 12, 100.0), std::invalid_argument);
}

TEST_CASE("bernoulli polynomial sums") {
  CHECK(bernoulli_sum_all(2, 4) == BigRat(1, 24));
  CHECK(bernoulli_sum_regular(2, 4) == BigRat(1, 8));
  for (std::uint64_t n : {6ull, 30ull, 210ull})  // squarefree reduction
    for (std::uint32_t m = 2; m <= 6; ++m)
      CHECK(bernoulli_sum_regular(m, n) == bernoulli_sum_all(m, n));

  for (std::uint64_t n = 1; n <= 300; ++n) {
    for (std::uint32_t m = 2; m <= 8; ++m) {
      CHECK(bernoulli_sum_all(m, n) == oracle::bernoulli_domain_sum(m, n, oracle::Domain::All));
      CHECK(bernoulli_sum_coprime(m, n) ==
            oracle::bernoulli_domain_sum(m, n, oracle::Domain::Coprime));
      CHECK(bernoulli_sum_regular(m, n) ==
            oracle::bernoulli_domain_sum(m, n, oracle::Domain::Regular));
    }
  }
}

TEST_CASE("the m = 1 sum") {
  CHECK(bernoulli_sum_regular_m1(12, false) == BigRat(1, 2));
  CHECK(bernoulli_sum_regular_m1(1, false) == BigRat(1, 2));
  CHECK(bernoulli_sum_regular_m1(12, true) == BigRat(-1, 2));
  for (std::uint64_t n = 1; n <= 200; ++n) {
    CHECK(oracle::bernoulli_domain_sum(1, n, oracle::Domain::Regular) == BigRat(1, 2));
    CHECK(oracle::bernoulli_sum_from_zero(1, n) == BigRat(-1, 2));
  }
}
