#pragma once

#include "regint/arithmetic.hpp"
#include "regint/bigint.hpp"
#include "regint/polynomial.hpp"
#include "regint/regular.hpp"

#include <cmath>
#include <cstdint>
#include <mutex>
#include <vector>

namespace regint {

namespace detail {

/// Grow-only cache of Bernoulli numbers from the defining recurrence.
/// Thread-safe; each entry is computed exactly once.
class BernoulliCache {
 public:
  BigRat get(std::uint32_t m) {
    std::lock_guard<std::mutex> lock(mutex_);
    while (values_.size() <= m) extend();
    return values_[m];
  }

 private:
  void extend() {
    const std::size_t m = values_.size();
    if (m == 0) {
      values_.emplace_back(1);
      return;
    }
    if (m == 1) {
      values_.emplace_back(BigRat(-1, 2));
      return;
    }
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, solved for B_m.
    BigRat acc(0);
    for (std::size_t j = 0; j < m; ++j)
      acc += BigRat(binomial_big(m + 1, j)) * values_[j];
    values_.push_back(-acc / BigRat(m + 1));
  }

  std::mutex mutex_;
  std::vector<BigRat> values_;
};

inline BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

}  // namespace detail

/// B_m, exact. B_0 = 1, B_1 = -1/2, zero for odd m >= 3.
inline BigRat bernoulli_number(std::uint32_t m) { return detail::bernoulli_cache().get(m); }

/// B_m(x) = sum_j C(m, j) B_j x^{m-j}, exact coefficients ascending.
inline RationalPolynomial bernoulli_poly(std::uint32_t m) {
  std::vector<BigRat> coeffs(m + 1, BigRat(0));
  for (std::uint32_t j = 0; j <= m; ++j)
    coeffs[m - j] = BigRat(binomial_big(m, j)) * bernoulli_number(j);
  return RationalPolynomial(std::move(coeffs));
}

inline BigRat bernoulli_poly_eval(std::uint32_t m, const BigRat& x) {
  return bernoulli_poly(m).eval(x);
}

namespace detail {

inline BigInt to_integer_exact(const BigRat& q, const char* what) {
  if (!is_integer(q)) throw std::logic_error(std::string(what) + ": value is not an integer");
  return numerator(q);
}

}  // namespace detail

/// Faulhaber form of sum_{k=1}^{n} k^r.
inline BigInt power_sum_all(std::uint32_t r, std::uint64_t n) {
  if (r == 0 || n == 0) throw std::invalid_argument("power_sum_all: r, n must be >= 1");
  BigRat nr(pow_big(BigInt(n), r));
  BigRat acc(0);
  for (std::uint32_t m = 0; 2 * m <= r; ++m)
    acc += BigRat(binomial_big(r + 1, 2 * m)) * bernoulli_number(2 * m) *
           BigRat(pow_big(BigInt(n), r + 1 - 2 * m));
  BigRat total = nr / 2 + acc / BigRat(r + 1);
  return detail::to_integer_exact(total, "power_sum_all");
}

/// Sum of k^r over k in [1, n] coprime to n. The closed form applies for
/// n >= 2; n = 1 returns 1 by convention (the sum contains only k = 1).
inline BigInt power_sum_coprime(std::uint32_t r, std::uint64_t n) {
  if (r == 0 || n == 0) throw std::invalid_argument("power_sum_coprime: r, n must be >= 1");
  if (n == 1) return 1;
  Factorization f = factorize(n);
  BigRat acc(0);
  for (std::uint32_t m = 0; 2 * m <= r; ++m)
    acc += BigRat(binomial_big(r + 1, 2 * m)) * bernoulli_number(2 * m) *
           jordan_phi(1 - 2 * static_cast<std::int64_t>(m), f);
  BigRat total = BigRat(pow_big(BigInt(n), r)) * acc / BigRat(r + 1);
  return detail::to_integer_exact(total, "power_sum_coprime");
}

/// Sum of k^r over the regular residues k (mod n):
/// n^r/2 + n^r/(r+1) * sum_m C(r+1, 2m) B_{2m} rho_{1-2m}(n).
inline BigInt power_sum_regular(std::uint32_t r, std::uint64_t n) {
  if (r == 0 || n == 0) throw std::invalid_argument("power_sum_regular: r, n must be >= 1");
  Factorization f = factorize(n);
  BigRat acc(0);
  for (std::uint32_t m = 0; 2 * m <= r; ++m)
    acc += BigRat(binomial_big(r + 1, 2 * m)) * bernoulli_number(2 * m) *
           rho_s(1 - 2 * static_cast<std::int64_t>(m), f);
  BigRat nr(pow_big(BigInt(n), r));
  BigRat total = nr / 2 + nr * acc / BigRat(r + 1);
  return detail::to_integer_exact(total, "power_sum_regular");
}

struct SpecialCaseSums {
  BigInt s1, s2, s3, s4;
};

/// The specialized regular power-sum formulas for r = 1..4, each evaluated
/// from its own local products and checked against power_sum_regular.
inline SpecialCaseSums special_case_sums(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("special_case_sums: n must be >= 1");
  Factorization f = factorize(n);
  const BigInt vrho(rho(f));
  BigInt prod1 = multiplicative_eval(
      [](std::uint64_t p, std::uint32_t nu) -> BigInt {
        return BigInt(pow_big(BigInt(p), nu) - BigInt(p) + 1);
      },
      f);
  BigInt prod3 = multiplicative_eval(
      [](std::uint64_t p, std::uint32_t nu) -> BigInt {
        return BigInt(pow_big(BigInt(p), 3ull * nu) - pow_big(BigInt(p), 3) + 1);
      },
      f);
  const BigRat n1(n);
  const BigRat n2 = n1 * n1;
  const BigRat n3 = n2 * n1;
  const BigRat n4 = n3 * n1;
  SpecialCaseSums out;
  out.s1 = detail::to_integer_exact(n1 * (BigRat(vrho) + 1) / 2, "special_case_sums");
  out.s2 = detail::to_integer_exact(n2 / 2 + n2 * BigRat(vrho) / 3 + n1 * BigRat(prod1) / 6,
                                    "special_case_sums");
  out.s3 = detail::to_integer_exact(n3 / 2 + n3 * BigRat(vrho) / 4 + n2 * BigRat(prod1) / 4,
                                    "special_case_sums");
  out.s4 = detail::to_integer_exact(
      n4 / 2 + n4 * BigRat(vrho) / 5 + n3 * BigRat(prod1) / 3 - n1 * BigRat(prod3) / 30,
      "special_case_sums");
  if (out.s1 != power_sum_regular(1, n) || out.s2 != power_sum_regular(2, n) ||
      out.s3 != power_sum_regular(3, n) || out.s4 != power_sum_regular(4, n))
    throw std::logic_error("special_case_sums: specialized formulas disagree with general form");
  return out;
}

struct PartialPowerSum {
  double value;
  double main_term;
};

inline constexpr double kPartialSumBound = 1e7;

/// Brute sum of k^s over regular k <= x, next to the main term
/// x^{s+1}/(s+1) * rho(n)/n. The error is reported by the caller, not assumed.
inline PartialPowerSum partial_power_sum_regular(double s, std::uint64_t n, double x) {
  if (s < 0) throw std::invalid_argument("partial_power_sum_regular: s must be >= 0");
  if (n == 0 || x <= 1) throw std::invalid_argument("partial_power_sum_regular: need n >= 1, x > 1");
  if (x > kPartialSumBound)
    throw CapacityError("partial_power_sum_regular: x exceeds enumeration bound");
  const std::uint64_t limit = static_cast<std::uint64_t>(x);
  long double acc = 0.0L;
  if (n <= limit) {
    std::vector<char> regular_residue(n);
    for (std::uint64_t r = 0; r < n; ++r)
      regular_residue[r] = is_regular(static_cast<std::int64_t>(r), n) ? 1 : 0;
    for (std::uint64_t k = 1; k <= limit; ++k) {
      if (regular_residue[k % n])
        acc += powl(static_cast<long double>(k), static_cast<long double>(s));
    }
  } else {
    for (std::uint64_t k = 1; k <= limit; ++k) {
      if (is_regular(static_cast<std::int64_t>(k), n))
        acc += powl(static_cast<long double>(k), static_cast<long double>(s));
    }
  }
  const double main = std::pow(x, s + 1) / (s + 1) * static_cast<double>(rho(n)) /
                      static_cast<double>(n);
  return {static_cast<double>(acc), main};
}

/// Sum of B_m(k/n) over all k in [1, n]; equals B_m / n^{m-1}.
inline BigRat bernoulli_sum_all(std::uint32_t m, std::uint64_t n) {
  if (m < 2 || n == 0) throw std::invalid_argument("bernoulli_sum_all: need m >= 2, n >= 1");
  return bernoulli_number(m) * int_pow_rat(n, 1 - static_cast<std::int64_t>(m));
}

/// Sum of B_m(k/n) over k coprime to n; equals B_m * phi_{1-m}(n).
inline BigRat bernoulli_sum_coprime(std::uint32_t m, std::uint64_t n) {
  if (m < 2 || n == 0) throw std::invalid_argument("bernoulli_sum_coprime: need m >= 2, n >= 1");
  return bernoulli_number(m) * jordan_phi(1 - static_cast<std::int64_t>(m), n);
}

/// Sum of B_m(k/n) over regular k (mod n); equals B_m * rho_{1-m}(n).
inline BigRat bernoulli_sum_regular(std::uint32_t m, std::uint64_t n) {
  if (m < 2 || n == 0) throw std::invalid_argument("bernoulli_sum_regular: need m >= 2, n >= 1");
  return bernoulli_number(m) * rho_s(1 - static_cast<std::int64_t>(m), n);
}

/// The m = 1 case. Over k in Reg_n the sum is identically 1/2; shifting to
/// the k = 0 based range [0, n-1] gives B_1 * rho_0(n) = -1/2 instead.
inline BigRat bernoulli_sum_regular_m1(std::uint64_t n, bool include_zero) {
  if (n == 0) throw std::invalid_argument("bernoulli_sum_regular_m1: n must be >= 1");
  if (!include_zero) return BigRat(1, 2);
  return bernoulli_number(1) * rho_s(0, n);
}

}  // namespace regint
