#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace regint {

/// Arbitrary-precision signed integer.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational; always stored canonically (gcd-reduced, denominator >= 1).
using BigRat = boost::multiprecision::cpp_rational;

/// Thrown when an argument exceeds the declared brute-force or sieve bound.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

inline BigInt pow_big(const BigInt& base, std::uint64_t exp) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

/// base^exp for any integer exp; exp < 0 requires base != 0.
inline BigRat rat_pow(const BigRat& base, std::int64_t exp) {
  if (exp == 0) return BigRat(1);
  if (base == 0 && exp < 0) throw std::invalid_argument("rat_pow: 0^negative");
  const std::uint64_t e =
      exp < 0 ? static_cast<std::uint64_t>(-(exp + 1)) + 1 : static_cast<std::uint64_t>(exp);
  BigInt num = pow_big(boost::multiprecision::numerator(base), e);
  BigInt den = pow_big(boost::multiprecision::denominator(base), e);
  return exp > 0 ? BigRat(num, den) : BigRat(den, num);
}

inline BigRat int_pow_rat(std::uint64_t base, std::int64_t exp) {
  return rat_pow(BigRat(base), exp);
}

inline BigInt binomial_big(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t j = 1; j <= k; ++j) {
    result *= (n - k + j);
    result /= j;  // exact at every step
  }
  return result;
}

inline BigInt numerator(const BigRat& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const BigRat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const BigRat& q) { return denominator(q) == 1; }

}  // namespace regint
