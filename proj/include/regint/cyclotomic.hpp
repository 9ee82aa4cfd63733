#pragma once

#include "regint/factorization.hpp"
#include "regint/polynomial.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace regint {

inline constexpr std::uint64_t kCyclotomicBound = 10'000;

namespace detail {

/// Cyclotomic polynomial of a squarefree m as a product/quotient of the
/// binomials (x^{m/d} - 1)^{mu(d)}. All the +1 factors are multiplied first,
/// so each subsequent binomial division is exact.
inline Polynomial<std::int64_t> cyclotomic_squarefree_i64(std::uint64_t m,
                                                          const std::vector<std::uint64_t>& primes) {
  Polynomial<std::int64_t> poly = Polynomial<std::int64_t>::monomial(0);
  std::vector<std::size_t> divide_by;
  const std::size_t subsets = std::size_t{1} << primes.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::uint64_t d = 1;
    bool negative = false;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask & (std::size_t{1} << i)) {
        d *= primes[i];
        negative = !negative;
      }
    }
    if (negative) {
      divide_by.push_back(m / d);
    } else {
      poly.mul_binomial(m / d);
    }
  }
  for (std::size_t e : divide_by) poly.divexact_binomial(e);
  return poly;
}

/// Replace x by x^k (spread coefficients).
inline Polynomial<std::int64_t> substitute_power_i64(const Polynomial<std::int64_t>& p,
                                                     std::uint64_t k) {
  if (k == 1 || p.is_zero()) return p;
  std::vector<std::int64_t> out(static_cast<std::size_t>(p.degree()) * k + 1, 0);
  for (std::size_t i = 0; i < p.coefficients().size(); ++i)
    out[i * k] = p.coefficients()[i];
  return Polynomial<std::int64_t>(std::move(out));
}

class CyclotomicCache {
 public:
  std::shared_ptr<const Polynomial<std::int64_t>> get(std::uint64_t n) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = cache_.find(n);
      if (it != cache_.end()) return it->second;
    }
    Factorization f = factorize(n);
    std::vector<std::uint64_t> primes;
    std::uint64_t rad = 1;
    for (const auto& pp : f.factors()) {
      primes.push_back(pp.p);
      rad *= pp.p;
    }
    auto poly = std::make_shared<const Polynomial<std::int64_t>>(
        substitute_power_i64(cyclotomic_squarefree_i64(rad, primes), n / rad));
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = cache_.emplace(n, std::move(poly));
    return it->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::uint64_t, std::shared_ptr<const Polynomial<std::int64_t>>> cache_;
};

inline CyclotomicCache& cyclotomic_cache() {
  static CyclotomicCache cache;
  return cache;
}

inline std::shared_ptr<const Polynomial<std::int64_t>> cyclotomic_i64(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic: n must be >= 1");
  if (n > kCyclotomicBound) throw CapacityError("cyclotomic: n exceeds capacity bound");
  return cyclotomic_cache().get(n);
}

}  // namespace detail

/// The n-th cyclotomic polynomial; monic of degree phi(n), built by exact
/// binomial products (never floating roots) and memoized per n.
inline IntPolynomial cyclotomic(std::uint64_t n) {
  return detail::cyclotomic_i64(n)->cast<BigInt>();
}

/// Product of Phi_d over the unitary divisors d of n: monic of degree rho(n),
/// with root set {exp(2 pi i k / n) : k regular (mod n)}. Equals x^n - 1 for
/// squarefree n.
inline IntPolynomial phi_regular(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("phi_regular: n must be >= 1");
  if (n > kCyclotomicBound) throw CapacityError("phi_regular: n exceeds capacity bound");
  std::vector<std::uint64_t> uds = unitary_divisors(n);
  try {
    Polynomial<std::int64_t> acc = Polynomial<std::int64_t>::monomial(0);
    for (std::uint64_t d : uds) acc *= *detail::cyclotomic_i64(d);
    return acc.cast<BigInt>();
  } catch (const std::overflow_error&) {
    IntPolynomial acc = IntPolynomial::monomial(0);
    for (std::uint64_t d : uds) acc *= detail::cyclotomic_i64(d)->cast<BigInt>();
    return acc;
  }
}

/// phi_regular(n) with the root at x = 1 removed: the product of Phi_d over
/// unitary d > 1. Degree rho(n) - 1, palindromic coefficients.
inline IntPolynomial phi_regular_star(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("phi_regular_star: n must be >= 2");
  IntPolynomial p = phi_regular(n);
  p.divexact_binomial(1);  // exact removal of the (x - 1) factor
  return p;
}

/// Phi_n(1), by the classical case table: p for prime powers, 1 otherwise.
inline std::uint64_t cyclotomic_at_one(const Factorization& f) {
  if (f.n() < 2) throw std::invalid_argument("cyclotomic_at_one: n must be >= 2");
  return f.omega() == 1 ? f.factors()[0].p : 1;
}
inline std::uint64_t cyclotomic_at_one(std::uint64_t n) {
  return cyclotomic_at_one(factorize(n));
}

/// Phi_n(-1): 2 for n = 2^nu, p for n = 2 p^nu with p odd, 1 otherwise.
inline std::uint64_t cyclotomic_at_minus_one(const Factorization& f) {
  if (f.n() < 3) throw std::invalid_argument("cyclotomic_at_minus_one: n must be >= 3");
  const auto& fs = f.factors();
  if (fs.size() == 1 && fs[0].p == 2) return 2;
  if (fs.size() == 2 && fs[0].p == 2 && fs[0].nu == 1) return fs[1].p;
  return 1;
}
inline std::uint64_t cyclotomic_at_minus_one(std::uint64_t n) {
  return cyclotomic_at_minus_one(factorize(n));
}

/// Exact evaluation of phi_regular_star at +1 or -1. At +1 the value is
/// kappa(n); at -1 (odd n only) the value has absolute value 1.
inline BigInt phi_regular_star_at(std::uint64_t n, int x0) {
  if (x0 != 1 && x0 != -1) throw std::invalid_argument("phi_regular_star_at: x0 must be +-1");
  if (n < 2) throw std::invalid_argument("phi_regular_star_at: n must be >= 2");
  if (x0 == -1 && (n < 3 || n % 2 == 0))
    throw std::invalid_argument("phi_regular_star_at: x0 = -1 requires odd n >= 3");
  IntPolynomial p = phi_regular_star(n);
  return x0 == 1 ? p.eval1() : p.eval_minus1();
}

}  // namespace regint
