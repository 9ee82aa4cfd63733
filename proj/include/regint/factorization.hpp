#pragma once

#include "regint/bigint.hpp"
#include "regint/sieve.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace regint {

struct PrimePower {
  std::uint64_t p;
  std::uint32_t nu;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A natural number together with its prime-power decomposition.
/// Invariants: primes strictly increasing, exponents >= 1, product reconstructs n,
/// and every listed prime is certified prime. n = 1 has an empty list.
class Factorization {
 public:
  Factorization(std::uint64_t n, std::vector<PrimePower> factors)
      : n_(n), factors_(std::move(factors)) {
    std::uint64_t check = 1;
    std::uint64_t prev = 1;
    for (const auto& [p, nu] : factors_) {
      if (p <= prev || nu == 0 || !is_prime_u64(p))
        throw std::invalid_argument("Factorization: invalid prime-power list");
      prev = p;
      for (std::uint32_t i = 0; i < nu; ++i) check *= p;
    }
    if (check != n_) throw std::invalid_argument("Factorization: product does not reconstruct n");
  }

  std::uint64_t n() const { return n_; }
  const std::vector<PrimePower>& factors() const { return factors_; }

  std::uint32_t omega() const { return static_cast<std::uint32_t>(factors_.size()); }

  /// Largest squarefree divisor.
  std::uint64_t kappa() const {
    std::uint64_t k = 1;
    for (const auto& f : factors_) k *= f.p;
    return k;
  }

  bool squarefree() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const PrimePower& f) { return f.nu == 1; });
  }

  /// Every exponent >= 2 (vacuously true for n = 1).
  bool squarefull() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const PrimePower& f) { return f.nu >= 2; });
  }

 private:
  std::uint64_t n_;
  std::vector<PrimePower> factors_;
};

/// Prime factorization by sieve lookup below the sieve bound, trial division +
/// Pollard rho above it. Rejects n = 0.
inline Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
  std::vector<PrimePower> factors;
  if (n == 1) return Factorization(1, {});

  std::uint64_t m = n;
  const SpfSieve& sieve = default_sieve();
  if (m <= sieve.bound()) {
    while (m > 1) {
      std::uint64_t p = sieve.smallest_prime_factor(m);
      std::uint32_t nu = 0;
      while (m % p == 0) {
        m /= p;
        ++nu;
      }
      factors.push_back({p, nu});
    }
    return Factorization(n, std::move(factors));
  }

  for (std::uint64_t p = 2; p * p <= m && p <= 100'000; p += (p == 2 ? 1 : 2)) {
    if (m % p == 0) {
      std::uint32_t nu = 0;
      while (m % p == 0) {
        m /= p;
        ++nu;
      }
      factors.push_back({p, nu});
    }
  }
  // Remaining cofactor: split recursively with Pollard rho.
  std::vector<std::uint64_t> stack;
  if (m > 1) stack.push_back(m);
  std::vector<std::uint64_t> primes;
  while (!stack.empty()) {
    std::uint64_t v = stack.back();
    stack.pop_back();
    if (is_prime_u64(v)) {
      primes.push_back(v);
    } else {
      std::uint64_t d = detail::pollard_rho(v);
      stack.push_back(d);
      stack.push_back(v / d);
    }
  }
  std::sort(primes.begin(), primes.end());
  for (std::size_t i = 0; i < primes.size();) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    factors.push_back({primes[i], static_cast<std::uint32_t>(j - i)});
    i = j;
  }
  std::sort(factors.begin(), factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.p < b.p; });
  return Factorization(n, std::move(factors));
}

/// All divisors of n, sorted ascending.
inline std::vector<std::uint64_t> divisors(const Factorization& f) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, nu] : f.factors()) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (std::uint32_t i = 1; i <= nu; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) { return divisors(factorize(n)); }

/// Unitary divisors: d | n with gcd(d, n/d) = 1, i.e. products of full
/// prime-power components. Sorted ascending; always contains 1 and n.
inline std::vector<std::uint64_t> unitary_divisors(const Factorization& f) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, nu] : f.factors()) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < nu; ++i) q *= p;
    const std::size_t base = out.size();
    for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::uint64_t> unitary_divisors(std::uint64_t n) {
  return unitary_divisors(factorize(n));
}

inline bool is_unitary_divisor(std::uint64_t d, std::uint64_t n) {
  return d >= 1 && n % d == 0 && std::gcd(d, n / d) == 1;
}

}  // namespace regint
