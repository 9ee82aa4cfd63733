#pragma once

#include "regint/bigint.hpp"

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

namespace regint {

/// Smallest-prime-factor table for [2, bound]. Immutable after construction,
/// so concurrent readers need no synchronization.
class SpfSieve {
 public:
  explicit SpfSieve(std::uint32_t bound) : bound_(bound), spf_(bound + 1, 0) {
    for (std::uint64_t i = 2; i <= bound; ++i) {
      if (spf_[i] == 0) {
        for (std::uint64_t j = i; j <= bound; j += i) {
          if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
        }
      }
    }
  }

  std::uint32_t bound() const { return bound_; }

  std::uint32_t smallest_prime_factor(std::uint64_t n) const {
    if (n < 2 || n > bound_) throw CapacityError("SpfSieve: value outside sieve range");
    return spf_[n];
  }

  bool is_prime(std::uint64_t n) const {
    return n >= 2 && n <= bound_ && spf_[n] == n;
  }

  std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) const {
    if (limit > bound_) throw CapacityError("SpfSieve: prime list beyond sieve bound");
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= limit; ++i)
      if (spf_[i] == i) out.push_back(i);
    return out;
  }

 private:
  std::uint32_t bound_;
  std::vector<std::uint32_t> spf_;
};

namespace detail {

inline std::atomic<std::uint32_t> g_sieve_bound{10'000'000};
inline std::atomic<bool> g_sieve_built{false};

}  // namespace detail

/// Changes the bound of the lazily built process-wide sieve. Must be called
/// before anything has touched the sieve.
inline void set_sieve_bound(std::uint32_t bound) {
  if (detail::g_sieve_built.load())
    throw std::logic_error("set_sieve_bound: default sieve already built");
  detail::g_sieve_bound.store(bound);
}

/// Process-wide sieve, built once on first use (thread-safe).
inline const SpfSieve& default_sieve() {
  static const SpfSieve sieve = [] {
    detail::g_sieve_built.store(true);
    return SpfSieve(detail::g_sieve_bound.load());
  }();
  return sieve;
}

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = m > 1 ? 1 : 0;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin for the full 64-bit range.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = detail::powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace detail {

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

/// Pollard rho (Floyd cycle); returns a nontrivial factor of composite n.
inline std::uint64_t pollard_rho(std::uint64_t n) {
  if ((n & 1) == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto step = [&](std::uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
    std::uint64_t x = 2, y = 2, d = 1;
    do {
      x = step(x);
      y = step(step(y));
      d = gcd_u64(x > y ? x - y : y - x, n);
    } while (d == 1);
    if (d != n) return d;
  }
}

}  // namespace detail

}  // namespace regint
