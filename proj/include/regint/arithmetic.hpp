#pragma once

#include "regint/bigint.hpp"
#include "regint/factorization.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>

namespace regint {

/// Exact logarithm of a natural number: the value is log(base).
/// Adding two values multiplies the bases, so sums of von Mangoldt terms
/// stay exact until value() is called.
struct LogExact {
  std::uint64_t base = 1;

  double value() const { return std::log(static_cast<double>(base)); }

  friend LogExact operator+(LogExact a, LogExact b) { return LogExact{a.base * b.base}; }
  LogExact& operator+=(LogExact o) {
    base *= o.base;
    return *this;
  }
  friend bool operator==(LogExact, LogExact) = default;
};

/// Product of local(p, nu) over the prime-power components; empty product is 1.
/// The evaluation engine behind every multiplicative function here.
template <typename Local>
auto multiplicative_eval(Local&& local, const Factorization& f)
    -> decltype(local(std::uint64_t{}, std::uint32_t{})) {
  using V = decltype(local(std::uint64_t{}, std::uint32_t{}));
  V acc(1);
  for (const auto& [p, nu] : f.factors()) acc *= local(p, nu);
  return acc;
}

template <typename Local>
auto multiplicative_eval(Local&& local, std::uint64_t n) {
  return multiplicative_eval(std::forward<Local>(local), factorize(n));
}

inline int mobius(const Factorization& f) {
  if (!f.squarefree()) return 0;
  return f.omega() % 2 == 0 ? 1 : -1;
}
inline int mobius(std::uint64_t n) { return mobius(factorize(n)); }

inline std::uint64_t euler_phi(const Factorization& f) {
  std::uint64_t r = 1;
  for (const auto& [p, nu] : f.factors()) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 1; i < nu; ++i) q *= p;
    r *= q * (p - 1);
  }
  return r;
}
inline std::uint64_t euler_phi(std::uint64_t n) { return euler_phi(factorize(n)); }

inline std::uint64_t tau(const Factorization& f) {
  std::uint64_t r = 1;
  for (const auto& [p, nu] : f.factors()) r *= nu + 1;
  return r;
}
inline std::uint64_t tau(std::uint64_t n) { return tau(factorize(n)); }

inline std::uint32_t omega(std::uint64_t n) { return factorize(n).omega(); }

inline std::uint64_t kappa(std::uint64_t n) { return factorize(n).kappa(); }

/// Von Mangoldt: log p for prime powers, log 1 = 0 otherwise, kept exact.
inline LogExact mangoldt(const Factorization& f) {
  if (f.omega() == 1) return LogExact{f.factors()[0].p};
  return LogExact{1};
}
inline LogExact mangoldt(std::uint64_t n) { return mangoldt(factorize(n)); }

/// Sum of s-th powers of divisors, s >= 1.
inline BigInt sigma_s(const Factorization& f, std::uint32_t s) {
  if (s == 0) throw std::invalid_argument("sigma_s: s must be >= 1");
  BigInt r = 1;
  for (const auto& [p, nu] : f.factors()) {
    BigInt ps = pow_big(BigInt(p), s);
    BigInt geom = 1, term = 1;
    for (std::uint32_t i = 1; i <= nu; ++i) {
      term *= ps;
      geom += term;
    }
    r *= geom;
  }
  return r;
}
inline BigInt sigma_s(std::uint64_t n, std::uint32_t s) { return sigma_s(factorize(n), s); }

/// Generalized Jordan totient for any integer s: the local factor at p^nu is
/// p^{s*nu} - p^{s(nu-1)}. Integer-valued for s >= 0, rational for s < 0.
inline BigRat jordan_phi(std::int64_t s, const Factorization& f) {
  BigRat r(1);
  for (const auto& [p, nu] : f.factors()) {
    BigRat hi = int_pow_rat(p, s * static_cast<std::int64_t>(nu));
    BigRat lo = int_pow_rat(p, s * (static_cast<std::int64_t>(nu) - 1));
    r *= hi - lo;
  }
  return r;
}
inline BigRat jordan_phi(std::int64_t s, std::uint64_t n) { return jordan_phi(s, factorize(n)); }

/// Ramanujan sum by Hoelder's evaluation mu(n/g) * phi(n) / phi(n/g) with
/// g = gcd(n, t); periodic in t, so t is reduced mod n first.
inline std::int64_t ramanujan_sum(std::uint64_t n, std::int64_t t) {
  if (n == 0) throw std::invalid_argument("ramanujan_sum: n must be >= 1");
  std::uint64_t tt = static_cast<std::uint64_t>(((t % static_cast<std::int64_t>(n)) +
                                                 static_cast<std::int64_t>(n))) %
                     n;
  std::uint64_t g = tt == 0 ? n : std::gcd(n, tt);
  Factorization fn = factorize(n);
  std::uint64_t m = n / g;
  int mu_m = mobius(m);
  if (mu_m == 0) return 0;
  std::uint64_t phi_n = euler_phi(fn);
  std::uint64_t phi_m = euler_phi(m);
  // phi(m) | phi(n) whenever m | n, so the division is exact.
  return mu_m * static_cast<std::int64_t>(phi_n / phi_m);
}

/// A named multiplicative-function handle for the generic reduction schemes.
/// Built-ins cover the common weights (one, id, fixed powers); arbitrary
/// callables are accepted but multiplicativity is then the caller's
/// responsibility.
struct MultiplicativeFn {
  std::string name;
  std::function<BigInt(std::uint64_t)> eval;

  BigInt operator()(std::uint64_t n) const { return eval(n); }
};

inline MultiplicativeFn mult_one() {
  return {"one", [](std::uint64_t) { return BigInt(1); }};
}

inline MultiplicativeFn mult_id() {
  return {"id", [](std::uint64_t n) { return BigInt(n); }};
}

inline MultiplicativeFn mult_power(std::uint32_t s) {
  return {"power " + std::to_string(s),
          [s](std::uint64_t n) { return pow_big(BigInt(n), s); }};
}

}  // namespace regint
