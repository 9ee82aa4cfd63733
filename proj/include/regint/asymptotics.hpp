#pragma once

#include "regint/arithmetic.hpp"
#include "regint/bigint.hpp"
#include "regint/constants.hpp"
#include "regint/factorization.hpp"
#include "regint/regular.hpp"
#include "regint/sieve.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace regint {

/// Riemann zeta for real s > 1 via Euler-Maclaurin; accurate to well below
/// the percent-scale tolerances used downstream.
inline double zeta(double s) {
  if (s <= 1.0) throw std::invalid_argument("zeta: s must be > 1");
  const int cutoff = 1000;
  double sum = 0.0;
  for (int n = cutoff - 1; n >= 1; --n) sum += std::pow(n, -s);
  const double n = cutoff;
  sum += std::pow(n, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(n, -s) +
         s * std::pow(n, -s - 1.0) / 12.0 -
         s * (s + 1.0) * (s + 2.0) * std::pow(n, -s - 3.0) / 720.0;
  return sum;
}

inline double zeta_ratio(double s) { return zeta(s) / zeta(2.0 * s); }

/// 6 e^gamma / pi^2, the maximal-order constant for rho(n)sigma(n)/n^2.
inline double limsup_rho_sigma_constant() {
  return 6.0 * std::exp(kEulerGamma) / (kPi * kPi);
}

inline constexpr std::uint64_t kPrimeBoundCap = 100'000'000;

/// Calls fn(p) for every prime p <= bound in increasing order; segmented
/// beyond the default sieve.
template <typename Fn>
void for_each_prime(std::uint64_t bound, Fn&& fn) {
  if (bound > kPrimeBoundCap) throw CapacityError("for_each_prime: bound exceeds capacity");
  const SpfSieve& sieve = default_sieve();
  if (bound <= sieve.bound()) {
    for (std::uint64_t p = 2; p <= bound; ++p)
      if (sieve.is_prime(p)) fn(p);
    return;
  }
  std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(bound))) + 1;
  std::vector<std::uint64_t> base;
  for (std::uint64_t p = 2; p <= root; ++p)
    if (sieve.is_prime(p)) base.push_back(p);
  for (std::uint64_t p = 2; p <= sieve.bound() && p <= bound; ++p)
    if (sieve.is_prime(p)) fn(p);
  const std::uint64_t segment = 1 << 20;
  std::vector<char> composite(segment);
  for (std::uint64_t lo = sieve.bound() + 1; lo <= bound; lo += segment) {
    std::uint64_t hi = std::min(bound, lo + segment - 1);
    std::fill(composite.begin(), composite.end(), 0);
    for (std::uint64_t p : base) {
      std::uint64_t start = ((lo + p - 1) / p) * p;
      if (start < p * p) start = p * p;
      for (std::uint64_t v = start; v <= hi; v += p) composite[v - lo] = 1;
    }
    for (std::uint64_t v = lo; v <= hi; ++v)
      if (!composite[v - lo]) fn(v);
  }
}

/// A truncated Euler product together with a rigorous bound on the log-scale
/// truncation error.
struct EulerProductResult {
  std::uint64_t prime_bound;
  double value;
  double tail_bound;  // bound on |log(true value / value)|
};

/// Product of term(p) over primes p <= prime_bound. The caller certifies
/// |term(p) - 1| <= c * p^{-tail_exponent} with tail_exponent > 1; the tail
/// of the log-product is then majorized by summing over all integers:
/// sum_{p > B} 2c p^{-e} <= 2c B^{1-e} / (e - 1).
inline EulerProductResult euler_product(const std::function<double(std::uint64_t)>& term,
                                        std::uint64_t prime_bound, double tail_exponent,
                                        double c = 1.0) {
  if (tail_exponent <= 1.0)
    throw std::invalid_argument("euler_product: tail_exponent must be > 1");
  double log_sum = 0.0, comp = 0.0;  // Kahan
  for_each_prime(prime_bound, [&](std::uint64_t p) {
    double y = std::log(term(p)) - comp;
    double t = log_sum + y;
    comp = (t - log_sum) - y;
    log_sum = t;
  });
  const double b = static_cast<double>(prime_bound);
  const double tail = 2.0 * c * std::pow(b, 1.0 - tail_exponent) / (tail_exponent - 1.0);
  return {prime_bound, std::exp(log_sum), tail};
}

enum class SummatoryKind { Rho, RhoS, PregId1, PhiSCoprime, PowerCoprime };

struct SummatoryResult {
  std::uint64_t x;
  bool exact;        // integer accumulation (integer s) vs float accumulation
  BigInt sum_int;    // valid when exact
  double sum_real;   // always set
  double main_term;
  double ratio;
};

inline constexpr std::uint64_t kSummatoryBound = 10'000'000;
inline constexpr std::uint64_t kDefaultEulerPrimeBound = 1'000'000;

namespace detail {

/// Per-n multiplicative value from the smallest-prime-factor decomposition.
/// Safe for values below 2^126; callers restrict s accordingly.
template <typename LocalPow>
unsigned __int128 value_from_spf(std::uint64_t n, const SpfSieve& sieve, LocalPow&& local) {
  unsigned __int128 acc = 1;
  std::uint64_t m = n;
  while (m > 1) {
    std::uint64_t p = sieve.smallest_prime_factor(m);
    std::uint32_t nu = 0;
    while (m % p == 0) {
      m /= p;
      ++nu;
    }
    acc *= local(p, nu);
  }
  return acc;
}

inline unsigned __int128 ipow128(std::uint64_t base, std::uint32_t e) {
  unsigned __int128 r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= base;
  return r;
}

inline void flush_acc(unsigned __int128& acc, BigInt& total) {
  // Split into two 64-bit limbs to feed cpp_int.
  BigInt hi(static_cast<std::uint64_t>(acc >> 64));
  BigInt lo(static_cast<std::uint64_t>(acc));
  total += (hi << 64) + lo;
  acc = 0;
}

}  // namespace detail

/// Summatory value of the selected multiplicative function over n <= x,
/// sieved; integer s uses exact integer accumulation, real s accumulates in
/// floating point. The main term carries the leading Euler-product constant.
inline SummatoryResult summatory(SummatoryKind kind, std::uint64_t x, double s = 1.0,
                                 std::uint64_t t = 1,
                                 std::uint64_t euler_prime_bound = kDefaultEulerPrimeBound) {
  if (x == 0) throw std::invalid_argument("summatory: x must be >= 1");
  if (x > kSummatoryBound) throw CapacityError("summatory: x exceeds sieve capacity");
  const SpfSieve& sieve = default_sieve();
  if (x > sieve.bound()) throw CapacityError("summatory: x exceeds sieve bound");

  const bool s_integer = s == std::floor(s) && std::fabs(s) < 30;
  const std::int64_t si = static_cast<std::int64_t>(s);
  switch (kind) {
    case SummatoryKind::Rho:
    case SummatoryKind::PregId1:
      break;
    case SummatoryKind::RhoS:
      if (s <= 1.0) throw std::invalid_argument("summatory: rho_s needs s > 1");
      break;
    case SummatoryKind::PhiSCoprime:
    case SummatoryKind::PowerCoprime:
      if (s <= 0.0 || t == 0) throw std::invalid_argument("summatory: need s > 0, t >= 1");
      break;
  }
  // Exact integer path is limited so every per-n value fits comfortably in
  // an unsigned 128-bit product: n^s < 2^120.
  const bool exact = (kind == SummatoryKind::Rho || kind == SummatoryKind::PregId1) ||
                     (s_integer && si >= 1 &&
                      static_cast<double>(si) * std::log2(static_cast<double>(x) + 1) < 120.0);

  BigInt total = 0;
  long double total_f = 0.0L;
  if (exact) {
    unsigned __int128 acc = 0;
    const unsigned __int128 flush_limit = static_cast<unsigned __int128>(1) << 120;
    for (std::uint64_t n = 1; n <= x; ++n) {
      unsigned __int128 v = 0;
      switch (kind) {
        case SummatoryKind::Rho:
          v = detail::value_from_spf(n, sieve, [](std::uint64_t p, std::uint32_t nu) {
            unsigned __int128 lo = detail::ipow128(p, nu - 1);
            return lo * p - lo + 1;
          });
          break;
        case SummatoryKind::PregId1:
          v = detail::value_from_spf(n, sieve, [](std::uint64_t p, std::uint32_t nu) {
            return nu == 1 ? static_cast<unsigned __int128>(p - 1) : detail::ipow128(p, nu);
          });
          break;
        case SummatoryKind::RhoS:
          v = detail::value_from_spf(n, sieve, [si](std::uint64_t p, std::uint32_t nu) {
            unsigned __int128 lo = detail::ipow128(p, static_cast<std::uint32_t>(si) * (nu - 1));
            unsigned __int128 hi = lo * detail::ipow128(p, static_cast<std::uint32_t>(si));
            return hi - lo + 1;
          });
          break;
        case SummatoryKind::PhiSCoprime:
          if (std::gcd(n, t) != 1) continue;
          v = detail::value_from_spf(n, sieve, [si](std::uint64_t p, std::uint32_t nu) {
            unsigned __int128 lo = detail::ipow128(p, static_cast<std::uint32_t>(si) * (nu - 1));
            return lo * detail::ipow128(p, static_cast<std::uint32_t>(si)) - lo;
          });
          break;
        case SummatoryKind::PowerCoprime:
          if (std::gcd(n, t) != 1) continue;
          v = detail::ipow128(n, static_cast<std::uint32_t>(si));
          break;
      }
      acc += v;
      if (acc >= flush_limit) detail::flush_acc(acc, total);
    }
    if (acc) detail::flush_acc(acc, total);
    total_f = static_cast<long double>(total.convert_to<double>());
  } else {
    auto local_product = [&](std::uint64_t n, bool keep_constant) {
      double prod = 1.0;
      std::uint64_t m = n;
      while (m > 1) {
        std::uint64_t p = sieve.smallest_prime_factor(m);
        std::uint32_t nu = 0;
        while (m % p == 0) {
          m /= p;
          ++nu;
        }
        prod *= std::pow(static_cast<double>(p), s * nu) -
                std::pow(static_cast<double>(p), s * (nu - 1)) + (keep_constant ? 1.0 : 0.0);
      }
      return prod;
    };
    for (std::uint64_t n = 1; n <= x; ++n) {
      switch (kind) {
        case SummatoryKind::RhoS:
          total_f += local_product(n, true);
          break;
        case SummatoryKind::PhiSCoprime:
          if (std::gcd(n, t) == 1) total_f += local_product(n, false);
          break;
        case SummatoryKind::PowerCoprime:
          if (std::gcd(n, t) == 1) total_f += std::pow(static_cast<double>(n), s);
          break;
        default:
          throw std::logic_error("summatory: non-exact path for integer-only kind");
      }
    }
  }

  const double xd = static_cast<double>(x);
  double main = 0.0;
  switch (kind) {
    case SummatoryKind::Rho: {
      EulerProductResult ep = euler_product(
          [](std::uint64_t p) {
            double pd = static_cast<double>(p);
            return 1.0 - 1.0 / (pd * pd * (pd + 1.0));
          },
          euler_prime_bound, 3.0);
      main = 0.5 * ep.value * xd * xd;
      break;
    }
    case SummatoryKind::RhoS: {
      EulerProductResult ep = euler_product(
          [s](std::uint64_t p) {
            double pd = static_cast<double>(p);
            double ps1 = std::pow(pd, s + 1.0);
            return 1.0 - 1.0 / ps1 + (pd - 1.0) / (pd * (ps1 - 1.0));
          },
          euler_prime_bound, s + 1.0, 3.0);
      main = std::pow(xd, s + 1.0) / (s + 1.0) * ep.value;
      break;
    }
    case SummatoryKind::PregId1: {
      EulerProductResult ep = euler_product(
          [](std::uint64_t p) {
            double pd = static_cast<double>(p);
            return 1.0 - 1.0 / (pd * pd) + 1.0 / (pd * pd * pd);
          },
          euler_prime_bound, 2.0);
      main = 0.5 * ep.value * xd * xd;
      break;
    }
    case SummatoryKind::PhiSCoprime: {
      double phi_t = static_cast<double>(euler_phi(t));
      double phi_s1_t = jordan_phi(si + 1, t).convert_to<double>();
      if (!s_integer) {
        phi_s1_t = 1.0;
        Factorization ft = factorize(t);
        for (const auto& [p, nu] : ft.factors())
          phi_s1_t *= std::pow(static_cast<double>(p), (s + 1.0) * nu) -
                      std::pow(static_cast<double>(p), (s + 1.0) * (nu - 1));
      }
      main = std::pow(xd, s + 1.0) / ((s + 1.0) * zeta(s + 1.0)) *
             std::pow(static_cast<double>(t), s) * phi_t / phi_s1_t;
      break;
    }
    case SummatoryKind::PowerCoprime:
      main = std::pow(xd, s + 1.0) / (s + 1.0) * static_cast<double>(euler_phi(t)) /
             static_cast<double>(t);
      break;
  }
  SummatoryResult out;
  out.x = x;
  out.exact = exact;
  out.sum_int = total;
  out.sum_real = static_cast<double>(total_f);
  out.main_term = main;
  out.ratio = out.sum_real / main;
  return out;
}

enum class MaximalOrderKind { RhoSigma, RhoPsi, RhoSigmaS };

struct MaximalOrderPoint {
  std::uint32_t k;
  BigInt primorial;
  BigRat value_exact;  // f(n_k), exact
  double normalized;
};

inline constexpr std::uint32_t kTrajectoryCap = 100;

/// Values of the normalized maximal-order quantity along the primorials
/// n_k = p_1 ... p_k. For RhoSigma/RhoPsi the normalization divides by
/// log log n_k (computed as log of the exact prime log-sum); for RhoSigmaS
/// there is no log log factor and the zeta-ratio bound is enforced.
inline std::vector<MaximalOrderPoint> maximal_order_trajectory(MaximalOrderKind kind,
                                                               std::uint32_t k_max,
                                                               double s = 2.0) {
  if (k_max == 0 || k_max > kTrajectoryCap)
    throw CapacityError("maximal_order_trajectory: k_max out of range");
  if (kind == MaximalOrderKind::RhoSigmaS && (s <= 1.0 || s != std::floor(s)))
    throw std::invalid_argument("maximal_order_trajectory: s must be an integer > 1");
  std::vector<std::uint64_t> primes;
  for_each_prime(1000, [&](std::uint64_t p) {
    if (primes.size() < k_max) primes.push_back(p);
  });
  std::vector<MaximalOrderPoint> out;
  BigInt primorial = 1;
  BigRat f(1);
  double log_n = 0.0;
  const double bound = kind == MaximalOrderKind::RhoSigmaS ? zeta_ratio(s) : 0.0;
  for (std::uint32_t k = 1; k <= k_max; ++k) {
    const std::uint64_t p = primes[k - 1];
    primorial *= p;
    log_n += std::log(static_cast<double>(p));
    double normalized = 0.0;
    if (kind == MaximalOrderKind::RhoSigmaS) {
      // local factor rho_s(p) sigma_s(p) / p^{2s} = 1 + 1/p^s
      f *= BigRat(pow_big(BigInt(p), static_cast<std::uint64_t>(s)) + 1,
                  pow_big(BigInt(p), static_cast<std::uint64_t>(s)));
      normalized = f.convert_to<double>();
      if (normalized >= bound)
        throw std::logic_error("maximal_order_trajectory: zeta-ratio bound violated");
    } else {
      // rho(p) sigma(p) / p^2 = rho(p) psi(p) / p^2 = 1 + 1/p at primes
      f *= BigRat(p + 1, p);
      normalized = f.convert_to<double>() / std::log(log_n);
    }
    out.push_back({k, primorial, f, normalized});
  }
  return out;
}

struct LocalFactorBound {
  BigRat sup;
  std::uint32_t attained_at;
  bool sup_at_nu1;     // sup equals the nu = 1 value 1 + 1/p (or 1 + 1/p^s)
  bool strict_above;   // f(p^nu) < f(p) strictly for every nu in [2, nu_max]
};

/// Exact local values f(p^nu) = rho(p^nu) sigma(p^nu) / p^{2nu} (or the psi /
/// s-power analogues) with their supremum over nu in [1, nu_max].
inline LocalFactorBound local_factor_bounds(MaximalOrderKind kind, std::uint64_t p,
                                            std::uint32_t nu_max, std::uint32_t s = 2) {
  if (nu_max == 0 || nu_max > 64)
    throw std::invalid_argument("local_factor_bounds: nu_max must be in [1, 64]");
  if (!is_prime_u64(p)) throw std::invalid_argument("local_factor_bounds: p must be prime");
  auto value = [&](std::uint32_t nu) -> BigRat {
    const std::uint32_t es = kind == MaximalOrderKind::RhoSigmaS ? s : 1;
    BigInt ps = pow_big(BigInt(p), es);
    BigInt ps_nu = pow_big(ps, nu);
    BigInt rho_local = ps_nu - ps_nu / ps + 1;  // p^{s nu} - p^{s(nu-1)} + 1
    BigInt sigma_local = 0;
    BigInt term = 1;
    for (std::uint32_t i = 0; i <= nu; ++i) {
      sigma_local += term;
      term *= ps;
    }
    if (kind == MaximalOrderKind::RhoPsi) sigma_local = ps_nu + ps_nu / ps;
    return BigRat(rho_local * sigma_local, ps_nu * ps_nu);
  };
  LocalFactorBound out{value(1), 1, true, true};
  const std::uint32_t es = kind == MaximalOrderKind::RhoSigmaS ? s : 1;
  BigRat f1 = BigRat(pow_big(BigInt(p), es) + 1, pow_big(BigInt(p), es));
  out.sup_at_nu1 = out.sup == f1;
  for (std::uint32_t nu = 2; nu <= nu_max; ++nu) {
    BigRat v = value(nu);
    if (v >= f1) out.strict_above = false;
    if (v > out.sup) {
      out.sup = v;
      out.attained_at = nu;
      out.sup_at_nu1 = false;
    }
  }
  return out;
}

}  // namespace regint
