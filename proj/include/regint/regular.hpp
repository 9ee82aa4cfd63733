#pragma once

#include "regint/arithmetic.hpp"
#include "regint/bigint.hpp"
#include "regint/factorization.hpp"

#include <cstdint>
#include <numeric>
#include <vector>

namespace regint {

/// k is regular (mod n) iff gcd(k, n) is a unitary divisor of n. Regularity
/// depends only on the residue class, so k is reduced into [1, n] first.
inline bool is_regular(std::int64_t k, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("is_regular: n must be >= 1");
  if (n == 1) return true;
  std::int64_t m = static_cast<std::int64_t>(n);
  std::uint64_t r = static_cast<std::uint64_t>(((k % m) + m) % m);
  if (r == 0) r = n;
  return is_unitary_divisor(std::gcd(r, n), n);
}

/// The sorted set of regular residues in [1, n].
struct RegularSet {
  std::uint64_t n;
  std::vector<std::uint64_t> members;

  std::uint64_t size() const { return members.size(); }
  bool contains(std::uint64_t k) const {
    return std::binary_search(members.begin(), members.end(), k);
  }
};

inline constexpr std::uint64_t kRegularSetBound = 1'000'000;

inline RegularSet regular_set(std::uint64_t n, std::uint64_t bound = kRegularSetBound) {
  if (n == 0) throw std::invalid_argument("regular_set: n must be >= 1");
  if (n > bound) throw CapacityError("regular_set: n exceeds brute-force bound");
  RegularSet s{n, {}};
  s.members.reserve(n);
  for (std::uint64_t k = 1; k <= n; ++k)
    if (is_unitary_divisor(std::gcd(k, n), n)) s.members.push_back(k);
  return s;
}

/// Number of regular residues; multiplicative with local factor p^nu - p^{nu-1} + 1.
inline std::uint64_t rho(const Factorization& f) {
  std::uint64_t r = 1;
  for (const auto& [p, nu] : f.factors()) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 1; i < nu; ++i) q *= p;
    r *= q * p - q + 1;
  }
  return r;
}
inline std::uint64_t rho(std::uint64_t n) { return rho(factorize(n)); }

/// Count of r-tuples in [1,n]^r whose gcd is regular (mod n).
inline BigInt rho_r(std::uint32_t r, const Factorization& f) {
  if (r == 0) throw std::invalid_argument("rho_r: r must be >= 1");
  return multiplicative_eval(
      [r](std::uint64_t p, std::uint32_t nu) -> BigInt {
        BigInt hi = pow_big(BigInt(p), static_cast<std::uint64_t>(r) * nu);
        BigInt lo = pow_big(BigInt(p), static_cast<std::uint64_t>(r) * (nu - 1));
        return BigInt(hi - lo + 1);
      },
      f);
}
inline BigInt rho_r(std::uint32_t r, std::uint64_t n) { return rho_r(r, factorize(n)); }

/// The generalized rho for any integer s: local factor p^{s*nu} - p^{s(nu-1)} + 1.
/// Equals the sum of jordan_phi(s, d) over unitary divisors d of n.
inline BigRat rho_s(std::int64_t s, const Factorization& f) {
  BigRat r(1);
  for (const auto& [p, nu] : f.factors()) {
    BigRat hi = int_pow_rat(p, s * static_cast<std::int64_t>(nu));
    BigRat lo = int_pow_rat(p, s * (static_cast<std::int64_t>(nu) - 1));
    r *= hi - lo + 1;
  }
  return r;
}
inline BigRat rho_s(std::int64_t s, std::uint64_t n) { return rho_s(s, factorize(n)); }

/// Indicator of squarefull n (n = 1 included); equals the sum of mu(d) over
/// unitary divisors d of n.
inline int mu_bar(const Factorization& f) { return f.squarefull() ? 1 : 0; }
inline int mu_bar(std::uint64_t n) { return mu_bar(factorize(n)); }

/// The general reduction: sums f(d) * g_relprime(n/d) over unitary divisors d.
/// g_relprime(m) must supply the coprime-restricted inner sum over [1, m].
/// Every closed-form identity over regular integers routes through this.
template <typename F, typename G>
auto reduce_over_regular(F&& f, G&& g_relprime, std::uint64_t n) {
  using V = decltype(f(std::uint64_t{1}) * g_relprime(std::uint64_t{1}));
  V acc{};
  for (std::uint64_t d : unitary_divisors(n)) acc += f(d) * g_relprime(n / d);
  return acc;
}

/// Regular analogue of the Ramanujan sum: sum of c_d(t) over unitary d of n.
/// c_bar(n, 0) = rho(n); c_bar(n, 1) = mu_bar(n).
inline std::int64_t c_bar(std::uint64_t n, std::int64_t t) {
  std::int64_t acc = 0;
  for (std::uint64_t d : unitary_divisors(n)) acc += ramanujan_sum(d, t);
  return acc;
}

/// Gcd-sum over the regular residues; multiplicative with local factor
/// p^{nu-1} * (2p - 1), i.e. n * prod(2 - 1/p).
inline std::uint64_t gcd_sum_regular(const Factorization& f) {
  std::uint64_t r = 1;
  for (const auto& [p, nu] : f.factors()) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 1; i < nu; ++i) q *= p;
    r *= q * (2 * p - 1);
  }
  return r;
}
inline std::uint64_t gcd_sum_regular(std::uint64_t n) { return gcd_sum_regular(factorize(n)); }

/// Weighted exponential sum over regular residues, as the unitary convolution
/// sum of f(d) * c_{n/d}(t). Multiplicative in n for fixed t when f is.
inline BigInt p_reg(const MultiplicativeFn& f, std::int64_t t, std::uint64_t n) {
  BigInt acc = 0;
  for (std::uint64_t d : unitary_divisors(n)) acc += f(d) * BigInt(ramanujan_sum(n / d, t));
  return acc;
}

/// The special case f = id, t = 1: sum of d * mu(n/d) over unitary d.
/// The local value is p - 1 at nu = 1 and p^nu at every nu >= 2; the two
/// regimes do not coincide, matching the direct unitary-divisor sum.
inline std::uint64_t p_reg_id1(const Factorization& f) {
  std::uint64_t r = 1;
  for (const auto& [p, nu] : f.factors()) {
    if (nu == 1) {
      r *= p - 1;
    } else {
      std::uint64_t q = 1;
      for (std::uint32_t i = 0; i < nu; ++i) q *= p;
      r *= q;
    }
  }
  return r;
}
inline std::uint64_t p_reg_id1(std::uint64_t n) { return p_reg_id1(factorize(n)); }

/// Menon-type sum over regular residues: sum of gcd(k-1, n) for k in Reg_n,
/// with closed product prod(p^{nu-1} (p-1)(nu+1) + 1).
inline std::uint64_t menon_regular(const Factorization& f) {
  std::uint64_t r = 1;
  for (const auto& [p, nu] : f.factors()) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 1; i < nu; ++i) q *= p;
    r *= q * (p - 1) * (nu + 1) + 1;
  }
  return r;
}
inline std::uint64_t menon_regular(std::uint64_t n) { return menon_regular(factorize(n)); }

inline constexpr std::uint64_t kMenonBruteBound = 10'000'000;

/// The a-twisted Menon identity over residues coprime to n: the brute sum of
/// gcd(a*k - 1, n) is evaluated and checked against phi(n) * tau(n) before
/// returning, verifying the constant is independent of a.
inline std::uint64_t menon_coprime(std::uint64_t a, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("menon_coprime: n must be >= 1");
  if (std::gcd(a, n) != 1) throw std::invalid_argument("menon_coprime: gcd(a, n) must be 1");
  if (n > kMenonBruteBound) throw CapacityError("menon_coprime: n exceeds brute-force bound");
  std::uint64_t sum = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    std::uint64_t m = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * k - 1) % n);
    sum += m == 0 ? n : std::gcd(m, n);
  }
  Factorization fn = factorize(n);
  if (sum != euler_phi(fn) * tau(fn))
    throw std::logic_error("menon_coprime: brute sum disagrees with phi(n)*tau(n)");
  return sum;
}

}  // namespace regint
