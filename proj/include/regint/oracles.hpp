#pragma once

// Definition-level brute-force evaluations used as independent oracles by the
// verification catalog and the test suites. Nothing here uses a closed form:
// sums and products are taken term by term over the defining sets, and the
// trigonometric/Gamma oracles work in long double with exact integer argument
// reduction.

#include "regint/arithmetic.hpp"
#include "regint/bernoulli.hpp"
#include "regint/bigint.hpp"
#include "regint/cyclotomic.hpp"
#include "regint/polynomial.hpp"
#include "regint/products.hpp"
#include "regint/regular.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace regint::oracle {

/// k is regular by the defining congruence: some x in [0, n) has k^2 x == k (mod n).
inline bool regular_by_definition(std::int64_t k, std::uint64_t n) {
  std::int64_t m = static_cast<std::int64_t>(n);
  std::uint64_t r = static_cast<std::uint64_t>(((k % m) + m) % m);
  std::uint64_t k2 = (r * r) % n;
  for (std::uint64_t x = 0; x < n; ++x) {
    if ((k2 * x) % n == r) return true;
  }
  return false;
}

/// k has a weak order: some m in [1, n] with k^{m+1} == k (mod n).
inline bool regular_by_weak_order(std::int64_t k, std::uint64_t n) {
  std::int64_t mm = static_cast<std::int64_t>(n);
  std::uint64_t r = static_cast<std::uint64_t>(((k % mm) + mm) % mm);
  std::uint64_t power = r;
  for (std::uint64_t m = 1; m <= n; ++m) {
    power = (power * r) % n;  // power = r^{m+1}
    if (power == r) return true;
  }
  return false;
}

/// The prime-power criterion: for every p^nu || n, either p does not divide k
/// or p^nu divides k.
inline bool regular_by_prime_powers(std::uint64_t k, const Factorization& f) {
  for (const auto& [p, nu] : f.factors()) {
    if (k % p != 0) continue;
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < nu; ++i) q *= p;
    if (k % q != 0) return false;
  }
  return true;
}

enum class Domain { All, Coprime, Regular };

/// The members of [1, n] belonging to the domain.
inline std::vector<std::uint64_t> residues(Domain domain, std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 1; k <= n; ++k) {
    switch (domain) {
      case Domain::All:
        out.push_back(k);
        break;
      case Domain::Coprime:
        if (std::gcd(k, n) == 1) out.push_back(k);
        break;
      case Domain::Regular:
        if (is_unitary_divisor(std::gcd(k, n), n)) out.push_back(k);
        break;
    }
  }
  return out;
}

inline BigInt power_sum(Domain domain, std::uint32_t r, std::uint64_t n) {
  unsigned __int128 acc = 0;
  BigInt total = 0;
  for (std::uint64_t k : residues(domain, n)) {
    unsigned __int128 term = 1;
    for (std::uint32_t i = 0; i < r; ++i) term *= k;
    acc += term;
    if (acc >> 120) {
      total += BigInt(static_cast<std::uint64_t>(acc >> 64)) << 64;
      total += static_cast<std::uint64_t>(acc);
      acc = 0;
    }
  }
  total += BigInt(static_cast<std::uint64_t>(acc >> 64)) << 64;
  total += static_cast<std::uint64_t>(acc);
  return total;
}

inline std::uint64_t gcd_sum_regular(std::uint64_t n) {
  std::uint64_t acc = 0;
  for (std::uint64_t k : residues(Domain::Regular, n)) acc += std::gcd(k, n);
  return acc;
}

/// Sum of gcd(k - 1, n) over regular k; gcd(0, n) counts as n.
inline std::uint64_t menon_regular(std::uint64_t n) {
  std::uint64_t acc = 0;
  for (std::uint64_t k : residues(Domain::Regular, n)) {
    std::uint64_t km1 = (k - 1) % n;
    acc += km1 == 0 ? n : std::gcd(km1, n);
  }
  return acc;
}

/// Number of r-tuples over [1, n]^r whose gcd is regular (mod n), by direct
/// enumeration with an odometer.
inline BigInt rho_r_tuple_count(std::uint32_t r, std::uint64_t n) {
  std::vector<char> regular(n + 1, 0);
  for (std::uint64_t k = 1; k <= n; ++k)
    regular[k] = is_unitary_divisor(std::gcd(k, n), n) ? 1 : 0;
  std::vector<std::uint64_t> tuple(r, 1);
  BigInt count = 0;
  while (true) {
    std::uint64_t g = 0;
    for (std::uint64_t v : tuple) g = std::gcd(g, v);
    std::uint64_t gr = std::gcd(g, n);
    if (regular[gr == 0 ? n : gr]) ++count;
    std::uint32_t pos = 0;
    while (pos < r && tuple[pos] == n) {
      tuple[pos] = 1;
      ++pos;
    }
    if (pos == r) break;
    ++tuple[pos];
  }
  return count;
}

/// Exact sum of B_m(k/n) over the given residues, via an integer Horner
/// evaluation of the denominator-cleared Bernoulli polynomial.
inline BigRat bernoulli_sum_over(std::uint32_t m, std::uint64_t n,
                                 const std::vector<std::uint64_t>& ks) {
  RationalPolynomial poly = bernoulli_poly(m);
  BigInt lcm_den = 1;
  for (const BigRat& c : poly.coefficients())
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
  // weights w_j = (coeff_j * lcm_den) * n^{m - j}, all integers
  std::vector<BigInt> weights(m + 1);
  for (std::uint32_t j = 0; j <= m; ++j) {
    BigRat scaled = poly.coefficient(j) * BigRat(lcm_den) * int_pow_rat(n, m - j);
    weights[j] = numerator(scaled);
    if (denominator(scaled) != 1)
      throw std::logic_error("bernoulli_sum_over: scaling failed");
  }
  BigInt acc = 0;
  for (std::uint64_t k : ks) {
    BigInt horner = weights[m];
    for (std::uint32_t j = m; j-- > 0;) horner = horner * k + weights[j];
    acc += horner;
  }
  return BigRat(acc, lcm_den * pow_big(BigInt(n), m));
}

inline BigRat bernoulli_domain_sum(std::uint32_t m, std::uint64_t n, Domain domain) {
  return bernoulli_sum_over(m, n, residues(domain, n));
}

/// Sum of B_m(k/n) over the regular k in [0, n-1] (the shifted range of the
/// m = 1 remark; 0 is regular for every n).
inline BigRat bernoulli_sum_from_zero(std::uint32_t m, std::uint64_t n) {
  BigRat acc = bernoulli_domain_sum(m, n, Domain::Regular);
  acc -= bernoulli_poly_eval(m, BigRat(1));  // drop k = n
  acc += bernoulli_number(m);                // add k = 0, B_m(0) = B_m
  return acc;
}

inline BigInt product_over(Domain domain, std::uint64_t n) {
  BigInt acc = 1;
  for (std::uint64_t k : residues(domain, n)) acc *= k;
  return acc;
}

/// Von Sterneck / divisor form of the Ramanujan sum: sum of e mu(n/e) over
/// e | gcd(n, t). Independent of the Hoelder evaluation.
inline std::int64_t ramanujan_sum_divisor_route(std::uint64_t n, std::int64_t t) {
  std::int64_t m = static_cast<std::int64_t>(n);
  std::uint64_t tt = static_cast<std::uint64_t>(((t % m) + m) % m);
  std::uint64_t g = tt == 0 ? n : std::gcd(n, tt);
  std::int64_t acc = 0;
  for (std::uint64_t e : divisors(g))
    acc += static_cast<std::int64_t>(e) * mobius(n / e);
  return acc;
}

/// Exact value of sum over k in ks of zeta_n^{t k}, computed in the ring
/// Z[x]/Phi_n(x): the reduced polynomial must be the constant equal to the
/// (rational integer) value of the sum.
inline BigInt exponential_sum_cyclotomic(const std::vector<std::uint64_t>& ks, std::uint64_t n,
                                         std::int64_t t) {
  std::int64_t m = static_cast<std::int64_t>(n);
  std::uint64_t tt = static_cast<std::uint64_t>(((t % m) + m) % m);
  std::vector<BigInt> coeffs(n, BigInt(0));
  for (std::uint64_t k : ks) {
    std::uint64_t e = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(k) * tt % n);
    coeffs[e] += 1;
  }
  IntPolynomial p{std::vector<BigInt>(coeffs)};
  IntPolynomial rem = p.divmod(cyclotomic(n)).remainder;
  if (rem.degree() > 0)
    throw std::logic_error("exponential_sum_cyclotomic: value is not a rational integer");
  return rem.coefficient(0);
}

// ---- long double trigonometric kernels with exact argument reduction ----

/// cos(a pi / b), reduced so the libm call sees an argument in [0, pi/4].
inline long double cos_pi_frac(std::uint64_t a, std::uint64_t b) {
  a %= 2 * b;
  long double sign = 1.0L;
  if (a > b) a = 2 * b - a;             // cos(2 pi - x) = cos(x)
  if (2 * a > b) {                      // cos(pi - x) = -cos(x)
    a = b - a;
    sign = -sign;
  }
  const long double pi_l = 3.14159265358979323846264338327950288L;
  if (4 * a <= b)
    return sign * cosl(pi_l * static_cast<long double>(a) / static_cast<long double>(b));
  // a/b in (1/4, 1/2]: cos(a pi / b) = sin((b - 2a) pi / (2b)) with small argument
  return sign * sinl(pi_l * static_cast<long double>(b - 2 * a) / (2.0L * static_cast<long double>(b)));
}

/// sin(a pi / b) with the same reduction scheme.
inline long double sin_pi_frac(std::uint64_t a, std::uint64_t b) {
  a %= 2 * b;
  long double sign = 1.0L;
  if (a >= b) {  // sin(x + pi) = -sin(x)
    a -= b;
    sign = -sign;
  }
  if (2 * a > b) a = b - a;  // sin(pi - x) = sin(x)
  const long double pi_l = 3.14159265358979323846264338327950288L;
  if (4 * a <= b)
    return sign * sinl(pi_l * static_cast<long double>(a) / static_cast<long double>(b));
  return sign * cosl(pi_l * static_cast<long double>(b - 2 * a) / (2.0L * static_cast<long double>(b)));
}

inline long double tan_pi_frac(std::uint64_t a, std::uint64_t b) {
  return sin_pi_frac(a, b) / cos_pi_frac(a, b);
}

class KahanSum {
 public:
  void add(long double v) {
    long double y = v - comp_;
    long double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  long double value() const { return sum_; }

 private:
  long double sum_ = 0.0L;
  long double comp_ = 0.0L;
};

/// Brute trigonometric sum over the domain: kind selects cos^2, tan^2, tan^4
/// of k pi / n.
inline long double trig_sum_brute(TrigKind kind, Domain domain, std::uint64_t n) {
  KahanSum acc;
  for (std::uint64_t k : residues(domain, n)) {
    long double v = 0.0L;
    switch (kind) {
      case TrigKind::Cos2: {
        long double c = cos_pi_frac(k, n);
        v = c * c;
        break;
      }
      case TrigKind::Tan2: {
        long double t = tan_pi_frac(k, n);
        v = t * t;
        break;
      }
      case TrigKind::Tan4: {
        long double t = tan_pi_frac(k, n);
        v = t * t * t * t;
        break;
      }
    }
    acc.add(v);
  }
  return acc.value();
}

/// Brute sine/cosine product in log space over the domain restricted to
/// k in [1, n-1] when modified is true (the regular_mod products), else [1, n].
inline LogSpaceReal trig_product_brute(TrigProductKind kind, Domain domain, std::uint64_t n,
                                       bool modified) {
  KahanSum log_acc;
  int sign = 1;
  for (std::uint64_t k : residues(domain, n)) {
    if (modified && k == n) continue;
    long double v = kind == TrigProductKind::Sin ? sin_pi_frac(k, n) : cos_pi_frac(k, n);
    if (v == 0.0L) return {0.0, 0};
    if (v < 0) {
      sign = -sign;
      v = -v;
    }
    log_acc.add(logl(v));
  }
  return {static_cast<double>(log_acc.value()), sign};
}

/// Brute log of the Gamma product over the domain: sum of lgamma(k/n).
inline LogSpaceReal gamma_product_brute(Domain domain, std::uint64_t n) {
  KahanSum acc;
  for (std::uint64_t k : residues(domain, n))
    acc.add(lgammal(static_cast<long double>(k) / static_cast<long double>(n)));
  return {static_cast<double>(acc.value()), 1};
}

struct ComplexSum {
  long double re = 0.0L;
  long double im = 0.0L;
};

/// Brute weighted exponential sum: sum over the domain of
/// weight(gcd(k, n)) * exp(2 pi i k t / n), with exact reduction of k t mod n.
template <typename WeightFn>
ComplexSum weighted_exponential_sum(Domain domain, std::uint64_t n, std::int64_t t,
                                    WeightFn&& weight) {
  std::int64_t m = static_cast<std::int64_t>(n);
  std::uint64_t tt = static_cast<std::uint64_t>(((t % m) + m) % m);
  KahanSum re, im;
  for (std::uint64_t k : residues(domain, n)) {
    std::uint64_t e = static_cast<std::uint64_t>(static_cast<unsigned __int128>(k) * tt % n);
    long double w = weight(std::gcd(k, n));
    re.add(w * cos_pi_frac(2 * e, n));
    im.add(w * sin_pi_frac(2 * e, n));
  }
  return {re.value(), im.value()};
}

/// Number of regular k <= x (mod n), counted by full periods plus a scanned
/// partial period.
inline std::uint64_t count_regular_up_to(std::uint64_t n, std::uint64_t x) {
  std::vector<char> regular(n, 0);
  std::uint64_t per_period = 0;
  for (std::uint64_t r = 0; r < n; ++r) {
    regular[r] = is_regular(static_cast<std::int64_t>(r), n) ? 1 : 0;
    if (regular[r]) ++per_period;
  }
  std::uint64_t full = x / n, rest = x % n;
  std::uint64_t count = full * per_period;
  for (std::uint64_t r = 1; r <= rest; ++r) count += regular[r % n];
  return count;
}

}  // namespace regint::oracle
