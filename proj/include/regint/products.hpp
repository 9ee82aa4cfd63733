#pragma once

#include "regint/arithmetic.hpp"
#include "regint/bigint.hpp"
#include "regint/constants.hpp"
#include "regint/cyclotomic.hpp"
#include "regint/regular.hpp"

#include <cmath>
#include <cstdint>
#include <mutex>
#include <vector>

namespace regint {

inline constexpr std::uint64_t kFactorialBound = 5000;

namespace detail {

inline const BigInt& factorial(std::uint64_t k) {
  if (k > kFactorialBound) throw CapacityError("factorial: beyond factorial table bound");
  static std::vector<BigInt> table{BigInt(1)};
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  while (table.size() <= k) table.push_back(table.back() * BigInt(table.size()));
  return table[k];
}

}  // namespace detail

/// An exact product split into an integer power part and a rational part;
/// composition multiplies componentwise.
struct ExactProduct {
  BigInt integer_part = 1;
  BigRat rational_part = BigRat(1);

  BigRat value() const { return BigRat(integer_part) * rational_part; }

  ExactProduct& operator*=(const ExactProduct& o) {
    integer_part *= o.integer_part;
    rational_part *= o.rational_part;
    return *this;
  }
};

/// A(n) = prod_{d | n} (d! / d^d)^{mu(n/d)}; the Moebius core of the
/// coprime-product identity Q'(n) = n^{phi(n)} A(n).
inline BigRat factorial_core(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorial_core: n must be >= 1");
  if (n > kFactorialBound) throw CapacityError("factorial_core: n exceeds capacity bound");
  BigRat acc(1);
  for (std::uint64_t d : divisors(n)) {
    int mu = mobius(n / d);
    if (mu == 0) continue;
    BigRat term(detail::factorial(d), pow_big(BigInt(d), d));
    acc *= mu > 0 ? term : BigRat(1) / term;
  }
  return acc;
}

/// Product of the residues coprime to n: n^{phi(n)} * A(n), always an integer.
inline BigInt product_coprime(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("product_coprime: n must be >= 1");
  if (n > kFactorialBound) throw CapacityError("product_coprime: n exceeds capacity bound");
  ExactProduct q{pow_big(BigInt(n), euler_phi(n)), factorial_core(n)};
  BigRat v = q.value();
  if (!is_integer(v)) throw std::logic_error("product_coprime: value is not an integer");
  return numerator(v);
}

/// Product of the regular residues: n^{rho(n)} * prod_{d || n} A(d),
/// always an integer; equals n! for squarefree n.
inline BigInt product_regular(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("product_regular: n must be >= 1");
  if (n > kFactorialBound) throw CapacityError("product_regular: n exceeds capacity bound");
  ExactProduct q{pow_big(BigInt(n), rho(n)), BigRat(1)};
  for (std::uint64_t d : unitary_divisors(n)) q *= ExactProduct{1, factorial_core(d)};
  BigRat v = q.value();
  if (!is_integer(v)) throw std::logic_error("product_regular: value is not an integer");
  return numerator(v);
}

/// A real kept as log|value| plus a sign, so products that overflow doubles
/// stay representable; conversion to a plain double happens at the boundary.
struct LogSpaceReal {
  double log_abs = 0.0;
  int sign = 1;  // +1, -1, or 0

  static LogSpaceReal from_value(double v) {
    if (v == 0.0) return {0.0, 0};
    return {std::log(std::fabs(v)), v > 0 ? 1 : -1};
  }

  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

  LogSpaceReal& operator*=(const LogSpaceReal& o) {
    if (sign == 0 || o.sign == 0) return *this = {0.0, 0};
    log_abs += o.log_abs;
    sign *= o.sign;
    return *this;
  }
  friend LogSpaceReal operator*(LogSpaceReal a, const LogSpaceReal& b) { return a *= b; }
};

/// prod_{k=1}^{n} Gamma(k/n) = (2 pi)^{(n-1)/2} / sqrt(n).
inline LogSpaceReal gamma_product_all(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("gamma_product_all: n must be >= 1");
  const double log2pi = std::log(2.0 * kPi);
  return {0.5 * static_cast<double>(n - 1) * log2pi - 0.5 * std::log(static_cast<double>(n)), 1};
}

/// prod over k coprime to n of Gamma(k/n) = (2 pi)^{phi(n)/2} / exp(Lambda(n)/2).
inline LogSpaceReal gamma_product_coprime(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("gamma_product_coprime: n must be >= 2");
  Factorization f = factorize(n);
  const double log2pi = std::log(2.0 * kPi);
  return {0.5 * static_cast<double>(euler_phi(f)) * log2pi - 0.5 * mangoldt(f).value(), 1};
}

/// prod over regular k of Gamma(k/n) = (2 pi)^{(rho(n)-1)/2} / sqrt(kappa(n)).
inline LogSpaceReal gamma_product_regular(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("gamma_product_regular: n must be >= 1");
  Factorization f = factorize(n);
  const double log2pi = std::log(2.0 * kPi);
  return {0.5 * static_cast<double>(rho(f) - 1) * log2pi -
              0.5 * std::log(static_cast<double>(f.kappa())),
          1};
}

enum class TrigKind { Cos2, Tan2, Tan4 };
enum class TrigDomain { All, Coprime, Regular };

/// Closed forms of the finite trigonometric sums over k*pi/n, k running over
/// [1, n], the coprime residues, or the regular residues. Exact rationals;
/// tan kinds require odd n.
inline BigRat trig_sum(TrigKind kind, TrigDomain domain, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("trig_sum: n must be >= 1");
  if (kind == TrigKind::Cos2 && n < 2) throw std::invalid_argument("trig_sum: cos2 needs n >= 2");
  if (kind != TrigKind::Cos2 && n % 2 == 0)
    throw std::invalid_argument("trig_sum: tan kinds need odd n");
  Factorization f = factorize(n);
  switch (kind) {
    case TrigKind::Cos2:
      switch (domain) {
        case TrigDomain::All:
          return BigRat(n, 2);
        case TrigDomain::Coprime:
          return BigRat(BigInt(euler_phi(f)) + mobius(f), 2);
        case TrigDomain::Regular:
          return BigRat(BigInt(rho(f)) + mu_bar(f), 2);
      }
      break;
    case TrigKind::Tan2:
      switch (domain) {
        case TrigDomain::All:
          return BigRat(BigInt(n) * BigInt(n) - BigInt(n));
        case TrigDomain::Coprime:
          return jordan_phi(2, f) - BigRat(euler_phi(f));
        case TrigDomain::Regular:
          return rho_s(2, f) - BigRat(rho(f));
      }
      break;
    case TrigKind::Tan4:
      switch (domain) {
        case TrigDomain::All: {
          BigInt n2 = BigInt(n) * BigInt(n);
          return BigRat(n2 * n2 - 4 * n2 + 3 * BigInt(n), 3);
        }
        case TrigDomain::Coprime:
          return (jordan_phi(4, f) - 4 * jordan_phi(2, f) + 3 * BigRat(euler_phi(f))) / 3;
        case TrigDomain::Regular:
          return (rho_s(4, f) - 4 * rho_s(2, f) + 3 * BigRat(rho(f))) / 3;
      }
      break;
  }
  throw std::logic_error("trig_sum: unreachable");
}

enum class TrigProductKind { Sin, Cos };
enum class TrigProductDomain { Coprime, RegularMod };

/// Closed forms of the sine/cosine products. Coprime products run over the
/// residues coprime to n; the regular_mod products run over regular k in
/// [1, n-1] (the k = n factor would force sin products to zero).
inline double trig_product(TrigProductKind kind, TrigProductDomain domain, std::uint64_t n) {
  Factorization f = factorize(n);
  if (kind == TrigProductKind::Sin && domain == TrigProductDomain::Coprime) {
    if (n < 2) throw std::invalid_argument("trig_product: sin/coprime needs n >= 2");
    // U(n) = Phi_n(1) / 2^{phi(n)}
    return std::ldexp(static_cast<double>(cyclotomic_at_one(f)),
                      -static_cast<int>(euler_phi(f)));
  }
  if (kind == TrigProductKind::Cos && domain == TrigProductDomain::Coprime) {
    if (n < 3) throw std::invalid_argument("trig_product: cos/coprime needs n >= 3");
    // V(n) = Phi_n(-1) / (-4)^{phi(n)/2}
    const std::uint64_t phi = euler_phi(f);
    double magnitude = std::ldexp(static_cast<double>(cyclotomic_at_minus_one(f)),
                                  -static_cast<int>(phi));
    return (phi / 2) % 2 == 0 ? magnitude : -magnitude;
  }
  if (kind == TrigProductKind::Sin) {
    if (n < 2) throw std::invalid_argument("trig_product: sin/regular_mod needs n >= 2");
    // U*(n) = kappa(n) / 2^{rho(n)-1}
    return std::ldexp(static_cast<double>(f.kappa()), -static_cast<int>(rho(f) - 1));
  }
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("trig_product: cos/regular_mod needs odd n >= 3");
  // V*(n) = (-1/4)^{(rho(n)-1)/2}; rho(n) is odd for every odd n.
  const std::uint64_t vrho = rho(f);
  if (vrho % 2 == 0) throw std::logic_error("trig_product: rho(n) even for odd n");
  double magnitude = std::ldexp(1.0, -static_cast<int>(vrho - 1));
  return ((vrho - 1) / 2) % 2 == 0 ? magnitude : -magnitude;
}

}  // namespace regint
