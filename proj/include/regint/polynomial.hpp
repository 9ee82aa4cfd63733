#pragma once

#include "regint/bigint.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>
#include <type_traits>
#include <vector>

namespace regint {

/// Dense univariate polynomial over an exact coefficient ring T, coefficients
/// ascending by degree. The zero polynomial has an empty coefficient list; a
/// nonzero polynomial always has a nonzero leading coefficient.
///
/// The int64_t instantiation guards its products: multiplication throws
/// std::overflow_error instead of wrapping, so callers can fall back to
/// BigInt coefficients.
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Polynomial monomial(std::size_t degree, T coeff = T(1)) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = std::move(coeff);
    return Polynomial(std::move(c));
  }

  /// x^e - 1.
  static Polynomial binomial_xn_minus_1(std::size_t e) {
    std::vector<T> c(e + 1, T(0));
    c[0] = T(-1);
    c[e] = T(1);
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }

  /// -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }

  const std::vector<T>& coefficients() const { return c_; }

  T coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  bool monic() const { return !c_.empty() && c_.back() == T(1); }

  bool palindromic() const {
    return std::equal(c_.begin(), c_.end(), c_.rbegin());
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if constexpr (std::is_same_v<T, std::int64_t>) {
      return mul_checked_i64(a, b);
    } else {
      std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
      for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == T(0)) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
      }
      return Polynomial(std::move(out));
    }
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Multiply by (x^e - 1) in O(degree).
  Polynomial& mul_binomial(std::size_t e) {
    if (is_zero()) return *this;
    std::vector<T> out(c_.size() + e, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      out[i + e] += c_[i];
      out[i] -= c_[i];
    }
    c_ = std::move(out);
    normalize();
    return *this;
  }

  /// Exact division by (x^e - 1) in O(degree); throws if not divisible.
  Polynomial& divexact_binomial(std::size_t e) {
    if (is_zero()) return *this;
    if (c_.size() <= e) throw std::logic_error("divexact_binomial: degree too small");
    // dividend[i] = q[i-e] - q[i], so q[i] = q[i-e] - dividend[i].
    std::vector<T> q(c_.size() - e, T(0));
    for (std::size_t i = 0; i + e < c_.size(); ++i)
      q[i] = (i >= e ? q[i - e] : T(0)) - c_[i];
    for (std::size_t i = c_.size() - e; i < c_.size(); ++i) {
      if (c_[i] != q[i - e]) throw std::logic_error("divexact_binomial: nonzero remainder");
    }
    c_ = std::move(q);
    normalize();
    return *this;
  }

  struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
  };

  /// Long division by a divisor with leading coefficient +-1.
  DivMod divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
    if (!(divisor.leading() == T(1) || divisor.leading() == T(-1)))
      throw std::invalid_argument("divmod: divisor leading coefficient must be a unit");
    if (degree() < divisor.degree()) return {{}, *this};
    std::vector<T> rem = c_;
    const std::size_t dd = divisor.c_.size() - 1;
    std::vector<T> quot(rem.size() - dd, T(0));
    const bool neg = divisor.leading() == T(-1);
    for (std::size_t i = rem.size(); i-- > dd;) {
      T q = neg ? T(-rem[i]) : rem[i];
      if (q == T(0)) continue;
      quot[i - dd] = q;
      for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.c_[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  /// Exact division; throws std::logic_error on a nonzero remainder.
  Polynomial divexact(const Polynomial& divisor) const {
    DivMod dm = divmod(divisor);
    if (!dm.remainder.is_zero()) throw std::logic_error("divexact: nonzero remainder");
    return std::move(dm.quotient);
  }

  template <typename V>
  V eval(const V& x) const {
    V acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + V(c_[i]);
    return acc;
  }

  T eval1() const {
    T acc(0);
    for (const T& v : c_) acc += v;
    return acc;
  }

  T eval_minus1() const {
    T acc(0);
    bool flip = false;
    for (const T& v : c_) {
      acc += flip ? T(-v) : v;
      flip = !flip;
    }
    return acc;
  }

  template <typename U>
  Polynomial<U> cast() const {
    std::vector<U> out;
    out.reserve(c_.size());
    for (const T& v : c_) out.push_back(U(v));
    return Polynomial<U>(std::move(out));
  }

  /// Sparse human-readable form, highest degree first: "x^9 - x^6 + x^3 - 1".
  std::string to_text() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const T& v = c_[i];
      if (v == T(0)) continue;
      const bool negative = v < T(0);
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      T a = negative ? T(-v) : v;
      if (i == 0 || a != T(1)) out += coeff_text(a);
      if (i >= 1) {
        out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  static std::string coeff_text(const T& v) {
    if constexpr (std::is_integral_v<T>) {
      return std::to_string(v);
    } else {
      return v.str();
    }
  }

  static Polynomial mul_checked_i64(const Polynomial& a, const Polynomial& b) {
    auto max_abs = [](const std::vector<std::int64_t>& v) {
      unsigned long long m = 0;
      for (std::int64_t x : v) {
        unsigned long long ax = x < 0 ? 0ull - static_cast<unsigned long long>(x)
                                      : static_cast<unsigned long long>(x);
        m = std::max(m, ax);
      }
      return m;
    };
    auto bits = [](unsigned long long v) {
      int b = 0;
      while (v) {
        ++b;
        v >>= 1;
      }
      return b;
    };
    const std::size_t terms = std::min(a.c_.size(), b.c_.size());
    if (bits(max_abs(a.c_)) + bits(max_abs(b.c_)) + bits(terms) > 126)
      throw std::overflow_error("Polynomial<int64>: product may overflow");
    std::vector<__int128> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      const std::int64_t ai = a.c_[i];
      if (ai == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        out[i + j] += static_cast<__int128>(ai) * b.c_[j];
    }
    std::vector<std::int64_t> fin(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i] > std::numeric_limits<std::int64_t>::max() ||
          out[i] < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("Polynomial<int64>: coefficient overflow");
      fin[i] = static_cast<std::int64_t>(out[i]);
    }
    return Polynomial(std::move(fin));
  }

  std::vector<T> c_;
};

/// Dense integer polynomial with arbitrary-precision coefficients.
using IntPolynomial = Polynomial<BigInt>;

/// Dense polynomial with exact rational coefficients.
using RationalPolynomial = Polynomial<BigRat>;

}  // namespace regint
