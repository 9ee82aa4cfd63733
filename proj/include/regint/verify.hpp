#pragma once

// Identity catalog: every closed form in the library paired with its
// definition-level oracle, swept over a range of moduli. The CLI `verify`
// command and the acceptance suite both run these entries.

#include "regint/asymptotics.hpp"
#include "regint/bernoulli.hpp"
#include "regint/cyclotomic.hpp"
#include "regint/oracles.hpp"
#include "regint/products.hpp"
#include "regint/regular.hpp"

#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace regint {

struct WorstCase {
  std::uint64_t n = 0;
  std::string observed;
  std::string expected;
  double error = 0.0;
};

/// Outcome of one identity sweep. For exact identities the tolerance is zero
/// and pass means bit-exact agreement at every tested n; for float identities
/// worst.error records the largest observed deviation.
struct VerificationReport {
  std::string identity;
  std::uint64_t from = 1;
  std::uint64_t to = 1;
  double tolerance = 0.0;
  bool pass = true;
  std::uint64_t checked = 0;
  WorstCase worst;
  std::string note;
};

namespace detail {

struct CheckOutcome {
  bool ok = true;
  bool skipped = false;
  std::string observed;
  std::string expected;
  double error = 0.0;
};

inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

/// Deterministic parallel sweep: contiguous chunks merged in range order, so
/// the reported worst case does not depend on thread scheduling.
inline VerificationReport sweep_identity(const std::string& name, std::uint64_t from,
                                         std::uint64_t to, double tolerance, unsigned jobs,
                                         const std::function<CheckOutcome(std::uint64_t)>& check) {
  VerificationReport report;
  report.identity = name;
  report.from = from;
  report.to = to;
  report.tolerance = tolerance;
  if (from > to) return report;

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t span = to - from + 1;
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, span));

  struct Partial {
    bool pass = true;
    WorstCase fail;
    WorstCase max_err;
    bool has_err = false;
    std::uint64_t checked = 0;
    std::exception_ptr thrown;
  };
  std::vector<Partial> parts(jobs);
  std::vector<std::thread> threads;
  const std::uint64_t chunk = span / jobs;
  const std::uint64_t extra = span % jobs;
  std::uint64_t lo = from;
  for (unsigned j = 0; j < jobs; ++j) {
    const std::uint64_t len = chunk + (j < extra ? 1 : 0);
    const std::uint64_t hi = lo + len - 1;
    threads.emplace_back([&parts, &check, j, lo, hi] {
      Partial& part = parts[j];
      try {
        for (std::uint64_t n = lo; n <= hi; ++n) {
          CheckOutcome r = check(n);
          if (r.skipped) continue;
          ++part.checked;
          if (!part.has_err || r.error > part.max_err.error) {
            part.max_err = {n, r.observed, r.expected, r.error};
            part.has_err = true;
          }
          if (!r.ok && part.pass) {
            part.pass = false;
            part.fail = {n, r.observed, r.expected, r.error};
          }
        }
      } catch (...) {
        part.thrown = std::current_exception();
      }
    });
    lo = hi + 1;
  }
  for (auto& t : threads) t.join();
  for (auto& p : parts)
    if (p.thrown) std::rethrow_exception(p.thrown);

  // First failure (smallest n) wins; otherwise the largest observed error.
  bool has_worst = false;
  for (const Partial& p : parts) {
    report.checked += p.checked;
    if (!p.pass && report.pass) {
      report.pass = false;
      report.worst = p.fail;
      has_worst = true;
    }
  }
  if (report.pass) {
    for (const Partial& p : parts) {
      if (p.has_err && (!has_worst || p.max_err.error > report.worst.error)) {
        report.worst = p.max_err;
        has_worst = true;
      }
    }
  }
  return report;
}

inline CheckOutcome exact_check(bool ok, const std::string& observed,
                                const std::string& expected) {
  CheckOutcome out;
  out.ok = ok;
  if (!ok) {
    out.observed = observed;
    out.expected = expected;
  }
  return out;
}

template <typename T>
CheckOutcome exact_eq(const T& observed, const T& expected) {
  CheckOutcome out;
  if (!(observed == expected)) {
    out.ok = false;
    if constexpr (std::is_arithmetic_v<T>) {
      out.observed = std::to_string(observed);
      out.expected = std::to_string(expected);
    } else {
      out.observed = observed.str();
      out.expected = expected.str();
    }
  }
  return out;
}

inline void merge(CheckOutcome& into, const CheckOutcome& part) {
  if (part.skipped) return;
  into.skipped = false;
  if (part.error > into.error) {
    into.error = part.error;
    if (into.ok && part.ok) {
      into.observed = part.observed;
      into.expected = part.expected;
    }
  }
  if (!part.ok && into.ok) {
    into.ok = false;
    into.observed = part.observed;
    into.expected = part.expected;
  }
}

inline CheckOutcome float_check(long double observed, long double expected, double tolerance) {
  CheckOutcome out;
  out.error = static_cast<double>(fabsl(observed - expected));
  out.observed = fmt_double(static_cast<double>(observed));
  out.expected = fmt_double(static_cast<double>(expected));
  out.ok = out.error <= tolerance;
  return out;
}

}  // namespace detail

/// One verifiable identity: a name, the swept default range, and a runner.
struct Identity {
  std::string name;
  std::string summary;
  bool exact;  // exact identities reject a user-supplied tolerance
  std::uint64_t default_max_n;
  double default_tolerance;
  std::function<VerificationReport(std::uint64_t max_n, double tolerance, unsigned jobs)> run;
};

namespace identities {

using detail::CheckOutcome;
using detail::exact_check;
using detail::exact_eq;
using detail::float_check;
using detail::fmt_double;
using detail::merge;
using detail::sweep_identity;

inline VerificationReport run_regularity(std::uint64_t max_n, double, unsigned jobs) {
  return sweep_identity("regularity_characterizations", 1, max_n, 0.0, jobs, [](std::uint64_t n) {
    CheckOutcome out;
    Factorization f = factorize(n);
    if (n <= 100) {
      for (std::uint64_t k = 1; k <= n; ++k) {
        bool lib = is_regular(static_cast<std::int64_t>(k), n);
        bool weak = oracle::regular_by_weak_order(static_cast<std::int64_t>(k), n);
        bool def = oracle::regular_by_definition(static_cast<std::int64_t>(k), n);
        bool shift_up = is_regular(static_cast<std::int64_t>(k + n), n);
        bool shift_down =
            is_regular(static_cast<std::int64_t>(k) - 2 * static_cast<std::int64_t>(n), n);
        merge(out, exact_check(lib == weak && lib == def && lib == shift_up && lib == shift_down,
                               "k=" + std::to_string(k) + (lib ? " regular" : " irregular"),
                               "all characterizations agree"));
        if (!out.ok) return out;
      }
    }
    auto check_k = [&](std::uint64_t k) {
      bool lib = is_regular(static_cast<std::int64_t>(k), n);
      bool pp = oracle::regular_by_prime_powers(k, f);
      merge(out, exact_check(lib == pp, "k=" + std::to_string(k),
                             "unitary-gcd and prime-power criteria agree"));
      return lib;
    };
    // Full k sweep (with a |Reg_n| count) below 20000; above that, moduli
    // divisible by 37 get the full sweep and the rest get 25 sampled k.
    const bool full = n <= 20'000 || n % 37 == 0;
    if (full) {
      std::uint64_t count = 0;
      for (std::uint64_t k = 1; k <= n && out.ok; ++k)
        if (check_k(k)) ++count;
      if (out.ok)
        merge(out, exact_check(count == rho(f), "|Reg_n| counted " + std::to_string(count),
                               "rho(n) = " + std::to_string(rho(f))));
    } else {
      std::mt19937_64 rng(n);
      for (int i = 0; i < 25 && out.ok; ++i) check_k(rng() % n + 1);
    }
    return out;
  });
}

inline VerificationReport run_prop1_rho_r(std::uint64_t max_n, double, unsigned jobs) {
  return sweep_identity("prop1_rho_r", 1, max_n, 0.0, jobs, [](std::uint64_t n) {
    CheckOutcome out;
    merge(out, exact_eq(BigInt(rho(n)), BigInt(regular_set(n).size())));
    for (std::uint32_t r = 1; r <= 3 && out.ok; ++r)
      merge(out, exact_eq(rho_r(r, n), oracle::rho_r_tuple_count(r, n)));
    return out;
  });
}

/// Exact rational weight functions g on (0, 1] for the general scheme tests.
inline const std::vector<std::function<BigRat(const BigRat&)>>& scheme_pool() {
  static const std::vector<std::function<BigRat(const BigRat&)>> pool = {
      [](const BigRat& x) { return x; },
      [](const BigRat& x) { return x * x; },
      [](const BigRat& x) { return x * x * x - x / 2; },
      [](const BigRat& x) { return BigRat(1) / (x + 1); },
      [](const BigRat& x) { return x * (BigRat(1) - x); },
  };
  return pool;
}

inline VerificationReport run_prop3_scheme(std::uint64_t max_n, double, unsigned jobs) {
  return sweep_identity("prop3_general_scheme", 1, max_n, 0.0, jobs, [](std::uint64_t n) {
    CheckOutcome out;
    const auto& g = scheme_pool()[n % scheme_pool().size()];
    auto g_all = [&](std::uint64_t m) {
      BigRat acc(0);
      for (std::uint64_t k = 1; k <= m; ++k) acc += g(BigRat(k, m));
      return acc;
    };
    auto g_coprime = [&](std::uint64_t m) {
      BigRat acc(0);
      for (std::uint64_t k = 1; k <= m; ++k)
        if (std::gcd(k, m) == 1) acc += g(BigRat(k, m));
      return acc;
    };
    // Moebius connection between the full and coprime-restricted inner sums.
    BigRat connect(0);
    for (std::uint64_t d : divisors(n)) {
      int mu = mobius(d);
      if (mu != 0) connect += BigRat(mu) * g_all(n / d);
    }
    merge(out, exact_eq(g_coprime(n), connect));
    // The reduction against the definitional sum over Reg_n, f = 1 and f = id.
    BigRat brute_one(0), brute_id(0);
    for (std::uint64_t k : oracle::residues(oracle::Domain::Regular, n)) {
      BigRat w = g(BigRat(k, n));
      brute_one += w;
      brute_id += w * BigRat(std::gcd(k, n));
    }
    merge(out, exact_eq(reduce_over_regular([](std::uint64_t) { return BigRat(1); }, g_coprime, n),
                        brute_one));
    merge(out, exact_eq(reduce_over_regular([](std::uint64_t d) { return BigRat(d); }, g_coprime, n),
                        brute_id));
    return out;
  });
}

inline VerificationReport run_prop4_power_sums(std::uint64_t max_n, double, unsigned jobs) {
  return sweep_identity("prop4_power_sums", 1, max_n, 0.0, jobs, [](std::uint64_t n) {
    CheckOutcome out;
    const bool squarefree = factorize(n).squarefree();
    for (std::uint32_t r = 1; r <= 6 && out.ok; ++r) {
      BigInt all = oracle::power_sum(oracle::Domain::All, r, n);
      BigInt coprime = oracle::power_sum(oracle::Domain::Coprime, r, n);
      BigInt regular = oracle::power_sum(oracle::Domain::Regular, r, n);
      merge(out, exact_eq(power_sum_all(r, n), all));
      merge(out, exact_eq(power_sum_coprime(r, n), coprime));
      merge(out, exact_eq(power_sum_regular(r, n), regular));
      if (squarefree) merge(out, exact_eq(power_sum_regular(r, n), all));
    }
    return out;
  });
}

inline VerificationReport run_sum_special_cases(std::uint64_t max_n, double, unsigned jobs) {
  return sweep_identity("sum_special_cases", 1, max_n, 0.0, jobs, [](std::uint64_t n) {
    CheckOutcome out;
    SpecialCaseSums s = special_case_sums(n);
    merge(out, exact_eq(s.s1, oracle::power_sum(oracle::Domain::Regular, 1, n)));
    merge(out, exact_eq(s.s2, oracle::power_sum(oracle::Domain::Regular, 2, n)));
    merge(out, exact_eq(s.s3, oracle::power_sum(oracle::Domain::Regular, 3, n)));
    merge(out, exact_eq(s.s4, oracle::power_sum(oracle::Domain::Regular, 4, n)));
    return out;
  });
}

inline VerificationReport run_prop5_partial_sums(std::uint64_t max_n, double tolerance,
                                                 unsigned jobs) {
  const std::uint64_t x = 100'000;
  VerificationReport rep =
      sweep_identity("prop5_partial_sums", 1, max_n, tolerance, jobs, [&](std::uint64_t n) {
        CheckOutcome out;
        const std::uint64_t count = oracle::count_regular_up_to(n, x);
        const std::uint64_t vrho = rho(n);
        const double witness =
            std::fabs(static_cast<double>(count) * static_cast<double>(n) /
                          (static_cast<double>(x) * static_cast<double>(vrho)) -
                      1.0);
        CheckOutcome w;
        w.error = witness;
        w.observed = fmt_double(witness);
        w.expected = "<= tolerance";
        w.ok = witness <= tolerance;
        merge(out, w);
        // |count - x rho/n| <= 3^omega(n): elementary counting bound, constant 1.
        BigRat deviation = BigRat(count) - BigRat(x) * BigRat(vrho) / BigRat(n);
        if (deviation < 0) deviation = -deviation;
        BigRat bound = rat_pow(BigRat(3), omega(n));
        merge(out, exact_check(deviation <= bound, deviation.str(),
                               "<= 3^omega = " + bound.str()));
        return out;
      });
  rep.note = "x = " + std::to_string(x);
  return rep;
}

inline VerificationReport run_prop6_bernoulli(std::uint64_t max_n, double, unsigned jobs) {
  return sweep_identity("prop6_bernoulli_sums", 1, max_n, 0.0, jobs, [](std::uint64_t n) {
    CheckOutcome out;
    auto all = oracle::residues(oracle::Domain::All, n);
    auto coprime = oracle::residues(oracle::Domain::Coprime, n);
    auto regular = oracle::residues(oracle::Domain::Regular, n);
    const bool squarefree = factorize(n).squarefree();
    for (std::uint32_t m = 2; m <= 10 && out.ok; ++m) {
      merge(out, exact_eq(bernoulli_sum_all(m, n), oracle::bernoulli_sum_over(m, n, all)));
      merge(out, exact_eq(bernoulli_sum_coprime(m, n), oracle::bernoulli_sum_over(m, n, coprime)));
      merge(out, exact_eq(bernoulli_sum_regular(m, n), oracle::bernoulli_sum_over(m, n, regular)));
      if (squarefree) merge(out, exact_eq(bernoulli_sum_regular(m, n), bernoulli_sum_all(m, n)));
    }
    merge(out, exact_eq(bernoulli_sum_regular_m1(n, false),
                        oracle::bernoulli_sum_over(1, n, regular)));
    merge(out, exact_eq(bernoulli_sum_regular_m1(n, true), oracle::bernoulli_sum_from_zero(1, n)));
    merge(out, exact_eq(bernoulli_sum_regular_m1(n, false), BigRat(1, 2)));
    merge(out, exact_eq(bernoulli_sum_regular_m1(n, true), BigRat(-1, 2)));
    return out;
  });
}

inline VerificationReport run_prop7_preg(std::uint64_t max_n, double, unsigned jobs) {
  return sweep_identity("prop7_preg_convolution", 1, max_n, 0.0, jobs, [](std::uint64_t n) {
    CheckOutcome out;
    std::vector<std::uint64_t> uds = unitary_divisors(n);
    const MultiplicativeFn id = mult_id();
    for (std::int64_t t : {std::int64_t{0}, std::int64_t{1}, std::int64_t{2}, std::int64_t{7}}) {
      // Two independent exact evaluations of the Ramanujan-sum convolutions.
      std::int64_t c_hoelder = 0, c_divisor = 0;
      BigInt p_divisor = 0;
      for (std::uint64_t d : uds) {
        c_hoelder += ramanujan_sum(d, t);
        c_divisor += oracle::ramanujan_sum_divisor_route(d, t);
        p_divisor += BigInt(d) * BigInt(oracle::ramanujan_sum_divisor_route(n / d, t));
      }
      merge(out, exact_eq(BigInt(c_hoelder), BigInt(c_divisor)));
      merge(out, exact_eq(BigInt(c_bar(n, t)), BigInt(c_hoelder)));
      merge(out, exact_eq(p_reg(id, t, n), p_divisor));
      if (!out.ok) return out;
    }
    merge(out, exact_eq(p_reg(id, 0, n), BigInt(gcd_sum_regular(n))));
    merge(out, exact_eq(BigInt(gcd_sum_regular(n)), BigInt(oracle::gcd_sum_regular(n))));
    merge(out, exact_eq(BigInt(c_bar(n, 0)), BigInt(rho(n))));
    merge(out, exact_eq(BigInt(c_bar(n, 1)), BigInt(mu_bar(n))));
    merge(out, exact_eq(p_reg(id, 1, n), BigInt(p_reg_id1(n))));
    return out;
  });
}

inline VerificationReport run_prop9_menon(std::uint64_t max_n, double, unsigned jobs) {
  return sweep_identity("prop9_menon", 1, max_n, 0.0, jobs, [](std::uint64_t n) {
    CheckOutcome out;
    std::uint64_t via_unitary = 0;
    for (std::uint64_t d : unitary_divisors(n)) {
      Factorization fd = factorize(d);
      via_unitary += euler_phi(fd) * tau(fd);
    }
    merge(out, exact_eq(BigInt(menon_regular(n)), BigInt(via_unitary)));
    merge(out, exact_eq(BigInt(menon_regular(n)), BigInt(oracle::menon_regular(n))));
    if (n <= 2000) {
      // a-twisted form: constant in a (menon_coprime checks phi*tau internally).
      std::uint64_t budget = 2;
      std::uint64_t expected = euler_phi(n) * tau(n);
      merge(out, exact_eq(BigInt(menon_coprime(1, n)), BigInt(expected)));
      for (std::uint64_t a = 2; a <= n + 1 && budget > 0; ++a) {
        if (std::gcd(a, n) != 1) continue;
        --budget;
        merge(out, exact_eq(BigInt(menon_coprime(a, n)), BigInt(expected)));
      }
    }
    return out;
  });
}

inline VerificationReport run_prop10_cos2(std::uint64_t max_n, double tolerance, unsigned jobs) {
  return sweep_identity("prop10_cos2", 2, max_n, tolerance, jobs, [tolerance](std::uint64_t n) {
    CheckOutcome out;
    for (auto domain : {oracle::Domain::All, oracle::Domain::Coprime, oracle::Domain::Regular}) {
      TrigDomain td = domain == oracle::Domain::All       ? TrigDomain::All
                      : domain == oracle::Domain::Coprime ? TrigDomain::Coprime
                                                          : TrigDomain::Regular;
      long double closed = trig_sum(TrigKind::Cos2, td, n).convert_to<long double>();
      merge(out, float_check(oracle::trig_sum_brute(TrigKind::Cos2, domain, n), closed, tolerance));
    }
    return out;
  });
}

inline VerificationReport run_prop11_tan(std::uint64_t max_n, double tolerance, unsigned jobs) {
  return sweep_identity("prop11_tan", 1, max_n, tolerance, jobs, [tolerance](std::uint64_t n) {
    CheckOutcome out;
    if (n % 2 == 0) {
      out.skipped = true;
      return out;
    }
    for (auto kind : {TrigKind::Tan2, TrigKind::Tan4}) {
      for (auto domain : {oracle::Domain::All, oracle::Domain::Coprime, oracle::Domain::Regular}) {
        TrigDomain td = domain == oracle::Domain::All       ? TrigDomain::All
                        : domain == oracle::Domain::Coprime ? TrigDomain::Coprime
                                                            : TrigDomain::Regular;
        long double closed = trig_sum(kind, td, n).convert_to<long double>();
        merge(out, float_check(oracle::trig_sum_brute(kind, domain, n), closed, tolerance));
      }
    }
    return out;
  });
}

inline VerificationReport run_prop12_product(std::uint64_t max_n, double, unsigned jobs) {
  return sweep_identity("prop12_product_regular", 1, max_n, 0.0, jobs, [](std::uint64_t n) {
    CheckOutcome out;
    merge(out, exact_eq(product_regular(n), oracle::product_over(oracle::Domain::Regular, n)));
    merge(out, exact_eq(product_coprime(n), oracle::product_over(oracle::Domain::Coprime, n)));
    if (factorize(n).squarefree())
      merge(out, exact_eq(product_regular(n), oracle::product_over(oracle::Domain::All, n)));
    if (n <= 200) {
      // Exact bookkeeping identity behind the product formula:
      // Qbar(n) * prod_{d||n} d^phi(d) = n^rho(n) * prod_{d||n} Q'(d).
      BigInt lhs = product_regular(n);
      BigInt rhs = pow_big(BigInt(n), rho(n));
      for (std::uint64_t d : unitary_divisors(n)) {
        lhs *= pow_big(BigInt(d), euler_phi(d));
        rhs *= product_coprime(d);
      }
      merge(out, exact_eq(lhs, rhs));
    }
    return out;
  });
}

inline VerificationReport run_prop13_gamma(std::uint64_t max_n, double tolerance, unsigned jobs) {
  return sweep_identity("prop13_gamma", 1, max_n, tolerance, jobs, [tolerance](std::uint64_t n) {
    CheckOutcome out;
    merge(out, float_check(oracle::gamma_product_brute(oracle::Domain::All, n).log_abs,
                           gamma_product_all(n).log_abs, tolerance));
    if (n >= 2)
      merge(out, float_check(oracle::gamma_product_brute(oracle::Domain::Coprime, n).log_abs,
                             gamma_product_coprime(n).log_abs, tolerance));
    merge(out, float_check(oracle::gamma_product_brute(oracle::Domain::Regular, n).log_abs,
                           gamma_product_regular(n).log_abs, tolerance));
    if (factorize(n).squarefree())
      merge(out, float_check(gamma_product_regular(n).log_abs, gamma_product_all(n).log_abs,
                             1e-12));
    return out;
  });
}

inline VerificationReport run_prop14_cyclotomic(std::uint64_t max_n, double, unsigned jobs) {
  return sweep_identity("prop14_cyclotomic", 1, max_n, 0.0, jobs, [](std::uint64_t n) {
    CheckOutcome out;
    Factorization f = factorize(n);
    // Reconstruction over all divisors.
    IntPolynomial recon = [&] {
      try {
        Polynomial<std::int64_t> acc = Polynomial<std::int64_t>::monomial(0);
        for (std::uint64_t d : divisors(f)) acc *= *detail::cyclotomic_i64(d);
        return acc.cast<BigInt>();
      } catch (const std::overflow_error&) {
        IntPolynomial acc = IntPolynomial::monomial(0);
        for (std::uint64_t d : divisors(f)) acc *= cyclotomic(d);
        return acc;
      }
    }();
    merge(out, exact_check(recon == IntPolynomial::binomial_xn_minus_1(n),
                           "prod_{d|n} Phi_d", "x^n - 1"));
    IntPolynomial bar = phi_regular(n);
    merge(out, exact_eq(BigInt(bar.degree()), BigInt(rho(f))));
    merge(out, exact_eq(cyclotomic(n).eval1(), BigInt(n >= 2 ? cyclotomic_at_one(f) : 0)));
    if (n >= 3)
      merge(out, exact_eq(cyclotomic(n).eval_minus1(), BigInt(cyclotomic_at_minus_one(f))));
    if (f.squarefree())
      merge(out, exact_check(bar == IntPolynomial::binomial_xn_minus_1(n), "phi_regular",
                             "x^n - 1 (squarefree)"));
    if (n >= 2) {
      IntPolynomial star = phi_regular_star(n);
      merge(out, exact_eq(BigInt(star.degree()), BigInt(rho(f) - 1)));
      merge(out, exact_check(star.palindromic(), "coefficients", "palindromic"));
      merge(out, exact_eq(phi_regular_star_at(n, 1), BigInt(f.kappa())));
      IntPolynomial recomposed = star;
      recomposed.mul_binomial(1);
      merge(out, exact_check(recomposed == bar, "(x-1) * phi_regular_star", "phi_regular"));
    }
    if (n <= 100) {
      // Float root check: phi_regular vanishes exactly at the regular roots of unity.
      for (std::uint64_t k = 1; k <= n; ++k) {
        std::complex<long double> x(oracle::cos_pi_frac(2 * k, n), oracle::sin_pi_frac(2 * k, n));
        std::complex<long double> v(0.0L, 0.0L);
        for (std::size_t i = bar.coefficients().size(); i-- > 0;)
          v = v * x + std::complex<long double>(
                          static_cast<long double>(bar.coefficients()[i].convert_to<double>()),
                          0.0L);
        const double mag = static_cast<double>(abs(v));
        const bool regular = is_regular(static_cast<std::int64_t>(k), n);
        merge(out, exact_check(regular ? mag <= 1e-6 : mag > 1e-6,
                               "|phi_regular(root " + std::to_string(k) + ")| = " + fmt_double(mag),
                               regular ? "<= 1e-6" : "> 1e-6"));
      }
    }
    return out;
  });
}

inline VerificationReport run_formula_u(std::uint64_t max_n, double tolerance, unsigned jobs) {
  return sweep_identity("formula_u", 2, max_n, tolerance, jobs, [tolerance](std::uint64_t n) {
    CheckOutcome out;
    Factorization f = factorize(n);
    merge(out, exact_eq(cyclotomic(n).eval1(), BigInt(cyclotomic_at_one(f))));
    const double closed_log = std::log(static_cast<double>(cyclotomic_at_one(f))) -
                              static_cast<double>(euler_phi(f)) * std::log(2.0);
    LogSpaceReal brute = oracle::trig_product_brute(TrigProductKind::Sin, oracle::Domain::Coprime,
                                                    n, false);
    merge(out, exact_check(brute.sign == 1, "sign " + std::to_string(brute.sign), "+1"));
    merge(out, float_check(brute.log_abs, closed_log, tolerance));
    return out;
  });
}

inline VerificationReport run_formula_v(std::uint64_t max_n, double tolerance, unsigned jobs) {
  return sweep_identity("formula_v", 3, max_n, tolerance, jobs, [tolerance](std::uint64_t n) {
    CheckOutcome out;
    Factorization f = factorize(n);
    merge(out, exact_eq(cyclotomic(n).eval_minus1(), BigInt(cyclotomic_at_minus_one(f))));
    const std::uint64_t phi = euler_phi(f);
    const double closed_log = std::log(static_cast<double>(cyclotomic_at_minus_one(f))) -
                              static_cast<double>(phi) * std::log(2.0);
    const int closed_sign = (phi / 2) % 2 == 0 ? 1 : -1;
    LogSpaceReal brute = oracle::trig_product_brute(TrigProductKind::Cos, oracle::Domain::Coprime,
                                                    n, false);
    merge(out, exact_check(brute.sign == closed_sign, "sign " + std::to_string(brute.sign),
                           std::to_string(closed_sign)));
    merge(out, float_check(brute.log_abs, closed_log, tolerance));
    return out;
  });
}

inline VerificationReport run_prop15_products(std::uint64_t max_n, double tolerance,
                                              unsigned jobs) {
  return sweep_identity("prop15_modified_products", 2, max_n, tolerance, jobs,
                        [tolerance](std::uint64_t n) {
    CheckOutcome out;
    Factorization f = factorize(n);
    const std::uint64_t vrho = rho(f);
    {
      const double closed_log = std::log(static_cast<double>(f.kappa())) -
                                static_cast<double>(vrho - 1) * std::log(2.0);
      LogSpaceReal brute = oracle::trig_product_brute(TrigProductKind::Sin,
                                                      oracle::Domain::Regular, n, true);
      merge(out, exact_check(brute.sign == 1, "sign " + std::to_string(brute.sign), "+1"));
      merge(out, float_check(brute.log_abs, closed_log, tolerance));
      merge(out, float_check(std::log(std::fabs(trig_product(TrigProductKind::Sin,
                                                             TrigProductDomain::RegularMod, n))),
                             closed_log, tolerance));
    }
    if (n % 2 == 1) {
      merge(out, exact_check(vrho % 2 == 1, "rho(n) = " + std::to_string(vrho), "odd"));
      if (n >= 3) {
        const double closed_log = -static_cast<double>(vrho - 1) * std::log(2.0);
        const int closed_sign = ((vrho - 1) / 2) % 2 == 0 ? 1 : -1;
        LogSpaceReal brute = oracle::trig_product_brute(TrigProductKind::Cos,
                                                        oracle::Domain::Regular, n, true);
        merge(out, exact_check(brute.sign == closed_sign, "sign " + std::to_string(brute.sign),
                               std::to_string(closed_sign)));
        merge(out, float_check(brute.log_abs, closed_log, tolerance));
      }
    }
    if (n <= 100) {
      LogSpaceReal full = oracle::trig_product_brute(TrigProductKind::Sin,
                                                     oracle::Domain::Regular, n, false);
      merge(out, exact_check(full.sign == 0, "full sin product sign " + std::to_string(full.sign),
                             "0 (k = n term)"));
    }
    return out;
  });
}

inline VerificationReport run_cbar_exponential(std::uint64_t max_n, double tolerance,
                                               unsigned jobs) {
  return sweep_identity("cbar_exponential", 1, max_n, tolerance, jobs,
                        [tolerance, max_n](std::uint64_t n) {
    CheckOutcome out;
    merge(out, exact_eq(BigInt(c_bar(n, 0)), BigInt(rho(n))));
    merge(out, exact_eq(BigInt(c_bar(n, 1)), BigInt(mu_bar(n))));
    std::vector<std::uint64_t> regs = oracle::residues(oracle::Domain::Regular, n);
    // Per-modulus tables of cos/sin(2 pi j / n).
    std::vector<long double> cos_t(n), sin_t(n);
    for (std::uint64_t j = 0; j < n; ++j) {
      cos_t[j] = oracle::cos_pi_frac(2 * j, n);
      sin_t[j] = oracle::sin_pi_frac(2 * j, n);
    }
    const std::int64_t t_span = static_cast<std::int64_t>(max_n);
    for (std::int64_t t = -t_span; t <= t_span; ++t) {
      std::uint64_t tt = static_cast<std::uint64_t>(((t % static_cast<std::int64_t>(n)) +
                                                     static_cast<std::int64_t>(n))) %
                         n;
      oracle::KahanSum re, im;
      for (std::uint64_t k : regs) {
        std::uint64_t j = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(k) * tt % n);
        re.add(cos_t[j]);
        im.add(sin_t[j]);
      }
      merge(out, float_check(re.value(), static_cast<long double>(c_bar(n, t)), tolerance));
      merge(out, float_check(im.value(), 0.0L, tolerance));
      if (!out.ok) return out;
    }
    if (n <= 150) {
      for (std::int64_t t : {std::int64_t{0}, std::int64_t{1}, std::int64_t{2}, std::int64_t{3}})
        merge(out, exact_eq(oracle::exponential_sum_cyclotomic(regs, n, t), BigInt(c_bar(n, t))));
    }
    const MultiplicativeFn id = mult_id();
    for (std::int64_t t : {std::int64_t{0}, std::int64_t{1}, std::int64_t{5}}) {
      oracle::ComplexSum s = oracle::weighted_exponential_sum(
          oracle::Domain::Regular, n, t,
          [](std::uint64_t g) { return static_cast<long double>(g); });
      merge(out, float_check(s.re, p_reg(id, t, n).convert_to<long double>(), tolerance));
      merge(out, float_check(s.im, 0.0L, tolerance));
    }
    return out;
  });
}

inline VerificationReport run_ramanujan_hoelder(std::uint64_t max_n, double tolerance,
                                                unsigned jobs) {
  return sweep_identity("ramanujan_hoelder", 1, max_n, tolerance, jobs,
                        [tolerance, max_n](std::uint64_t n) {
    CheckOutcome out;
    const std::int64_t phi_n = static_cast<std::int64_t>(euler_phi(n));
    std::vector<std::uint64_t> coprimes = oracle::residues(oracle::Domain::Coprime, n);
    std::vector<long double> cos_t(n), sin_t(n);
    for (std::uint64_t j = 0; j < n; ++j) {
      cos_t[j] = oracle::cos_pi_frac(2 * j, n);
      sin_t[j] = oracle::sin_pi_frac(2 * j, n);
    }
    merge(out, exact_eq(BigInt(ramanujan_sum(n, 0)), BigInt(euler_phi(n))));
    merge(out, exact_eq(BigInt(ramanujan_sum(n, 1)), BigInt(mobius(n))));
    const std::int64_t t_span = static_cast<std::int64_t>(max_n);
    for (std::int64_t t = -t_span; t <= t_span; ++t) {
      std::int64_t c = ramanujan_sum(n, t);
      merge(out, exact_eq(BigInt(c), BigInt(oracle::ramanujan_sum_divisor_route(n, t))));
      merge(out, exact_check(std::llabs(c) <= phi_n, std::to_string(c),
                             "|c_n(t)| <= phi(n) = " + std::to_string(phi_n)));
      if (n <= 200 && std::llabs(t) <= 200) {
        std::uint64_t tt = static_cast<std::uint64_t>(((t % static_cast<std::int64_t>(n)) +
                                                       static_cast<std::int64_t>(n))) %
                           n;
        oracle::KahanSum re, im;
        for (std::uint64_t k : coprimes) {
          std::uint64_t j = static_cast<std::uint64_t>(
              static_cast<unsigned __int128>(k) * tt % n);
          re.add(cos_t[j]);
          im.add(sin_t[j]);
        }
        merge(out, float_check(re.value(), static_cast<long double>(c), tolerance));
        merge(out, float_check(im.value(), 0.0L, tolerance));
      }
      if (!out.ok) return out;
    }
    return out;
  });
}

inline VerificationReport make_ratio_report(const std::string& name, std::uint64_t x,
                                            double window, const SummatoryResult& result) {
  VerificationReport rep;
  rep.identity = name;
  rep.from = 1;
  rep.to = x;
  rep.tolerance = window;
  rep.checked = x;
  rep.pass = std::fabs(result.ratio - 1.0) <= window;
  rep.worst = {x, fmt_double(result.ratio), "ratio within 1 +- " + fmt_double(window),
               std::fabs(result.ratio - 1.0)};
  rep.note = "sum = " + result.sum_int.str() + ", main term = " + fmt_double(result.main_term);
  return rep;
}

inline VerificationReport run_remark1_rho_mean(std::uint64_t max_n, double tolerance, unsigned) {
  return make_ratio_report("remark1_rho_mean", max_n, tolerance,
                           summatory(SummatoryKind::Rho, max_n));
}

inline VerificationReport run_prop2_rho_s_mean(std::uint64_t max_n, double tolerance, unsigned) {
  return make_ratio_report("prop2_rho_s_mean", max_n, tolerance,
                           summatory(SummatoryKind::RhoS, max_n, 2.0));
}

inline VerificationReport run_prop8_preg_mean(std::uint64_t max_n, double tolerance, unsigned) {
  return make_ratio_report("prop8_preg_mean", max_n, tolerance,
                           summatory(SummatoryKind::PregId1, max_n));
}

inline VerificationReport run_prop16_maximal_order(std::uint64_t max_n, double, unsigned jobs) {
  VerificationReport rep;
  rep.identity = "prop16_maximal_order";
  rep.from = 1;
  rep.to = max_n;

  const double limit = limsup_rho_sigma_constant();
  for (auto kind : {MaximalOrderKind::RhoSigma, MaximalOrderKind::RhoPsi}) {
    auto traj = maximal_order_trajectory(kind, 25);
    for (std::size_t i = 10; i <= 25; ++i) {
      const double value = traj[i - 1].normalized;
      const bool decreasing = i == 10 || value < traj[i - 2].normalized;
      if (value < limit || !decreasing) {
        rep.pass = false;
        rep.worst = {traj[i - 1].k, detail::fmt_double(value),
                     "decreasing on [10, 25] and >= " + detail::fmt_double(limit), 0.0};
        return rep;
      }
    }
    if (traj[24].normalized > 1.20) {
      rep.pass = false;
      rep.worst = {25, detail::fmt_double(traj[24].normalized), "<= 1.20", 0.0};
      return rep;
    }
  }
  for (std::uint32_t s : {2u, 3u}) {
    // Throws internally if the zeta-ratio bound is violated along the way.
    auto traj = maximal_order_trajectory(MaximalOrderKind::RhoSigmaS, 25, s);
    rep.checked += traj.size();
  }
  for_each_prime(50, [&](std::uint64_t p) {
    for (auto kind : {MaximalOrderKind::RhoSigma, MaximalOrderKind::RhoPsi}) {
      LocalFactorBound b = local_factor_bounds(kind, p, 64);
      if (!b.sup_at_nu1 || !b.strict_above || b.attained_at != 1) {
        rep.pass = false;
        rep.worst = {p, "sup at nu = " + std::to_string(b.attained_at), "sup at nu = 1", 0.0};
      }
    }
    for (std::uint32_t s : {2u, 3u}) {
      LocalFactorBound b = local_factor_bounds(MaximalOrderKind::RhoSigmaS, p, 64, s);
      if (!b.sup_at_nu1 || !b.strict_above) {
        rep.pass = false;
        rep.worst = {p, "sup at nu = " + std::to_string(b.attained_at), "sup at nu = 1", 0.0};
      }
    }
  });
  if (!rep.pass) return rep;

  // f_s(n) < zeta(s)/zeta(2s) for every n, swept.
  const SpfSieve& sieve = default_sieve();
  if (max_n > sieve.bound()) throw CapacityError("prop16: max_n exceeds sieve bound");
  VerificationReport sweep =
      detail::sweep_identity("prop16_maximal_order", 1, max_n, 0.0, jobs, [&](std::uint64_t n) {
        CheckOutcome out;
        for (std::uint32_t s : {2u, 3u}) {
          const double bound = zeta_ratio(s);
          double f = 1.0;
          std::uint64_t m = n;
          while (m > 1) {
            std::uint64_t p = sieve.smallest_prime_factor(m);
            std::uint32_t nu = 0;
            while (m % p == 0) {
              m /= p;
              ++nu;
            }
            const double ps = std::pow(static_cast<double>(p), s);
            double rho_local = std::pow(ps, nu) - std::pow(ps, nu - 1) + 1.0;
            double sigma_local = 0.0;
            for (std::uint32_t i = 0; i <= nu; ++i) sigma_local += std::pow(ps, i);
            f *= rho_local * sigma_local / std::pow(ps, 2.0 * nu);
          }
          merge(out, exact_check(f < bound, fmt_double(f),
                                 "< zeta ratio " + fmt_double(bound)));
        }
        return out;
      });
  sweep.note = "trajectory and local-factor checks passed";
  return sweep;
}

}  // namespace identities

inline const std::vector<Identity>& identity_catalog() {
  static const std::vector<Identity> catalog = {
      {"regularity_characterizations",
       "weak-order, defining congruence, unitary-gcd and prime-power criteria agree", true,
       100'000, 0.0, identities::run_regularity},
      {"prop1_rho_r", "rho_r equals the brute count of r-tuples with regular gcd (r <= 3)", true,
       60, 0.0, identities::run_prop1_rho_r},
      {"prop3_general_scheme",
       "the unitary-divisor reduction reproduces definitional weighted sums over Reg_n", true,
       300, 0.0, identities::run_prop3_scheme},
      {"prop4_power_sums", "closed power sums S_r, S'_r, S-bar_r vs brute sums (r <= 6)", true,
       2000, 0.0, identities::run_prop4_power_sums},
      {"sum_special_cases", "the specialized formulas for r = 1..4 vs brute sums", true, 2000,
       0.0, identities::run_sum_special_cases},
      {"prop5_partial_sums", "S-bar_0(n, x) density witness at x = 1e5", false, 200, 0.02,
       identities::run_prop5_partial_sums},
      {"prop6_bernoulli_sums", "Bernoulli-polynomial sums T, T', T-bar vs brute (m <= 10)", true,
       2000, 0.0, identities::run_prop6_bernoulli},
      {"prop7_preg_convolution",
       "P-bar_{f,t} unitary convolutions vs independent exact routes; gcd-sum brute", true, 2000,
       0.0, identities::run_prop7_preg},
      {"prop9_menon", "Menon analogue over Reg_n: closed product vs unitary sum vs brute", true,
       5000, 0.0, identities::run_prop9_menon},
      {"prop10_cos2", "cos^2 sums over all/coprime/regular residues vs brute", false, 300, 1e-7,
       identities::run_prop10_cos2},
      {"prop11_tan", "tan^2 and tan^4 sums (odd n) vs brute", false, 300, 1e-7,
       identities::run_prop11_tan},
      {"prop12_product_regular", "product over Reg_n vs n^rho * prod A(d), exact", true, 300, 0.0,
       identities::run_prop12_product},
      {"prop13_gamma", "Gamma products in log space vs brute lgamma sums", false, 500, 1e-9,
       identities::run_prop13_gamma},
      {"prop14_cyclotomic", "cyclotomic reconstruction, degrees, palindromes, kappa values", true,
       2000, 0.0, identities::run_prop14_cyclotomic},
      {"formula_u", "sine product over coprime residues vs Phi_n(1)/2^phi", false, 300, 1e-9,
       identities::run_formula_u},
      {"formula_v", "cosine product over coprime residues vs Phi_n(-1)/(-4)^{phi/2}", false, 300,
       1e-9, identities::run_formula_v},
      {"prop15_modified_products", "modified sine/cosine products over regular residues", false,
       300, 1e-9, identities::run_prop15_products},
      {"cbar_exponential", "c-bar and P-bar against definitional exponential sums", false, 300,
       1e-9, identities::run_cbar_exponential},
      {"ramanujan_hoelder", "Hoelder evaluation vs divisor route and exponential sums", false,
       200, 1e-9, identities::run_ramanujan_hoelder},
      {"remark1_rho_mean", "mean value of rho: ratio to (1/2) prod (1 - 1/(p^2(p+1))) x^2", false,
       1'000'000, 0.01, identities::run_remark1_rho_mean},
      {"prop2_rho_s_mean", "mean value of rho_2: ratio to the Euler-product main term", false,
       100'000, 0.01, identities::run_prop2_rho_s_mean},
      {"prop8_preg_mean", "mean value of P-bar_{id,1}: ratio to (x^2/2) prod (1-1/p^2+1/p^3)",
       false, 1'000'000, 0.02, identities::run_prop8_preg_mean},
      {"prop16_maximal_order", "primorial trajectories, local-factor sups, zeta-ratio bounds",
       false, 100'000, 0.0, identities::run_prop16_maximal_order},
  };
  return catalog;
}

/// Look up a catalog entry by name; nullptr when absent.
inline const Identity* find_identity(const std::string& name) {
  for (const Identity& identity : identity_catalog())
    if (identity.name == name) return &identity;
  return nullptr;
}

}  // namespace regint
