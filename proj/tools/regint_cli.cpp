// Command-line front end: tabulation of the regular-residue functions,
// identity verification against definition-level oracles, Euler-product
// constants, and cyclotomic polynomial output.
//
// Exit codes: 0 success, 1 verification failure, 2 precondition/usage
// violation (unknown name, capacity, parity, tolerance on an exact identity),
// 3 internal consistency failure.

#include "regint/regint.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using json = nlohmann::json;
using namespace regint;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitInternal = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::map<std::string, std::string> parse_params(const std::vector<std::string>& kvs) {
  std::map<std::string, std::string> out;
  for (const std::string& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw UsageError("malformed --param '" + kv + "' (expected key=value)");
    out[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return out;
}

std::int64_t param_int(const std::map<std::string, std::string>& params, const std::string& key,
                       std::int64_t fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  try {
    return std::stoll(it->second);
  } catch (const std::exception&) {
    throw UsageError("parameter '" + key + "' is not an integer: " + it->second);
  }
}

/// A tabulated value: exact values keep their decimal/rational string, floats
/// are rounded to 12 significant digits.
struct CellValue {
  bool is_float = false;
  std::string exact;
  double real = 0.0;

  static CellValue from_exact(std::string text) { return {false, std::move(text), 0.0}; }
  static CellValue from_real(double v) {
    CellValue out;
    out.is_float = true;
    out.exact = value_string(v);
    out.real = std::stod(out.exact);  // 12-digit rounded
    return out;
  }

  json to_json() const {
    if (is_float) return json(real);
    return json(exact);
  }
};

struct TabulatedFunction {
  std::string name;
  std::string description;
  std::function<CellValue(std::uint64_t n, const std::map<std::string, std::string>&)> eval;
};

const std::vector<TabulatedFunction>& tabulation_registry() {
  static const std::vector<TabulatedFunction> registry = {
      {"rho", "number of regular residues (mod n)",
       [](std::uint64_t n, const auto&) { return CellValue::from_exact(std::to_string(rho(n))); }},
      {"rho_r", "count of r-tuples with regular gcd (param r, default 2)",
       [](std::uint64_t n, const auto& p) {
         auto r = param_int(p, "r", 2);
         if (r < 1) throw UsageError("rho_r: r must be >= 1");
         return CellValue::from_exact(rho_r(static_cast<std::uint32_t>(r), n).str());
       }},
      {"rho_s", "generalized rho, exact rational (param s, default -1)",
       [](std::uint64_t n, const auto& p) {
         return CellValue::from_exact(value_string(rho_s(param_int(p, "s", -1), n)));
       }},
      {"mu_bar", "indicator of squarefull n",
       [](std::uint64_t n, const auto&) { return CellValue::from_exact(std::to_string(mu_bar(n))); }},
      {"c_bar", "regular Ramanujan-sum analogue (param t, default 1)",
       [](std::uint64_t n, const auto& p) {
         return CellValue::from_exact(std::to_string(c_bar(n, param_int(p, "t", 1))));
       }},
      {"ptilde", "gcd-sum over regular residues",
       [](std::uint64_t n, const auto&) {
         return CellValue::from_exact(std::to_string(gcd_sum_regular(n)));
       }},
      {"preg_id1", "sum of d mu(n/d) over unitary divisors",
       [](std::uint64_t n, const auto&) {
         return CellValue::from_exact(std::to_string(p_reg_id1(n)));
       }},
      {"preg", "P-bar_{f,t} with f in {one,id,power:k} (params f, t)",
       [](std::uint64_t n, const auto& p) {
         std::string fname = p.count("f") ? p.at("f") : "id";
         MultiplicativeFn f = fname == "one"  ? mult_one()
                              : fname == "id" ? mult_id()
                              : [&] {
                                  if (fname.rfind("power:", 0) != 0)
                                    throw UsageError("preg: f must be one, id, or power:k");
                                  return mult_power(static_cast<std::uint32_t>(
                                      std::stoul(fname.substr(6))));
                                }();
         return CellValue::from_exact(p_reg(f, param_int(p, "t", 1), n).str());
       }},
      {"menon_reg", "Menon analogue over regular residues",
       [](std::uint64_t n, const auto&) {
         return CellValue::from_exact(std::to_string(menon_regular(n)));
       }},
      {"menon_coprime", "a-twisted Menon sum over coprime residues (param a, default 1)",
       [](std::uint64_t n, const auto& p) {
         auto a = param_int(p, "a", 1);
         if (a < 1) throw UsageError("menon_coprime: a must be >= 1");
         return CellValue::from_exact(
             std::to_string(menon_coprime(static_cast<std::uint64_t>(a), n)));
       }},
      {"S_reg", "power sum over regular residues (param r, default 1)",
       [](std::uint64_t n, const auto& p) {
         auto r = param_int(p, "r", 1);
         if (r < 1) throw UsageError("S_reg: r must be >= 1");
         return CellValue::from_exact(power_sum_regular(static_cast<std::uint32_t>(r), n).str());
       }},
      {"S_all", "power sum over [1, n] (param r, default 1)",
       [](std::uint64_t n, const auto& p) {
         auto r = param_int(p, "r", 1);
         if (r < 1) throw UsageError("S_all: r must be >= 1");
         return CellValue::from_exact(power_sum_all(static_cast<std::uint32_t>(r), n).str());
       }},
      {"S_coprime", "power sum over coprime residues (param r, default 1)",
       [](std::uint64_t n, const auto& p) {
         auto r = param_int(p, "r", 1);
         if (r < 1) throw UsageError("S_coprime: r must be >= 1");
         return CellValue::from_exact(power_sum_coprime(static_cast<std::uint32_t>(r), n).str());
       }},
      {"T_reg", "Bernoulli-polynomial sum over regular residues (param m, default 2)",
       [](std::uint64_t n, const auto& p) {
         auto m = param_int(p, "m", 2);
         if (m < 2) throw UsageError("T_reg: m must be >= 2");
         return CellValue::from_exact(
             value_string(bernoulli_sum_regular(static_cast<std::uint32_t>(m), n)));
       }},
      {"Q_reg", "product of the regular residues",
       [](std::uint64_t n, const auto&) { return CellValue::from_exact(product_regular(n).str()); }},
      {"Q_coprime", "product of the coprime residues",
       [](std::uint64_t n, const auto&) { return CellValue::from_exact(product_coprime(n).str()); }},
      {"A_core", "Moebius factorial core A(n), exact rational",
       [](std::uint64_t n, const auto&) {
         return CellValue::from_exact(value_string(factorial_core(n)));
       }},
      {"R_reg", "Gamma product over regular residues",
       [](std::uint64_t n, const auto&) {
         return CellValue::from_real(gamma_product_regular(n).value());
       }},
      {"R_reg_log", "log of the Gamma product over regular residues",
       [](std::uint64_t n, const auto&) {
         return CellValue::from_real(gamma_product_regular(n).log_abs);
       }},
      {"U_star", "modified sine product over regular residues",
       [](std::uint64_t n, const auto&) {
         return CellValue::from_real(
             trig_product(TrigProductKind::Sin, TrigProductDomain::RegularMod, n));
       }},
      {"V_star", "modified cosine product over regular residues (odd n)",
       [](std::uint64_t n, const auto&) {
         return CellValue::from_real(
             trig_product(TrigProductKind::Cos, TrigProductDomain::RegularMod, n));
       }},
      {"phi_reg_poly", "phi_regular as sparse text (param star=1 for the starred form)",
       [](std::uint64_t n, const auto& p) {
         bool star = param_int(p, "star", 0) != 0;
         return CellValue::from_exact((star ? phi_regular_star(n) : phi_regular(n)).to_text());
       }},
      {"euler_phi", "Euler totient",
       [](std::uint64_t n, const auto&) {
         return CellValue::from_exact(std::to_string(euler_phi(n)));
       }},
      {"jordan_s", "generalized Jordan totient, exact rational (param s, default 2)",
       [](std::uint64_t n, const auto& p) {
         return CellValue::from_exact(value_string(jordan_phi(param_int(p, "s", 2), n)));
       }},
      {"sigma_s", "divisor power sum (param s, default 1)",
       [](std::uint64_t n, const auto& p) {
         auto s = param_int(p, "s", 1);
         if (s < 1) throw UsageError("sigma_s: s must be >= 1");
         return CellValue::from_exact(sigma_s(n, static_cast<std::uint32_t>(s)).str());
       }},
      {"ramanujan", "classical Ramanujan sum (param t, default 1)",
       [](std::uint64_t n, const auto& p) {
         return CellValue::from_exact(std::to_string(ramanujan_sum(n, param_int(p, "t", 1))));
       }},
  };
  return registry;
}

void emit_rows(const std::string& function, const std::map<std::string, std::string>& params,
               const std::vector<std::pair<std::uint64_t, CellValue>>& rows,
               const std::string& format) {
  if (format == "json") {
    json out;
    out["function"] = function;
    out["params"] = json::object();
    for (const auto& [k, v] : params) out["params"][k] = v;
    out["rows"] = json::array();
    for (const auto& [n, cell] : rows) out["rows"].push_back(json::array({n, cell.to_json()}));
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "n,value\n";
    for (const auto& [n, cell] : rows) std::cout << n << "," << cell.exact << "\n";
  }
}

int cmd_tabulate(const std::string& function, std::uint64_t from, std::uint64_t to,
                 const std::vector<std::string>& param_kvs, const std::string& format) {
  if (from == 0 || from > to) throw UsageError("tabulate: need 1 <= from <= to");
  const TabulatedFunction* fn = nullptr;
  for (const auto& candidate : tabulation_registry())
    if (candidate.name == function) fn = &candidate;
  if (fn == nullptr) throw UsageError("tabulate: unknown function '" + function + "'");
  auto params = parse_params(param_kvs);
  std::vector<std::pair<std::uint64_t, CellValue>> rows;
  rows.reserve(to - from + 1);
  for (std::uint64_t n = from; n <= to; ++n) rows.emplace_back(n, fn->eval(n, params));
  emit_rows(function, params, rows, format);
  return kExitOk;
}

json report_to_json(const VerificationReport& report) {
  json j;
  j["identity"] = report.identity;
  j["from"] = report.from;
  j["to"] = report.to;
  j["tolerance"] = report.tolerance;
  j["pass"] = report.pass;
  j["checked"] = report.checked;
  j["worst"] = {{"n", report.worst.n},
                {"observed", report.worst.observed},
                {"expected", report.worst.expected},
                {"error", report.worst.error}};
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

void print_report(const VerificationReport& report) {
  std::printf("%s %s range=[%llu,%llu] checked=%llu tolerance=%g worst: n=%llu error=%.3g\n",
              report.pass ? "PASS" : "FAIL", report.identity.c_str(),
              static_cast<unsigned long long>(report.from),
              static_cast<unsigned long long>(report.to),
              static_cast<unsigned long long>(report.checked), report.tolerance,
              static_cast<unsigned long long>(report.worst.n), report.worst.error);
  if (!report.pass)
    std::printf("     observed %s, expected %s\n", report.worst.observed.c_str(),
                report.worst.expected.c_str());
}

int cmd_verify(const std::string& name, bool all, std::optional<std::uint64_t> max_n,
               std::optional<double> tolerance, unsigned jobs, const std::string& format) {
  std::vector<const Identity*> selected;
  if (all) {
    for (const Identity& identity : identity_catalog()) selected.push_back(&identity);
  } else {
    const Identity* identity = find_identity(name);
    if (identity == nullptr) throw UsageError("verify: unknown identity '" + name + "'");
    selected.push_back(identity);
  }
  if (tolerance) {
    if (all) throw UsageError("verify: --tolerance cannot be combined with --all");
    if (selected[0]->exact)
      throw UsageError("verify: '" + selected[0]->name +
                       "' is an exact identity and admits no tolerance");
    if (*tolerance <= 0) throw UsageError("verify: tolerance must be positive");
  }
  bool all_pass = true;
  json reports = json::array();
  for (const Identity* identity : selected) {
    VerificationReport report =
        identity->run(max_n.value_or(identity->default_max_n),
                      tolerance.value_or(identity->default_tolerance), jobs);
    all_pass = all_pass && report.pass;
    if (format == "json")
      reports.push_back(report_to_json(report));
    else
      print_report(report);
  }
  if (format == "json") std::cout << reports.dump() << "\n";
  return all_pass ? kExitOk : kExitVerifyFailed;
}

int cmd_constant(const std::string& name, std::uint64_t prime_bound, std::int64_t s,
                 const std::string& format) {
  if (prime_bound > kPrimeBoundCap) throw CapacityError("constant: prime bound exceeds capacity");
  std::string description;
  double value = 0.0;
  std::optional<double> product;
  std::optional<double> tail_bound;
  if (name == "rho_mean") {
    EulerProductResult ep = euler_product(
        [](std::uint64_t p) {
          double pd = static_cast<double>(p);
          return 1.0 - 1.0 / (pd * pd * (pd + 1.0));
        },
        prime_bound, 3.0);
    value = ep.value / 2.0;
    product = ep.value;
    tail_bound = ep.tail_bound;
    description = "mean-value coefficient of rho: (1/2) prod (1 - 1/(p^2(p+1)))";
  } else if (name == "rho_s_mean") {
    if (s < 2) throw UsageError("constant: rho_s_mean needs s >= 2");
    const double sd = static_cast<double>(s);
    EulerProductResult ep = euler_product(
        [sd](std::uint64_t p) {
          double pd = static_cast<double>(p);
          double ps1 = std::pow(pd, sd + 1.0);
          return 1.0 - 1.0 / ps1 + (pd - 1.0) / (pd * (ps1 - 1.0));
        },
        prime_bound, sd + 1.0, 3.0);
    value = ep.value / (sd + 1.0);
    product = ep.value;
    tail_bound = ep.tail_bound;
    description = "mean-value coefficient of rho_s: prod(...) / (s+1)";
  } else if (name == "preg_mean") {
    EulerProductResult ep = euler_product(
        [](std::uint64_t p) {
          double pd = static_cast<double>(p);
          return 1.0 - 1.0 / (pd * pd) + 1.0 / (pd * pd * pd);
        },
        prime_bound, 2.0);
    value = ep.value / 2.0;
    product = ep.value;
    tail_bound = ep.tail_bound;
    description = "mean-value coefficient of P-bar_{id,1}: (1/2) prod (1 - 1/p^2 + 1/p^3)";
  } else if (name == "limsup_rho_sigma") {
    value = limsup_rho_sigma_constant();
    description = "limsup of rho(n) sigma(n) / (n^2 log log n): 6 e^gamma / pi^2";
  } else if (name == "zeta_ratio") {
    if (s < 2) throw UsageError("constant: zeta_ratio needs s >= 2");
    value = zeta_ratio(static_cast<double>(s));
    description = "zeta(s) / zeta(2s)";
  } else {
    throw UsageError("constant: unknown name '" + name + "'");
  }
  if (format == "json") {
    json j;
    j["name"] = name;
    j["description"] = description;
    j["value"] = std::stod(value_string(value));
    if (product) j["product"] = std::stod(value_string(*product));
    if (tail_bound) {
      j["tail_bound"] = *tail_bound;
      j["prime_bound"] = prime_bound;
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "name,value,product,tail_bound,prime_bound\n";
    std::cout << name << "," << value_string(value) << ","
              << (product ? value_string(*product) : "") << ","
              << (tail_bound ? value_string(*tail_bound) : "") << ","
              << (tail_bound ? std::to_string(prime_bound) : "") << "\n";
  }
  return kExitOk;
}

int cmd_poly(std::uint64_t n, bool star, const std::string& format) {
  IntPolynomial poly = star ? phi_regular_star(n) : phi_regular(n);
  if (format == "json") {
    json j;
    j["function"] = star ? "phi_regular_star" : "phi_regular";
    j["params"] = {{"n", n}};
    j["text"] = poly.to_text();
    j["coefficients"] = json::array();
    for (const BigInt& c : poly.coefficients()) j["coefficients"].push_back(c.str());
    std::cout << j.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "degree,coefficient\n";
    for (std::size_t i = 0; i < poly.coefficients().size(); ++i)
      std::cout << i << "," << poly.coefficients()[i].str() << "\n";
  } else {
    std::cout << poly.to_text() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic and verified identities for regular integers (mod n)"};
  app.require_subcommand(1);

  auto* tabulate = app.add_subcommand("tabulate", "Tabulate a function over a range of n");
  std::string tab_function;
  std::uint64_t tab_from = 1, tab_to = 1;
  std::vector<std::string> tab_params;
  std::string tab_format = "csv";
  tabulate->add_option("function", tab_function, "Function name (see --list)")->required();
  tabulate->add_option("--from", tab_from, "First n (default 1)");
  tabulate->add_option("--to", tab_to, "Last n")->required();
  tabulate->add_option("--param", tab_params, "Function parameter key=value (repeatable)");
  tabulate->add_option("--format", tab_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* tab_list = app.add_subcommand("functions", "List tabulatable functions");

  auto* verify = app.add_subcommand("verify", "Verify an identity against its oracle");
  std::string verify_name;
  bool verify_all = false;
  std::optional<std::uint64_t> verify_max_n;
  std::optional<double> verify_tolerance;
  unsigned verify_jobs = 0;
  std::string verify_format = "text";
  verify->add_option("identity", verify_name, "Identity name (see `verify --list`)");
  verify->add_flag("--all", verify_all, "Run the whole catalog at default bounds");
  bool verify_list = false;
  verify->add_flag("--list", verify_list, "List catalog identities");
  verify->add_option("--max-n", verify_max_n, "Upper end of the sweep range");
  verify->add_option("--tolerance", verify_tolerance,
                     "Tolerance override (float identities only)");
  verify->add_option("--jobs", verify_jobs, "Worker threads (default: hardware)");
  verify->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* constant = app.add_subcommand("constant", "Euler-product and closed constants");
  std::string const_name;
  std::uint64_t const_prime_bound = 1'000'000;
  std::int64_t const_s = 2;
  std::string const_format = "csv";
  constant->add_option("name", const_name,
                       "rho_mean | rho_s_mean | preg_mean | limsup_rho_sigma | zeta_ratio")
      ->required();
  constant->add_option("--prime-bound", const_prime_bound, "Euler product truncation");
  constant->add_option("--s", const_s, "Exponent for rho_s_mean / zeta_ratio");
  constant->add_option("--format", const_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* poly = app.add_subcommand("poly", "Print phi_regular / phi_regular_star polynomials");
  std::uint64_t poly_n = 1;
  bool poly_star = false;
  std::string poly_format = "text";
  poly->add_option("n", poly_n, "Modulus")->required();
  poly->add_flag("--star", poly_star, "The starred polynomial (root at 1 removed)");
  poly->add_option("--format", poly_format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitPrecondition;
  }

  try {
    if (tabulate->parsed())
      return cmd_tabulate(tab_function, tab_from, tab_to, tab_params, tab_format);
    if (tab_list->parsed()) {
      for (const auto& fn : tabulation_registry())
        std::printf("%-14s %s\n", fn.name.c_str(), fn.description.c_str());
      return kExitOk;
    }
    if (verify->parsed()) {
      if (verify_list) {
        for (const Identity& identity : identity_catalog())
          std::printf("%-30s %s default_max_n=%llu %s\n", identity.name.c_str(),
                      identity.exact ? "exact" : "float ",
                      static_cast<unsigned long long>(identity.default_max_n),
                      identity.summary.c_str());
        return kExitOk;
      }
      if (!verify_all && verify_name.empty())
        throw UsageError("verify: name an identity or pass --all");
      return cmd_verify(verify_name, verify_all, verify_max_n, verify_tolerance, verify_jobs,
                        verify_format);
    }
    if (constant->parsed()) return cmd_constant(const_name, const_prime_bound, const_s, const_format);
    if (poly->parsed()) return cmd_poly(poly_n, poly_star, poly_format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::logic_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
