// Integration tests for the command-line tool: output formats, round-trips,
// and the exit-code contract.

#include "regint/io.hpp"
#include "regint/products.hpp"
#include "regint/regular.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CommandResult {
  int exit_code;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  std::string command = std::string(REGINT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  while (std::size_t got = std::fread(buffer.data(), 1, buffer.size(), pipe))
    output.append(buffer.data(), got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

}  // namespace

TEST_CASE("tabulate csv") {
  CommandResult r = run_cli("tabulate rho --from 1 --to 12");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find('\r') == std::string::npos);  // LF endings
  auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 13);
  CHECK(lines[0] == "n,value");
  CHECK(lines[12] == "12,9");

  CHECK(run_cli("tabulate menon_reg --from 4 --to 4").output.find("4,7") != std::string::npos);
  CHECK(run_cli("tabulate U_star --from 4 --to 4").output.find("4,0.5") != std::string::npos);
  CHECK(run_cli("tabulate rho_s --param s=-1 --from 4 --to 4").output.find("4,3/4") !=
        std::string::npos);
  CHECK(run_cli("tabulate ptilde --from 12 --to 12").output.find("12,30") != std::string::npos);
}

TEST_CASE("tabulate json round-trips exactly") {
  CommandResult r = run_cli("tabulate rho_s --param s=-1 --from 1 --to 24 --format json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.output);
  CHECK(doc["function"] == "rho_s");
  CHECK(doc["params"]["s"] == "-1");
  auto rows = doc["rows"];
  REQUIRE(rows.size() == 24);
  std::uint64_t prev = 0;
  for (const auto& row : rows) {
    std::uint64_t n = row[0].get<std::uint64_t>();
    CHECK(n == prev + 1);  // ascending in n
    prev = n;
    regint::BigRat reparsed = regint::parse_rational(row[1].get<std::string>());
    CHECK(reparsed == regint::rho_s(-1, n));
  }
}

TEST_CASE("poly output") {
  CHECK(run_cli("poly 12").output == "x^9 - x^6 + x^3 - 1\n");
  CHECK(run_cli("poly 12 --star").output == "x^8 + x^7 + x^6 + x^2 + x + 1\n");
  CHECK(run_cli("poly 30").output == "x^30 - 1\n");

  CommandResult json_out = run_cli("poly 12 --star --format json");
  nlohmann::json doc = nlohmann::json::parse(json_out.output);
  CHECK(doc["text"] == "x^8 + x^7 + x^6 + x^2 + x + 1");
  std::vector<std::string> coeffs = doc["coefficients"];
  std::vector<std::string> expected{"1", "1", "1", "0", "0", "0", "1", "1", "1"};
  CHECK(coeffs == expected);

  CommandResult csv_out = run_cli("poly 4 --format csv");
  CHECK(csv_out.output == "degree,coefficient\n0,-1\n1,1\n2,-1\n3,1\n");

  CHECK(run_cli("poly 20000").exit_code == 2);  // capacity
}

TEST_CASE("verify command") {
  CommandResult pass = run_cli("verify prop9_menon --max-n 300");
  CHECK(pass.exit_code == 0);
  CHECK(pass.output.find("PASS prop9_menon") != std::string::npos);

  CommandResult json_run = run_cli("verify prop1_rho_r --max-n 40 --format json");
  CHECK(json_run.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(json_run.output);
  REQUIRE(doc.is_array());
  CHECK(doc[0]["identity"] == "prop1_rho_r");
  CHECK(doc[0]["pass"] == true);
  CHECK(doc[0]["checked"] == 40);

  // an unachievable tolerance on a float identity is a verification FAILURE
  CommandResult fail = run_cli("verify prop13_gamma --max-n 50 --tolerance 1e-30");
  CHECK(fail.exit_code == 1);
  CHECK(fail.output.find("FAIL prop13_gamma") != std::string::npos);

  // preconditions are a distinct exit code
  CHECK(run_cli("verify prop4_power_sums --max-n 50 --tolerance 1e-9").exit_code == 2);
  CHECK(run_cli("verify no_such_identity").exit_code == 2);
  CHECK(run_cli("tabulate no_such_function --to 5").exit_code == 2);
  CHECK(run_cli("tabulate rho --from 9 --to 5").exit_code == 2);
}

TEST_CASE("constants") {
  CommandResult zr = run_cli("constant zeta_ratio --s 2 --format json");
  REQUIRE(zr.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(zr.output);
  CHECK(doc["value"].get<double>() == Catch::Approx(1.51981775).margin(1e-6));

  CommandResult rm = run_cli("constant rho_mean --prime-bound 100000 --format json");
  nlohmann::json rho_mean = nlohmann::json::parse(rm.output);
  CHECK(rho_mean["value"].get<double>() == Catch::Approx(0.440757).margin(1e-4));
  CHECK(rho_mean["tail_bound"].get<double>() > 0.0);
  CHECK(rho_mean["prime_bound"] == 100000);

  CommandResult ls = run_cli("constant limsup_rho_sigma");
  CHECK(ls.output.find("1.08276219") != std::string::npos);

  CommandResult pm = run_cli("constant preg_mean --prime-bound 200000 --format json");
  nlohmann::json preg = nlohmann::json::parse(pm.output);
  CHECK(preg["value"].get<double>() == Catch::Approx(0.3742676).margin(1e-5));
  CHECK(preg["product"].get<double>() == Catch::Approx(0.7485353).margin(2e-5));

  CHECK(run_cli("constant nonsense").exit_code == 2);
  CHECK(run_cli("constant rho_mean --prime-bound 200000000").exit_code == 2);
}

TEST_CASE("parity violations surface as precondition errors") {
  CHECK(run_cli("tabulate V_star --from 8 --to 8").exit_code == 2);
}
