#include "regint/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace regint;

TEST_CASE("catalog covers every required identity") {
  for (const char* name :
       {"regularity_characterizations", "prop1_rho_r", "prop3_general_scheme",
        "prop4_power_sums", "sum_special_cases", "prop5_partial_sums", "prop6_bernoulli_sums",
        "prop7_preg_convolution", "prop9_menon", "prop10_cos2", "prop11_tan",
        "prop12_product_regular", "prop13_gamma", "prop14_cyclotomic", "formula_u", "formula_v",
        "prop15_modified_products", "cbar_exponential", "ramanujan_hoelder", "remark1_rho_mean",
        "prop2_rho_s_mean", "prop8_preg_mean", "prop16_maximal_order"}) {
    INFO(name);
    CHECK(find_identity(name) != nullptr);
  }
  CHECK(find_identity("no_such_identity") == nullptr);
}

TEST_CASE("exactness flags") {
  CHECK(find_identity("prop4_power_sums")->exact);
  CHECK(find_identity("prop9_menon")->exact);
  CHECK_FALSE(find_identity("prop13_gamma")->exact);
  CHECK(find_identity("prop13_gamma")->default_tolerance == 1e-9);
  CHECK(find_identity("prop10_cos2")->default_tolerance == 1e-7);
}

TEST_CASE("reports are deterministic across job counts") {
  const Identity* identity = find_identity("prop4_power_sums");
  REQUIRE(identity != nullptr);
  VerificationReport a = identity->run(150, 0.0, 1);
  VerificationReport b = identity->run(150, 0.0, 3);
  CHECK(a.pass == b.pass);
  CHECK(a.checked == b.checked);
  CHECK(a.worst.n == b.worst.n);
  CHECK(a.worst.error == b.worst.error);

  const Identity* gamma = find_identity("prop13_gamma");
  VerificationReport c = gamma->run(120, 1e-9, 1);
  VerificationReport d = gamma->run(120, 1e-9, 4);
  CHECK(c.worst.n == d.worst.n);
  CHECK(c.worst.error == d.worst.error);
}

TEST_CASE("sweep reports the first failing n") {
  VerificationReport rep = detail::sweep_identity(
      "synthetic", 1, 100, 0.0, 3, [](std::uint64_t n) {
        detail::CheckOutcome out;
        if (n % 37 == 0) {
          out.ok = false;
          out.observed = "bad";
          out.expected = "good";
        }
        return out;
      });
  CHECK_FALSE(rep.pass);
  CHECK(rep.worst.n == 37);
  CHECK(rep.worst.observed == "bad");
  CHECK(rep.checked == 100);

  VerificationReport ok = detail::sweep_identity(
      "synthetic2", 5, 24, 0.5, 2, [](std::uint64_t n) {
        detail::CheckOutcome out;
        out.error = n == 17 ? 0.25 : 0.001;
        out.ok = out.error <= 0.5;
        return out;
      });
  CHECK(ok.pass);
  CHECK(ok.worst.n == 17);
  CHECK(ok.worst.error == 0.25);
  CHECK(ok.checked == 20);
}

TEST_CASE("skipped moduli are not counted") {
  const Identity* tan = find_identity("prop11_tan");
  VerificationReport rep = tan->run(100, 1e-7, 2);
  CHECK(rep.pass);
  CHECK(rep.checked == 50);  // odd n only
}

TEST_CASE("spot runs of the catalog at reduced bounds") {
  for (const char* name : {"prop3_general_scheme", "prop7_preg_convolution", "prop9_menon",
                           "sum_special_cases", "prop15_modified_products"}) {
    const Identity* identity = find_identity(name);
    REQUIRE(identity != nullptr);
    VerificationReport rep = identity->run(80, identity->default_tolerance, 2);
    INFO(name << " worst n=" << rep.worst.n << " observed=" << rep.worst.observed
              << " expected=" << rep.worst.expected);
    CHECK(rep.pass);
    CHECK(rep.checked > 0);
  }
}
