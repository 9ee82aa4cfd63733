#pragma once

// Exact arithmetic for the regular residues (mod n): the rho family, power
// sums, Bernoulli/Gamma/trigonometric/cyclotomic identities over Reg_n, the
// corresponding asymptotic mean values, and a verification catalog pairing
// every closed form with a definition-level oracle.

#include "regint/arithmetic.hpp"
#include "regint/asymptotics.hpp"
#include "regint/bernoulli.hpp"
#include "regint/bigint.hpp"
#include "regint/constants.hpp"
#include "regint/cyclotomic.hpp"
#include "regint/factorization.hpp"
#include "regint/io.hpp"
#include "regint/oracles.hpp"
#include "regint/polynomial.hpp"
#include "regint/products.hpp"
#include "regint/regular.hpp"
#include "regint/sieve.hpp"
#include "regint/verify.hpp"
