#pragma once

namespace regint {

// High-precision literals (40 digits); values from the standard expansions
// tabulated in OEIS A000796 (pi) and A001620 (Euler-Mascheroni gamma).
inline constexpr double kPi = 3.1415926535897932384626433832795028841972;
inline constexpr double kEulerGamma = 0.5772156649015328606065120900824024310422;

}  // namespace regint
