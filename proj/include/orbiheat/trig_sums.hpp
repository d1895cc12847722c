#pragma once

#include "orbiheat/rational.hpp"

#include <cstdint>

namespace orbiheat::trig {

/// sum_{j=1}^{m-1} 1/sin^2(j pi/m) = (m^2 - 1)/3. Throws std::domain_error for m < 1.
Rational cosecant2_sum(std::int64_t m);

/// sum_{j=1}^{m-1} 1/sin^4(j pi/m) = (m^4 + 10 m^2 - 11)/45. Throws std::domain_error for m < 1.
Rational cosecant4_sum(std::int64_t m);

/// Direct floating evaluation of sum_{j=1}^{m-1} 1/sin^power(j pi/m) with
/// compensated accumulation. power must be 2 or 4 (std::domain_error otherwise);
/// returns 0 for m <= 1.
double cosecant_sum_numeric(std::int64_t m, int power);

}  // namespace orbiheat::trig
