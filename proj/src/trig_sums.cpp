#include "orbiheat/trig_sums.hpp"

#include "orbiheat/compensated_sum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace orbiheat::trig {

namespace {

void require_positive(std::int64_t m) {
    if (m < 1) throw std::domain_error("cosecant sum needs m >= 1, got " + std::to_string(m));
}

}  // namespace

Rational cosecant2_sum(std::int64_t m) {
    require_positive(m);
    const Rational::Integer mm(m);
    return Rational(mm * mm - 1, 3);
}

Rational cosecant4_sum(std::int64_t m) {
    require_positive(m);
    const Rational::Integer m2 = Rational::Integer(m) * m;
    return Rational(m2 * m2 + 10 * m2 - 11, 45);
}

double cosecant_sum_numeric(std::int64_t m, int power) {
    if (power != 2 && power != 4) {
        throw std::domain_error("cosecant_sum_numeric supports powers 2 and 4, got " + std::to_string(power));
    }
    CompensatedSum acc;
    for (std::int64_t j = 1; j < m; ++j) {
        // Reflect into (0, pi/2] so the argument never sits near pi.
        const std::int64_t k = std::min(j, m - j);
        const double s = std::sin(static_cast<double>(k) * std::numbers::pi / static_cast<double>(m));
        const double inv2 = 1.0 / (s * s);
        acc.add(power == 2 ? inv2 : inv2 * inv2);
    }
    return acc.value();
}

}  // namespace orbiheat::trig
