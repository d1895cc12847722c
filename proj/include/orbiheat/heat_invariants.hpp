#pragma once

#include "orbiheat/rational.hpp"
#include "orbiheat/signature.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace orbiheat {

/// Exponent of t in the small-t heat-trace expansion. The underlying value is
/// twice the exponent.
enum class Degree : int { MinusOne = -2, MinusHalf = -1, Zero = 0, Half = 1, One = 2 };

inline constexpr std::array<Degree, 5> kAllDegrees{Degree::MinusOne, Degree::MinusHalf, Degree::Zero, Degree::Half,
                                                   Degree::One};

inline constexpr double exponent(Degree d) { return static_cast<int>(d) / 2.0; }

/// "-1", "-0.5", "0", "0.5", "1".
const char* to_string(Degree d);
/// Inverse of to_string; also accepts "-1/2" and "1/2". Throws std::invalid_argument.
Degree degree_from_string(const std::string& s);

/// Constant-curvature metric data on a closed 2-orbifold.
struct MetricData {
    double curvature = 0.0;     ///< sectional curvature K
    double area = 0.0;          ///< vol(O)
    double mirror_length = 0.0; ///< total length of the mirror locus
    /// Integral of scalar curvature over the mirror locus; 2*K*L when unset.
    std::optional<double> mirror_scalar_curvature_integral;

    double scalar_curvature_over_mirror() const {
        return mirror_scalar_curvature_integral.value_or(2.0 * curvature * mirror_length);
    }

    /// area = 2 pi chi / K. Throws GaussBonnetViolation when chi/K <= 0 or K = 0.
    static MetricData from_gauss_bonnet(const OrbifoldSignature& sig, double curvature, double mirror_length = 0.0);
};

class MetricError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Area, curvature and Euler characteristic violate Gauss-Bonnet.
class GaussBonnetViolation : public MetricError {
public:
    using MetricError::MetricError;
};

/// Relative tolerance of the Gauss-Bonnet area check.
inline constexpr double kGaussBonnetTolerance = 1e-12;

/// Throws GaussBonnetViolation or MetricError.
void validate_metric(const OrbifoldSignature& sig, const MetricData& metric);

/// Small-t heat trace expansion sum_d c_d t^d with the (4 pi t)^{-1} prefactor
/// folded into the coefficients.
struct HeatExpansion {
    double minus_one = 0.0;
    double minus_half = 0.0;
    Rational zero;
    double half = 0.0;
    double one = 0.0;

    double coefficient(Degree d) const;
};

/// b_0 of the rotation gamma^j at a cone point of order m: 1/(4 sin^2(j pi/m)).
double cone_b0(Order m, Order j);
/// b_1 of gamma^j at a cone point with sectional curvature K: K/(8 sin^4(j pi/m)).
double cone_b1(Order m, Order j, double curvature);
/// Leading term of a cone point's stratum integral, (m^2 - 1)/12.
Rational cone_I0(Order m);

/// chi/6 + sum (m^2-1)/(12m) + sum (n^2-1)/(24n).
Rational degree_zero_term(const OrbifoldSignature& sig);
/// 12 * degree_zero_term.
Rational spectral_c(const OrbifoldSignature& sig);

/// Curvature-weighted point contribution to the degree-1 coefficient divided by K:
/// sum (m^4+10m^2-11)/(360m) + sum (n^4+10n^2-11)/(720n). Nonnegative.
Rational point_curvature_sum(const OrbifoldSignature& sig);

double coefficient_minus_one(const MetricData& metric);
double coefficient_minus_half(const MetricData& metric);
double coefficient_half(const MetricData& metric);
/// a_2/(4 pi) + K * point_curvature_sum, with a_2 = K^2 area / 15.
double coefficient_one(const OrbifoldSignature& sig, const MetricData& metric);
/// Exact degree-1 coefficient for rational curvature K != 0 and the
/// Gauss-Bonnet area, where a_2/(4 pi) = K chi / 30.
Rational coefficient_one_exact(const OrbifoldSignature& sig, const Rational& curvature);

/// Validates the metric, then assembles all five coefficients.
HeatExpansion full_expansion(const OrbifoldSignature& sig, const MetricData& metric);

/// True iff the signature has a mirror locus, the only source of half-integer powers.
bool has_half_integer_terms(const OrbifoldSignature& sig);

}  // namespace orbiheat
