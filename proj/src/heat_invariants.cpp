#include "orbiheat/heat_invariants.hpp"

#include "orbiheat/trig_sums.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace orbiheat {

namespace {

constexpr double kPi = std::numbers::pi;

void require_rotation(Order m, Order j) {
    if (m < 2 || j < 1 || j > m - 1) {
        std::ostringstream msg;
        msg << "rotation index out of range: m = " << m << ", j = " << j;
        throw std::domain_error(msg.str());
    }
}

double sin_of_fraction(Order j, Order m) {
    return std::sin(static_cast<double>(std::min(j, m - j)) * kPi / static_cast<double>(m));
}

}  // namespace

const char* to_string(Degree d) {
    switch (d) {
        case Degree::MinusOne: return "-1";
        case Degree::MinusHalf: return "-0.5";
        case Degree::Zero: return "0";
        case Degree::Half: return "0.5";
        case Degree::One: return "1";
    }
    return "?";
}

Degree degree_from_string(const std::string& s) {
    if (s == "-1") return Degree::MinusOne;
    if (s == "-0.5" || s == "-1/2") return Degree::MinusHalf;
    if (s == "0") return Degree::Zero;
    if (s == "0.5" || s == "1/2") return Degree::Half;
    if (s == "1") return Degree::One;
    throw std::invalid_argument("unknown expansion degree '" + s + "'");
}

MetricData MetricData::from_gauss_bonnet(const OrbifoldSignature& sig, double curvature, double mirror_length) {
    const double chi = euler_characteristic(sig).to_double();
    if (curvature == 0.0 || chi / curvature <= 0.0) {
        std::ostringstream msg;
        msg << "no constant-curvature area: chi = " << euler_characteristic(sig) << ", K = " << curvature;
        throw GaussBonnetViolation(msg.str());
    }
    MetricData m;
    m.curvature = curvature;
    m.area = 2.0 * kPi * chi / curvature;
    m.mirror_length = mirror_length;
    return m;
}

void validate_metric(const OrbifoldSignature& sig, const MetricData& metric) {
    if (!(metric.area > 0.0) || !std::isfinite(metric.area)) {
        throw MetricError("area must be positive and finite");
    }
    if (!(metric.mirror_length >= 0.0) || !std::isfinite(metric.mirror_length)) {
        throw MetricError("mirror length must be non-negative and finite");
    }
    if (!sig.has_mirrors() && metric.mirror_length != 0.0) {
        throw MetricError("mirror length must be 0 for a signature without mirror boundaries");
    }
    const Rational chi = euler_characteristic(sig);
    if (metric.curvature == 0.0) {
        if (chi.sign() != 0) {
            throw GaussBonnetViolation("flat metric requires chi = 0, got chi = " + chi.str());
        }
        return;
    }
    const double expected = 2.0 * kPi * chi.to_double() / metric.curvature;
    if (!(std::abs(metric.area - expected) <= kGaussBonnetTolerance * std::abs(expected))) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "area " << metric.area << " differs from 2 pi chi / K = " << expected << " (chi = " << chi
            << ", K = " << metric.curvature << ")";
        throw GaussBonnetViolation(msg.str());
    }
}

double HeatExpansion::coefficient(Degree d) const {
    switch (d) {
        case Degree::MinusOne: return minus_one;
        case Degree::MinusHalf: return minus_half;
        case Degree::Zero: return zero.to_double();
        case Degree::Half: return half;
        case Degree::One: return one;
    }
    return 0.0;
}

double cone_b0(Order m, Order j) {
    require_rotation(m, j);
    const double s = sin_of_fraction(j, m);
    return 1.0 / (4.0 * s * s);
}

double cone_b1(Order m, Order j, double curvature) {
    require_rotation(m, j);
    const double s2 = sin_of_fraction(j, m) * sin_of_fraction(j, m);
    return curvature / (8.0 * s2 * s2);
}

Rational cone_I0(Order m) {
    // sum_j b_0(gamma^j) = (1/4) sum_j csc^2(j pi/m)
    return trig::cosecant2_sum(m) / 4;
}

Rational degree_zero_term(const OrbifoldSignature& sig) {
    Rational term = euler_characteristic(sig) / 6;
    for (Order m : sig.cone_points()) term += cone_I0(m) / Rational(m);
    for (Order n : sig.corner_points()) term += cone_I0(n) / Rational(2 * n);
    return term;
}

Rational spectral_c(const OrbifoldSignature& sig) { return 12 * degree_zero_term(sig); }

Rational point_curvature_sum(const OrbifoldSignature& sig) {
    // (1/|Iso|) * sum_j 1/(8 sin^4) with |Iso| = m at cones, 2n at corners.
    Rational sum;
    for (Order m : sig.cone_points()) sum += trig::cosecant4_sum(m) / Rational(8 * m);
    for (Order n : sig.corner_points()) sum += trig::cosecant4_sum(n) / Rational(16 * n);
    return sum;
}

double coefficient_minus_one(const MetricData& metric) { return metric.area / (4.0 * kPi); }

double coefficient_minus_half(const MetricData& metric) {
    return metric.mirror_length / (8.0 * std::sqrt(kPi));
}

double coefficient_half(const MetricData& metric) {
    return metric.scalar_curvature_over_mirror() / (64.0 * std::sqrt(kPi));
}

double coefficient_one(const OrbifoldSignature& sig, const MetricData& metric) {
    const double k = metric.curvature;
    const double a2 = k * k * metric.area / 15.0;
    return a2 / (4.0 * kPi) + k * point_curvature_sum(sig).to_double();
}

Rational coefficient_one_exact(const OrbifoldSignature& sig, const Rational& curvature) {
    return curvature * euler_characteristic(sig) / 30 + curvature * point_curvature_sum(sig);
}

HeatExpansion full_expansion(const OrbifoldSignature& sig, const MetricData& metric) {
    validate_metric(sig, metric);
    HeatExpansion e;
    e.minus_one = coefficient_minus_one(metric);
    e.minus_half = coefficient_minus_half(metric);
    e.zero = degree_zero_term(sig);
    e.half = coefficient_half(metric);
    e.one = coefficient_one(sig, metric);
    return e;
}

bool has_half_integer_terms(const OrbifoldSignature& sig) { return sig.has_mirrors(); }

}  // namespace orbiheat
