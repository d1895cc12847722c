#include "orbiheat/conway.hpp"
#include "orbiheat/heat_invariants.hpp"
#include "orbiheat/trig_sums.hpp"
#include "riemann_oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace orbiheat;
using std::numbers::pi;

namespace {

OrbifoldSignature sig(std::string_view text) { return conway::parse(text); }
Rational q(long long a, long long b) { return Rational(a) / Rational(b); }

}  // namespace

TEST_CASE("degree names") {
    for (Degree d : kAllDegrees) CHECK(degree_from_string(to_string(d)) == d);
    CHECK(degree_from_string("-1/2") == Degree::MinusHalf);
    CHECK(degree_from_string("1/2") == Degree::Half);
    CHECK_THROWS_AS(degree_from_string("2"), std::invalid_argument);
    CHECK(exponent(Degree::MinusHalf) == -0.5);
}

TEST_CASE("isotropy contributions at a cone point") {
    CHECK(cone_b0(3, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(cone_b1(3, 1, 1.0) == doctest::Approx(2.0 / 9.0).epsilon(1e-15));
    for (Order m = 2; m <= 60; ++m) {
        double b0 = 0, b1 = 0;
        for (Order j = 1; j < m; ++j) {
            b0 += cone_b0(m, j);
            b1 += cone_b1(m, j, 1.0);
        }
        CHECK(b0 == doctest::Approx(cone_I0(m).to_double()).epsilon(1e-12));
        CHECK(cone_I0(m) == trig::cosecant2_sum(m) / 4);
        CHECK(b1 == doctest::Approx(trig::cosecant4_sum(m).to_double() / 8).epsilon(1e-12));
    }
}

TEST_CASE("degree zero constants") {
    CHECK(degree_zero_term(sig("2,3,5")) == q(271, 360));
    CHECK(degree_zero_term(sig("*2,3,4")) == q(97, 288));
    CHECK(degree_zero_term(sig("2,2,2,2")) == q(1, 2));
    CHECK(degree_zero_term(sig("2,2x")) == q(1, 4));
    CHECK(degree_zero_term(sig("torus")) == 0);
    CHECK(degree_zero_term(sig("klein")) == 0);
    CHECK(degree_zero_term(sig("")) == q(1, 3));
    CHECK(spectral_c(sig("2,3,5")) == q(271, 30));
    CHECK(spectral_c(sig("3,3,4")) == q(107, 12));
}

TEST_CASE("teardrop and football c values") {
    for (Order m = 2; m <= 200; ++m) {
        CHECK(spectral_c(OrbifoldSignature::cones({m})) == Rational(m + 2) + q(1, m));
        for (Order n = m; n <= 40; ++n) {
            CHECK(spectral_c(OrbifoldSignature::cones({m, n})) == Rational(m + n) + q(1, m) + q(1, n));
        }
    }
}

TEST_CASE("degree one, exact and floating") {
    CHECK(coefficient_one_exact(sig("2,3,5"), 1) == q(7471, 10800));
    CHECK(point_curvature_sum(sig("")) == 0);
    CHECK(point_curvature_sum(sig("*2")) == q(1, 16) * Rational(1) / 2);

    const std::vector<std::string> spherical{"", "2,2", "3,3", "2,2,7", "2,3,3", "2,3,4", "2,3,5", "*2,3,5", "3*2",
                                             "2,*5", "4x"};
    for (const auto& s : spherical) {
        const auto o = sig(s);
        const auto metric = MetricData::from_gauss_bonnet(o, 1.0);
        CAPTURE(s);
        CHECK(coefficient_one(o, metric) ==
              doctest::Approx(coefficient_one_exact(o, 1).to_double()).epsilon(1e-13));
    }
    const std::vector<std::string> hyperbolic{"oo", "2,3,7", "3,3,4", "*2,3,7", "o2", "xxx", "2,2,2,2,2"};
    for (const auto& s : hyperbolic) {
        const auto o = sig(s);
        const auto metric = MetricData::from_gauss_bonnet(o, -1.0);
        CAPTURE(s);
        CHECK(coefficient_one(o, metric) ==
              doctest::Approx(coefficient_one_exact(o, -1).to_double()).epsilon(1e-13));
    }
}

TEST_CASE("a2 integrand from numerical curvature tensors") {
    for (double K : {1.0, 0.25, -1.0, -2.5}) {
        const auto metric = oracle::constant_curvature_metric(K);
        for (auto [x, y] : {std::pair{0.1, 0.2}, std::pair{-0.3, 0.05}, std::pair{0.0, 0.0}}) {
            const auto c = oracle::curvature_scalars(metric, x, y);
            CAPTURE(K);
            CHECK(c.scalar == doctest::Approx(2 * K).epsilon(1e-6));
            const double integrand = (2 * c.riemann_sq - 2 * c.ricci_sq + 5 * c.scalar * c.scalar) / 360.0;
            CHECK(integrand == doctest::Approx(K * K / 15).epsilon(1e-5));
        }
    }
    // the smooth part of degree one is integrand * area / (4 pi)
    const auto o = sig("oo");
    const auto m = MetricData::from_gauss_bonnet(o, -1.0);
    CHECK(coefficient_one(o, m) == doctest::Approx(m.area / 15 / (4 * pi)).epsilon(1e-14));
}

TEST_CASE("mirror terms") {
    MetricData m{0.0, 0.25, 2.0, std::nullopt};
    CHECK(coefficient_minus_one(m) == doctest::Approx(1 / (16 * pi)));
    CHECK(coefficient_minus_half(m) == doctest::Approx(1 / (4 * std::sqrt(pi))));
    CHECK(coefficient_half(m) == 0.0);
    MetricData curved{1.0, 1.0, 3.0, std::nullopt};
    CHECK(curved.scalar_curvature_over_mirror() == 6.0);
    CHECK(coefficient_half(curved) == doctest::Approx(6.0 / (64 * std::sqrt(pi))));
    curved.mirror_scalar_curvature_integral = 1.0;
    CHECK(coefficient_half(curved) == doctest::Approx(1.0 / (64 * std::sqrt(pi))));
}

TEST_CASE("metric validation") {
    const auto s235 = sig("2,3,5");
    CHECK_NOTHROW(validate_metric(s235, MetricData::from_gauss_bonnet(s235, 1.0)));
    CHECK_THROWS_AS(MetricData::from_gauss_bonnet(s235, -1.0), GaussBonnetViolation);
    CHECK_THROWS_AS(MetricData::from_gauss_bonnet(sig("torus"), 1.0), GaussBonnetViolation);
    CHECK_THROWS_AS(validate_metric(s235, {1.0, 1.0, 0.0, std::nullopt}), GaussBonnetViolation);
    CHECK_THROWS_AS(validate_metric(sig("torus"), {0.0, -1.0, 0.0, std::nullopt}), MetricError);
    CHECK_THROWS_AS(validate_metric(sig("torus"), {0.0, 1.0, 1.0, std::nullopt}), MetricError);
    CHECK_THROWS_AS(validate_metric(s235, {0.0, 1.0, 0.0, std::nullopt}), GaussBonnetViolation);
    CHECK_NOTHROW(validate_metric(sig("torus"), {0.0, 3.0, 0.0, std::nullopt}));

    // perturbations above the tolerance are rejected, below it accepted
    auto m = MetricData::from_gauss_bonnet(s235, 1.0);
    m.area *= 1 + 1e-9;
    CHECK_THROWS_AS(validate_metric(s235, m), GaussBonnetViolation);
    m = MetricData::from_gauss_bonnet(s235, 1.0);
    m.area *= 1 + 1e-14;
    CHECK_NOTHROW(validate_metric(s235, m));
}

TEST_CASE("full expansion") {
    const auto o = sig("*2,3,4");
    auto m = MetricData::from_gauss_bonnet(o, 1.0, 1.0);
    const auto e = full_expansion(o, m);
    CHECK(e.minus_one == doctest::Approx(m.area / (4 * pi)));
    CHECK(e.minus_half == doctest::Approx(1.0 / (8 * std::sqrt(pi))));
    CHECK(e.zero == q(97, 288));
    CHECK(e.coefficient(Degree::One) == e.one);
    CHECK(e.coefficient(Degree::Zero) == doctest::Approx(97.0 / 288));
}

TEST_CASE("half-integer terms exactly with mirrors") {
    for (const char* s : {"*", "2*", "*2,2", "o*", "*x", "*,*"}) CHECK(has_half_integer_terms(sig(s)));
    for (const char* s : {"", "o", "xx", "2,3,5", "2x", "ooo2"}) CHECK_FALSE(has_half_integer_terms(sig(s)));
}

TEST_CASE("degree zero only depends on the singular data and chi") {
    // adding a handle lowers chi by 2 and degree zero by 1/3
    for (const char* s : {"2,3,5", "*2,2", "4,*3", "", "7"}) {
        auto o = sig(s);
        const OrbifoldSignature with_handle(o.handles() + 1, o.crosscaps(), o.cone_points(), o.mirror_boundaries());
        CHECK(degree_zero_term(o) - degree_zero_term(with_handle) == q(1, 3));
    }
}
