#include "orbiheat/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <utility>

namespace orbiheat::classify {

namespace {

using Sig = OrbifoldSignature;

Sig cones(std::vector<Order> orders) { return Sig::cones(std::move(orders)); }
Sig mirrored(std::vector<Order> cone_orders, std::vector<Order> corners) {
    return {0, 0, std::move(cone_orders), {std::move(corners)}};
}
Sig cross(std::vector<Order> cone_orders) { return {0, 1, std::move(cone_orders)}; }

const Sig kDisk = mirrored({}, {});
const Sig kProjectivePlane = cross({});

bool max_order_within(const Sig& s, Order bound) {
    for (Order m : s.cone_points()) {
        if (m > bound) return false;
    }
    for (Order n : s.corner_points()) {
        if (n > bound) return false;
    }
    return true;
}

// 1/p + 1/q + 1/r >= 1 without rationals.
bool pillow_chi_nonnegative(Order p, Order q, Order r) { return p * q + q * r + r * p >= p * q * r; }

void add_spherical_families(std::set<Sig>& out, Order bound) {
    out.insert(Sig::sphere());
    out.insert(kProjectivePlane);
    out.insert(kDisk);
    for (Order m = 2; m <= bound; ++m) {
        out.insert(cones({m, m}));
        out.insert(mirrored({}, {m, m}));
        out.insert(cross({m}));
        out.insert(mirrored({m}, {}));
        out.insert(cones({2, 2, m}));
        out.insert(mirrored({}, {2, 2, m}));
        out.insert(mirrored({2}, {m}));
    }
    const Sig exceptional[] = {cones({2, 3, 3}),       mirrored({}, {2, 3, 3}), mirrored({3}, {2}),
                               cones({2, 3, 4}),       mirrored({}, {2, 3, 4}), cones({2, 3, 5}),
                               mirrored({}, {2, 3, 5})};
    for (const Sig& s : exceptional) {
        if (max_order_within(s, bound)) out.insert(s);
    }
}

std::vector<Sig> enumerate_set(const OrbifoldClass& cls) {
    const Order b = cls.bound;
    std::set<Sig> out;
    switch (cls.kind) {
        case ClassKind::TeardropsAndFootballs:
            for (Order m = 2; m <= b; ++m) out.insert(cones({m}));
            for (Order r = 2; r <= b; ++r) {
                for (Order s = r; s <= b; ++s) out.insert(cones({r, s}));
            }
            break;
        case ClassKind::TriangularPillows:
            for (Order p = 2; p <= b; ++p) {
                for (Order q = p; q <= b; ++q) {
                    for (Order r = q; r <= b; ++r) out.insert(cones({p, q, r}));
                }
            }
            break;
        case ClassKind::ClassCOrientable:
            out.insert(Sig::sphere());
            out.insert(Sig::surface_of_genus(1));
            for (Order m = 2; m <= b; ++m) out.insert(cones({m}));
            for (Order r = 2; r <= b; ++r) {
                for (Order s = r; s <= b; ++s) out.insert(cones({r, s}));
            }
            for (Order p = 2; p <= b; ++p) {
                for (Order q = p; q <= b; ++q) {
                    for (Order r = q; r <= b; ++r) {
                        if (!pillow_chi_nonnegative(p, q, r)) break;  // chi decreases in r
                        out.insert(cones({p, q, r}));
                    }
                }
            }
            if (b >= 2) out.insert(cones({2, 2, 2, 2}));
            break;
        case ClassKind::SphericalConstantCurvature:
            add_spherical_families(out, b);
            break;
        case ClassKind::NonnegativeChi: {
            add_spherical_families(out, b);
            for (Order m = 2; m <= b; ++m) {
                out.insert(cones({m}));
                out.insert(mirrored({}, {m}));
                for (Order n = m + 1; n <= b; ++n) {
                    out.insert(cones({m, n}));
                    out.insert(mirrored({}, {m, n}));
                }
            }
            // The 17 Euclidean (wallpaper) orbifolds.
            const Sig euclidean[] = {
                Sig::surface_of_genus(1),      Sig(0, 2, {}),           Sig(0, 0, {}, {{}, {}}),
                Sig(0, 1, {}, {{}}),           cones({2, 2, 2, 2}),     mirrored({}, {2, 2, 2, 2}),
                mirrored({2}, {2, 2}),         mirrored({2, 2}, {}),    cross({2, 2}),
                cones({2, 4, 4}),              mirrored({}, {2, 4, 4}), mirrored({4}, {2}),
                cones({3, 3, 3}),              mirrored({}, {3, 3, 3}), mirrored({3}, {3}),
                cones({2, 3, 6}),              mirrored({}, {2, 3, 6})};
            for (const Sig& s : euclidean) {
                if (max_order_within(s, b)) out.insert(s);
            }
            break;
        }
    }
    return {out.begin(), out.end()};
}

std::vector<Sig> rest_of_class_c(Order bound) {
    std::vector<Sig> rest{Sig::sphere(), Sig::surface_of_genus(1), cones({2, 2, 2, 2})};
    for (Order m = 2; m <= bound; ++m) rest.push_back(cones({m}));
    for (const Sig& s : enumerate_class({ClassKind::ClassCOrientable, bound})) {
        if (s.cone_points().size() == 3) rest.push_back(s);
    }
    return rest;
}

constexpr double kPi = std::numbers::pi;

}  // namespace

const char* to_string(ClassKind kind) {
    switch (kind) {
        case ClassKind::TeardropsAndFootballs: return "teardrops-footballs";
        case ClassKind::TriangularPillows: return "triangular-pillows";
        case ClassKind::ClassCOrientable: return "class-c";
        case ClassKind::SphericalConstantCurvature: return "spherical";
        case ClassKind::NonnegativeChi: return "nonnegative-chi";
    }
    return "?";
}

ClassKind class_from_string(const std::string& name) {
    for (ClassKind k : {ClassKind::TeardropsAndFootballs, ClassKind::TriangularPillows, ClassKind::ClassCOrientable,
                        ClassKind::SphericalConstantCurvature, ClassKind::NonnegativeChi}) {
        if (name == to_string(k)) return k;
    }
    throw std::invalid_argument("unknown orbifold class '" + name + "'");
}

std::vector<OrbifoldSignature> enumerate_class(const OrbifoldClass& cls) {
    if (cls.bound < 2) throw std::invalid_argument("class bound must be >= 2");
    return enumerate_set(cls);
}

std::vector<OrbifoldSignature> c_preimage(const OrbifoldClass& cls, const Rational& c_value) {
    std::vector<OrbifoldSignature> out;
    for (const auto& s : enumerate_class(cls)) {
        if (spectral_c(s) == c_value) out.push_back(s);
    }
    return out;
}

std::vector<std::vector<OrbifoldSignature>> collision_groups(const OrbifoldClass& cls) {
    const auto roster = enumerate_class(cls);
    std::vector<Rational> cs;
    cs.reserve(roster.size());
    for (const auto& s : roster) cs.push_back(spectral_c(s));

    std::vector<std::size_t> idx(roster.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return cs[a] < cs[b]; });

    std::vector<std::vector<OrbifoldSignature>> groups;
    for (std::size_t i = 0; i < idx.size();) {
        std::size_t j = i + 1;
        while (j < idx.size() && cs[idx[j]] == cs[idx[i]]) ++j;
        if (j - i > 1) {
            std::vector<OrbifoldSignature> g;
            for (std::size_t k = i; k < j; ++k) g.push_back(roster[idx[k]]);
            std::sort(g.begin(), g.end());
            groups.push_back(std::move(g));
        }
        i = j;
    }
    return groups;
}

std::vector<Collision> injectivity_scan(const OrbifoldClass& cls) {
    std::vector<Collision> out;
    for (const auto& g : collision_groups(cls)) {
        const Rational c = spectral_c(g.front());
        for (std::size_t i = 0; i < g.size(); ++i) {
            for (std::size_t j = i + 1; j < g.size(); ++j) out.push_back({g[i], g[j], c});
        }
    }
    return out;
}

std::vector<OrbifoldSignature> negative_pillows_with_c(const Rational& c_value, Order bound) {
    std::vector<OrbifoldSignature> out;
    if (c_value.sign() <= 0) return out;
    // For chi < 0 the fractional part 1/p + 1/q + 1/r lies strictly in (0, 1).
    const Rational::Integer whole = c_value.floor();
    const Rational frac = c_value - Rational(whole);
    if (frac.sign() == 0) return out;
    if (whole + 2 > Rational::Integer(3 * bound)) return out;
    const auto total = static_cast<Order>(whole + 2);
    const Rational::Integer fnum = frac.numerator();
    const Rational::Integer fden = frac.denominator();
    for (Order p = 2; 3 * p <= total; ++p) {
        for (Order q = p; p + 2 * q <= total; ++q) {
            const Order r = total - p - q;
            if (r > bound) continue;
            if (pillow_chi_nonnegative(p, q, r)) continue;
            const Rational::Integer pairs = Rational::Integer(p) * q + Rational::Integer(q) * r + Rational::Integer(r) * p;
            const Rational::Integer triple = Rational::Integer(p) * q * r;
            if (pairs * fden == fnum * triple) out.push_back(cones({p, q, r}));
        }
    }
    return out;
}

PillowVerdict pillow_negative_vs_rest(const Rational& c_value, Order bound) {
    PillowVerdict v;
    v.negative_pillows = negative_pillows_with_c(c_value, bound);
    for (const auto& s : rest_of_class_c(bound)) {
        if (spectral_c(s) == c_value) v.others.push_back(s);
    }
    v.distinguished = v.negative_pillows.empty() || v.others.empty();
    return v;
}

const char* to_string(CurvatureSign s) { return s == CurvatureSign::Positive ? "Positive" : "Negative"; }

CurvatureSign curvature_sign(const HeatExpansion& expansion, double abs_k, const OrbifoldSignature& sig) {
    if (!(abs_k > 0.0)) throw std::invalid_argument("curvature magnitude must be positive");
    const double area = 4.0 * kPi * expansion.minus_one;
    const double a2_term = abs_k * abs_k * area / (60.0 * kPi);
    const double remainder = expansion.one - a2_term;
    const double scale = std::max({std::abs(expansion.one), std::abs(a2_term), 1e-300});
    if (sig.has_singular_points() && std::abs(remainder) > 1e-9 * scale) {
        return remainder > 0.0 ? CurvatureSign::Positive : CurvatureSign::Negative;
    }
    if (!sig.has_singular_points()) {
        // Degree 0 reduces to chi/6.
        const int s = expansion.zero.sign();
        if (s > 0) return CurvatureSign::Positive;
        if (s < 0) return CurvatureSign::Negative;
    }
    throw AmbiguousZero("curvature sign undetermined: point and Euler-characteristic tests both vanish");
}

int reflection_circle_count(const OrbifoldSignature& sig) {
    if (sig.handles() != 0 || sig.crosscaps() != 0 || sig.mirror_boundaries().size() != 1) {
        throw UnsupportedFamily("no mirror-length table entry for this signature");
    }
    const auto& cone_orders = sig.cone_points();
    const auto& corners = sig.mirror_boundaries().front();
    using V = std::vector<Order>;
    if (cone_orders.empty()) {
        if (corners.empty()) return 1;                                         // *
        if (corners.size() == 2 && corners[0] == corners[1]) return static_cast<int>(corners[0]);  // *m,m
        if (corners.size() == 3 && corners[0] == 2 && corners[1] == 2) return static_cast<int>(corners[2]) + 1;  // *2,2,m
        if (corners == V{2, 3, 3}) return 6;
        if (corners == V{2, 3, 4}) return 9;
        if (corners == V{2, 3, 5}) return 15;
    } else if (cone_orders.size() == 1) {
        if (corners.empty()) return 1;                                   // m*
        if (cone_orders[0] == 2 && corners.size() == 1) return static_cast<int>(corners[0]);  // 2*m
        if (cone_orders[0] == 3 && corners == V{2}) return 3;            // 3*2
    }
    throw UnsupportedFamily("no mirror-length table entry for this signature");
}

double unit_sphere_mirror_length(const OrbifoldSignature& sig) {
    const int k = reflection_circle_count(sig);
    const Rational chi = euler_characteristic(sig);
    if (chi.sign() <= 0) throw UnsupportedFamily("mirror-length table needs chi > 0");
    // Each circle has length 2 pi; a generic mirror point has |G|/2 preimages.
    return 2.0 * kPi * k * chi.to_double();
}

const char* to_string(SphericalVerdict v) {
    switch (v) {
        case SphericalVerdict::ByC: return "ByC";
        case SphericalVerdict::ByMirrorPresence: return "ByMirrorPresence";
        case SphericalVerdict::ByMirrorLength: return "ByMirrorLength";
        case SphericalVerdict::NotDistinguished: return "NotDistinguished";
    }
    return "?";
}

SphericalVerdict spherical_distinguish(const OrbifoldSignature& a, const OrbifoldSignature& b) {
    if (geometry_type(a) != GeometryType::Spherical || geometry_type(b) != GeometryType::Spherical) {
        throw std::invalid_argument("spherical_distinguish needs good orbifolds with chi > 0");
    }
    if (spectral_c(a) != spectral_c(b)) return SphericalVerdict::ByC;
    if (a.has_mirrors() != b.has_mirrors()) return SphericalVerdict::ByMirrorPresence;
    if (!a.has_mirrors()) return SphericalVerdict::NotDistinguished;
    const double la = unit_sphere_mirror_length(a);
    const double lb = unit_sphere_mirror_length(b);
    if (std::abs(la - lb) > 1e-12 * std::max(la, lb)) return SphericalVerdict::ByMirrorLength;
    return SphericalVerdict::NotDistinguished;
}

const char* to_string(ChiVerdict v) {
    switch (v) {
        case ChiVerdict::SameEulerSign: return "SameEulerSign";
        case ChiVerdict::ByC: return "ByC";
        case ChiVerdict::ByMirrorPresence: return "ByMirrorPresence";
        case ChiVerdict::NotDistinguished: return "NotDistinguished";
    }
    return "?";
}

ChiVerdict positive_vs_zero_chi(const OrbifoldSignature& a, const OrbifoldSignature& b) {
    const int sa = euler_characteristic(a).sign();
    const int sb = euler_characteristic(b).sign();
    if (sa < 0 || sb < 0) throw std::invalid_argument("positive_vs_zero_chi needs chi >= 0");
    if (sa == sb) return ChiVerdict::SameEulerSign;
    if (spectral_c(a) != spectral_c(b)) return ChiVerdict::ByC;
    if (a.has_mirrors() != b.has_mirrors()) return ChiVerdict::ByMirrorPresence;
    return ChiVerdict::NotDistinguished;
}

const char* to_string(ExpansionVerdict v) {
    switch (v) {
        case ExpansionVerdict::ByVolume: return "ByVolume";
        case ExpansionVerdict::ByMirrorLength: return "ByMirrorLength";
        case ExpansionVerdict::ByDegreeZero: return "ByDegreeZero";
        case ExpansionVerdict::ByDegreeHalf: return "ByDegreeHalf";
        case ExpansionVerdict::ByDegreeOne: return "ByDegreeOne";
        case ExpansionVerdict::NotDistinguished: return "NotDistinguished";
    }
    return "?";
}

ExpansionVerdict distinguish_by_expansion(const HeatExpansion& a, const HeatExpansion& b, double rel_tol) {
    auto differ = [rel_tol](double x, double y) {
        return std::abs(x - y) > rel_tol * std::max({std::abs(x), std::abs(y), 1e-300});
    };
    if (differ(a.minus_one, b.minus_one)) return ExpansionVerdict::ByVolume;
    if (differ(a.minus_half, b.minus_half)) return ExpansionVerdict::ByMirrorLength;
    if (a.zero != b.zero) return ExpansionVerdict::ByDegreeZero;
    if (differ(a.half, b.half)) return ExpansionVerdict::ByDegreeHalf;
    if (differ(a.one, b.one)) return ExpansionVerdict::ByDegreeOne;
    return ExpansionVerdict::NotDistinguished;
}

}  // namespace orbiheat::classify
