#pragma once

#include "orbiheat/heat_invariants.hpp"
#include "orbiheat/rational.hpp"
#include "orbiheat/signature.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace orbiheat::classify {

// Enumerations stop at an explicit order bound. The distinguishability
// results hold for every order, so a clean scan is a confirmation up to the
// bound, not a proof.

enum class ClassKind {
    TeardropsAndFootballs,       ///< O(m), O(r,s)
    TriangularPillows,           ///< O(p,q,r), every sign of chi
    ClassCOrientable,            ///< closed orientable, chi >= 0
    SphericalConstantCurvature,  ///< good, chi > 0, orientable or not
    NonnegativeChi,              ///< every closed 2-orbifold with chi >= 0, good or bad
};

const char* to_string(ClassKind kind);
/// "teardrops-footballs", "triangular-pillows", "class-c", "spherical", "nonnegative-chi".
ClassKind class_from_string(const std::string& name);

inline constexpr Order kDefaultBound = 500;

struct OrbifoldClass {
    ClassKind kind;
    Order bound = kDefaultBound;  ///< largest cone/corner order enumerated; >= 2
};

/// Complete, duplicate-free, sorted roster of the class up to its bound.
std::vector<OrbifoldSignature> enumerate_class(const OrbifoldClass& cls);

/// Members whose spectral invariant c equals c_value exactly.
std::vector<OrbifoldSignature> c_preimage(const OrbifoldClass& cls, const Rational& c_value);

struct Collision {
    OrbifoldSignature a;
    OrbifoldSignature b;
    Rational c;
};

/// Maximal sets (size >= 2) of members sharing one value of c.
std::vector<std::vector<OrbifoldSignature>> collision_groups(const OrbifoldClass& cls);

/// Every unordered pair of members with equal c.
std::vector<Collision> injectivity_scan(const OrbifoldClass& cls);

/// Triangular pillows with chi < 0 and orders <= bound whose c equals c_value,
/// found by matching integer part p+q+r-2 and fractional part 1/p+1/q+1/r.
std::vector<OrbifoldSignature> negative_pillows_with_c(const Rational& c_value, Order bound = kDefaultBound);

struct PillowVerdict {
    bool distinguished = true;
    /// Negative-chi pillows attaining c.
    std::vector<OrbifoldSignature> negative_pillows;
    /// Teardrops, chi >= 0 pillows, S^2, T^2 and O(2,2,2,2) attaining c.
    std::vector<OrbifoldSignature> others;
};

/// Decides whether c separates chi < 0 pillows from the chi >= 0 orientable
/// orbifolds other than footballs. Collides iff both lists are non-empty.
PillowVerdict pillow_negative_vs_rest(const Rational& c_value, Order bound = kDefaultBound);

enum class CurvatureSign { Positive, Negative };
const char* to_string(CurvatureSign s);

class AmbiguousZero : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads the sign of a constant curvature of magnitude abs_k from the heat
/// expansion: the area comes from degree -1, a_2/(4 pi) is subtracted from
/// degree 1, and the remainder's sign is the curvature sign. Without cone or
/// corner points the sign of chi is read from degree 0 instead.
CurvatureSign curvature_sign(const HeatExpansion& expansion, double abs_k, const OrbifoldSignature& sig);

class UnsupportedFamily : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Number of reflection great circles of the finite reflection-containing
/// group whose quotient of the unit sphere is sig. Supported: O(*m,m), O(m*),
/// O(*2,2,m), O(2,*m), O(*2,3,3), O(3,*2), O(*2,3,4), O(*2,3,5) and the disk
/// O(*). Throws UnsupportedFamily.
int reflection_circle_count(const OrbifoldSignature& sig);

/// Mirror-locus length on the unit sphere: 4 pi k / |G| with |G| = 2/chi.
double unit_sphere_mirror_length(const OrbifoldSignature& sig);

enum class SphericalVerdict { ByC, ByMirrorPresence, ByMirrorLength, NotDistinguished };
const char* to_string(SphericalVerdict v);

/// Both signatures must be good with chi > 0 (std::invalid_argument otherwise).
SphericalVerdict spherical_distinguish(const OrbifoldSignature& a, const OrbifoldSignature& b);

enum class ChiVerdict { SameEulerSign, ByC, ByMirrorPresence, NotDistinguished };
const char* to_string(ChiVerdict v);

/// Whether the expansion separates a chi = 0 orbifold from a chi > 0 one.
/// Both must have chi >= 0 (std::invalid_argument otherwise).
ChiVerdict positive_vs_zero_chi(const OrbifoldSignature& a, const OrbifoldSignature& b);

enum class ExpansionVerdict { ByVolume, ByMirrorLength, ByDegreeZero, ByDegreeHalf, ByDegreeOne, NotDistinguished };
const char* to_string(ExpansionVerdict v);

/// First expansion coefficient (in degree order) that differs beyond rel_tol.
ExpansionVerdict distinguish_by_expansion(const HeatExpansion& a, const HeatExpansion& b, double rel_tol = 1e-12);

}  // namespace orbiheat::classify
