#pragma once

#include "orbiheat/rational.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace orbiheat {

/// Order of a cone point or corner reflector. Always >= 2.
using Order = std::int64_t;

/// Topological type of a closed 2-orbifold: a base surface (handles or
/// crosscaps), cone points in the interior, and mirror boundary components
/// each carrying zero or more corner reflectors.
///
/// Instances are always canonical:
///  - cone orders sorted ascending;
///  - each boundary's corner orders sorted ascending, boundaries sorted
///    lexicographically;
///  - handles and crosscaps never both positive (one handle plus one crosscap
///    is rewritten as three crosscaps).
class OrbifoldSignature {
public:
    /// The smooth sphere.
    OrbifoldSignature() = default;

    /// Validates and canonicalizes. Throws std::invalid_argument on negative
    /// counts or any order < 2.
    OrbifoldSignature(int handles, int crosscaps, std::vector<Order> cone_points,
                      std::vector<std::vector<Order>> mirror_boundaries = {});

    static OrbifoldSignature sphere() { return {}; }
    static OrbifoldSignature surface_of_genus(int genus) { return {genus, 0, {}}; }
    static OrbifoldSignature cones(std::vector<Order> orders) { return {0, 0, std::move(orders)}; }

    int handles() const { return handles_; }
    int crosscaps() const { return crosscaps_; }
    const std::vector<Order>& cone_points() const { return cone_points_; }
    const std::vector<std::vector<Order>>& mirror_boundaries() const { return mirror_boundaries_; }

    bool has_mirrors() const { return !mirror_boundaries_.empty(); }
    /// True when there is at least one cone point or corner reflector.
    bool has_singular_points() const;
    /// All corner orders across every boundary, ascending.
    std::vector<Order> corner_points() const;

    friend bool operator==(const OrbifoldSignature&, const OrbifoldSignature&) = default;
    friend auto operator<=>(const OrbifoldSignature&, const OrbifoldSignature&) = default;

private:
    int handles_ = 0;
    int crosscaps_ = 0;
    std::vector<Order> cone_points_;
    std::vector<std::vector<Order>> mirror_boundaries_;
};

enum class GeometryType { Spherical, Euclidean, Hyperbolic, BadPositive };

const char* to_string(GeometryType g);

/// 2 - 2h - k - b - sum (m-1)/m - sum (n-1)/(2n), exact.
Rational euler_characteristic(const OrbifoldSignature& sig);

bool is_orientable(const OrbifoldSignature& sig);

/// Teardrops, unequal footballs and their mirrored halves O(*m), O(*m,n).
bool is_bad(const OrbifoldSignature& sig);

GeometryType geometry_type(const OrbifoldSignature& sig);

}  // namespace orbiheat
