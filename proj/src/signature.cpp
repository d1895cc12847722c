#include "orbiheat/signature.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace orbiheat {

namespace {

void require_order(Order n, const char* what) {
    if (n < 2) {
        throw std::invalid_argument(std::string(what) + " order must be >= 2, got " + std::to_string(n));
    }
}

// Sphere or disk base with at most two singular points of unequal order.
bool is_unbalanced_pair(const std::vector<Order>& orders) {
    return orders.size() == 1 || (orders.size() == 2 && orders[0] != orders[1]);
}

}  // namespace

OrbifoldSignature::OrbifoldSignature(int handles, int crosscaps, std::vector<Order> cone_points,
                                     std::vector<std::vector<Order>> mirror_boundaries)
    : handles_(handles),
      crosscaps_(crosscaps),
      cone_points_(std::move(cone_points)),
      mirror_boundaries_(std::move(mirror_boundaries)) {
    if (handles_ < 0 || crosscaps_ < 0) {
        throw std::invalid_argument("handle and crosscap counts must be non-negative");
    }
    for (Order m : cone_points_) require_order(m, "cone point");
    for (const auto& boundary : mirror_boundaries_) {
        for (Order n : boundary) require_order(n, "corner reflector");
    }
    if (handles_ > 0 && crosscaps_ > 0) {
        crosscaps_ += 2 * handles_;
        handles_ = 0;
    }
    std::sort(cone_points_.begin(), cone_points_.end());
    for (auto& boundary : mirror_boundaries_) std::sort(boundary.begin(), boundary.end());
    std::sort(mirror_boundaries_.begin(), mirror_boundaries_.end());
}

bool OrbifoldSignature::has_singular_points() const {
    if (!cone_points_.empty()) return true;
    return std::any_of(mirror_boundaries_.begin(), mirror_boundaries_.end(),
                       [](const auto& b) { return !b.empty(); });
}

std::vector<Order> OrbifoldSignature::corner_points() const {
    std::vector<Order> out;
    for (const auto& boundary : mirror_boundaries_) out.insert(out.end(), boundary.begin(), boundary.end());
    std::sort(out.begin(), out.end());
    return out;
}

const char* to_string(GeometryType g) {
    switch (g) {
        case GeometryType::Spherical: return "Spherical";
        case GeometryType::Euclidean: return "Euclidean";
        case GeometryType::Hyperbolic: return "Hyperbolic";
        case GeometryType::BadPositive: return "BadPositive";
    }
    return "?";
}

Rational euler_characteristic(const OrbifoldSignature& sig) {
    Rational chi = 2 - 2 * sig.handles() - sig.crosscaps() - static_cast<int>(sig.mirror_boundaries().size());
    for (Order m : sig.cone_points()) chi -= Rational(m - 1) / Rational(m);
    for (const auto& boundary : sig.mirror_boundaries()) {
        for (Order n : boundary) chi -= Rational(n - 1) / Rational(2 * n);
    }
    return chi;
}

bool is_orientable(const OrbifoldSignature& sig) {
    return sig.crosscaps() == 0 && !sig.has_mirrors();
}

bool is_bad(const OrbifoldSignature& sig) {
    if (sig.handles() != 0 || sig.crosscaps() != 0) return false;
    const auto& boundaries = sig.mirror_boundaries();
    if (boundaries.empty()) return is_unbalanced_pair(sig.cone_points());
    return boundaries.size() == 1 && sig.cone_points().empty() && is_unbalanced_pair(boundaries.front());
}

GeometryType geometry_type(const OrbifoldSignature& sig) {
    if (is_bad(sig)) return GeometryType::BadPositive;
    const int s = euler_characteristic(sig).sign();
    if (s > 0) return GeometryType::Spherical;
    if (s == 0) return GeometryType::Euclidean;
    return GeometryType::Hyperbolic;
}

}  // namespace orbiheat
