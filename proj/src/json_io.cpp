#include "orbiheat/json_io.hpp"

#include "orbiheat/conway.hpp"

#include <cmath>
#include <stdexcept>

namespace orbiheat::json {

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) {
        throw std::invalid_argument(std::string("missing JSON field '") + name + "'");
    }
    return j.at(name);
}

int non_negative_int(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw std::invalid_argument(std::string("field '") + name + "' must be a non-negative integer");
    }
    return v.get<int>();
}

std::vector<Order> order_list(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of orders");
    std::vector<Order> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw std::invalid_argument("orders must be integers");
        out.push_back(v.get<Order>());
    }
    return out;
}

double number(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number()) throw std::invalid_argument(std::string("field '") + name + "' must be a number");
    return v.get<double>();
}

}  // namespace

Json to_json(const Rational& r) { return {{"num", r.numerator().str()}, {"den", r.denominator().str()}}; }

Rational rational_from_json(const Json& j) {
    const Json& num = field(j, "num");
    const Json& den = field(j, "den");
    if (!num.is_string() || !den.is_string()) throw std::invalid_argument("rational fields must be strings");
    return Rational::parse(num.get<std::string>() + "/" + den.get<std::string>());
}

Json to_json(const OrbifoldSignature& sig) {
    Json boundaries = Json::array();
    for (const auto& b : sig.mirror_boundaries()) boundaries.push_back(b);
    return {{"handles", sig.handles()},
            {"crosscaps", sig.crosscaps()},
            {"cone_points", sig.cone_points()},
            {"mirror_boundaries", boundaries}};
}

OrbifoldSignature signature_from_json(const Json& j) {
    std::vector<std::vector<Order>> boundaries;
    const Json& mb = field(j, "mirror_boundaries");
    if (!mb.is_array()) throw std::invalid_argument("mirror_boundaries must be an array");
    for (const auto& b : mb) boundaries.push_back(order_list(b));
    return {non_negative_int(j, "handles"), non_negative_int(j, "crosscaps"), order_list(field(j, "cone_points")),
            std::move(boundaries)};
}

Json to_json(const HeatExpansion& e) {
    return {{"deg_-1", e.minus_one},
            {"deg_-0.5", e.minus_half},
            {"deg_0", to_json(e.zero)},
            {"deg_0.5", e.half},
            {"deg_1", e.one}};
}

HeatExpansion expansion_from_json(const Json& j) {
    HeatExpansion e;
    e.minus_one = number(j, "deg_-1");
    e.minus_half = number(j, "deg_-0.5");
    e.zero = rational_from_json(field(j, "deg_0"));
    e.half = number(j, "deg_0.5");
    e.one = number(j, "deg_1");
    return e;
}

Json to_json(const flat::VerifyReport& report) {
    Json out = Json::object();
    for (const auto& d : report.degrees) {
        Json rel = std::isnan(d.rel_err) ? Json(nullptr) : Json(d.rel_err);
        out[to_string(d.degree)] = {
            {"fitted", d.fitted}, {"predicted", d.predicted}, {"abs_err", d.abs_err}, {"rel_err", rel}};
    }
    return out;
}

Json to_json(const std::vector<classify::Collision>& collisions) {
    Json out = Json::array();
    for (const auto& c : collisions) {
        out.push_back({{"sig_a", conway::render(c.a)}, {"sig_b", conway::render(c.b)}, {"c", to_json(c.c)}});
    }
    return out;
}

}  // namespace orbiheat::json
