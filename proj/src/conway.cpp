#include "orbiheat/conway.hpp"

#include <array>
#include <cctype>
#include <limits>
#include <utility>

namespace orbiheat::conway {

namespace {

constexpr Order kMaxOrder = std::numeric_limits<std::int32_t>::max();

// "×" in UTF-8.
constexpr unsigned char kTimesLead = 0xC3;
constexpr unsigned char kTimesTrail = 0x97;

constexpr std::array<std::pair<std::string_view, std::string_view>, 5> kAliases{{
    {"sphere", ""},
    {"torus", "o"},
    {"klein", "xx"},
    {"*torus", "*,*"},
    {"*klein", "*x"},
}};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s, std::size_t& offset) {
    std::size_t b = 0;
    while (b < s.size() && is_space(s[b])) ++b;
    std::size_t e = s.size();
    while (e > b && is_space(s[e - 1])) --e;
    offset += b;
    return s.substr(b, e - b);
}

std::size_t utf8_length(unsigned char lead) {
    if (lead < 0x80) return 1;
    if ((lead & 0xE0) == 0xC0) return 2;
    if ((lead & 0xF0) == 0xE0) return 3;
    if ((lead & 0xF8) == 0xF0) return 4;
    return 1;
}

enum class Phase { Handles, Cones, Mirrors, Crosscaps };

std::vector<Token> tokenize_body(std::string_view text, std::size_t base) {
    std::vector<Token> tokens;
    Phase phase = Phase::Handles;
    std::size_t cp = base;  // code-point index of text[i]
    std::size_t i = 0;

    auto out_of_order = [&](std::string_view what) {
        throw ParseError(ParseErrorKind::OutOfOrderToken, cp,
                         std::string(what) + " must precede mirrors and crosscaps");
    };

    while (i < text.size()) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (c == ',' || is_space(text[i])) {
            ++i;
            ++cp;
        } else if (c == 'o') {
            if (phase != Phase::Handles) out_of_order("handle 'o'");
            tokens.push_back({Token::Kind::Handle, 0, cp});
            ++i;
            ++cp;
        } else if (std::isdigit(c)) {
            const std::size_t start = cp;
            Order value = 0;
            bool overflow = false;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                value = value * 10 + (text[i] - '0');
                if (value > kMaxOrder) overflow = true;
                if (overflow) value = kMaxOrder + 1;
                ++i;
                ++cp;
            }
            if (overflow) {
                throw ParseError(ParseErrorKind::OrderTooLarge, start, "order exceeds " + std::to_string(kMaxOrder));
            }
            if (value < 2) {
                throw ParseError(ParseErrorKind::OrderTooSmall, start,
                                 "order must be >= 2, got " + std::to_string(value));
            }
            if (phase == Phase::Crosscaps) {
                throw ParseError(ParseErrorKind::OutOfOrderToken, start, "order after crosscap");
            }
            if (phase == Phase::Mirrors) {
                tokens.push_back({Token::Kind::CornerOrder, value, start});
            } else {
                phase = Phase::Cones;
                tokens.push_back({Token::Kind::ConeOrder, value, start});
            }
        } else if (c == '*') {
            if (phase == Phase::Crosscaps) {
                throw ParseError(ParseErrorKind::OutOfOrderToken, cp, "mirror after crosscap");
            }
            phase = Phase::Mirrors;
            tokens.push_back({Token::Kind::MirrorStart, 0, cp});
            ++i;
            ++cp;
        } else if (c == 'x' || (c == kTimesLead && i + 1 < text.size() &&
                                static_cast<unsigned char>(text[i + 1]) == kTimesTrail)) {
            phase = Phase::Crosscaps;
            tokens.push_back({Token::Kind::Crosscap, 0, cp});
            i += (c == 'x') ? 1 : 2;
            ++cp;
        } else {
            throw ParseError(ParseErrorKind::UnknownCharacter, cp,
                             "unexpected character '" + std::string(text.substr(i, utf8_length(c))) + "'");
        }
    }
    return tokens;
}

}  // namespace

const char* to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::OrderTooSmall: return "OrderTooSmall";
        case ParseErrorKind::OrderTooLarge: return "OrderTooLarge";
        case ParseErrorKind::OutOfOrderToken: return "OutOfOrderToken";
        case ParseErrorKind::UnknownCharacter: return "UnknownCharacter";
    }
    return "?";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t position, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + " at position " + std::to_string(position) + ": " +
                         detail),
      kind_(kind),
      position_(position) {}

std::vector<Token> tokenize(std::string_view text) {
    std::size_t offset = 0;
    std::string_view body = trim(text, offset);
    if (body.size() >= 3 && body.substr(0, 2) == "O(" && body.back() == ')') {
        body = body.substr(2, body.size() - 3);
        offset += 2;
        body = trim(body, offset);
    }
    for (const auto& [name, expansion] : kAliases) {
        if (body == name) return tokenize_body(expansion, offset);
    }
    return tokenize_body(body, offset);
}

OrbifoldSignature parse(std::string_view text) {
    int handles = 0;
    int crosscaps = 0;
    std::vector<Order> cones;
    std::vector<std::vector<Order>> boundaries;
    for (const Token& t : tokenize(text)) {
        switch (t.kind) {
            case Token::Kind::Handle: ++handles; break;
            case Token::Kind::ConeOrder: cones.push_back(t.order); break;
            case Token::Kind::MirrorStart: boundaries.emplace_back(); break;
            case Token::Kind::CornerOrder: boundaries.back().push_back(t.order); break;
            case Token::Kind::Crosscap: ++crosscaps; break;
        }
    }
    return {handles, crosscaps, std::move(cones), std::move(boundaries)};
}

std::string render(const OrbifoldSignature& sig) {
    std::string out(static_cast<std::size_t>(sig.handles()), 'o');
    auto append_item = [&out](const std::string& item) {
        if (!out.empty()) out += ',';
        out += item;
    };
    for (Order m : sig.cone_points()) append_item(std::to_string(m));
    for (const auto& boundary : sig.mirror_boundaries()) {
        if (boundary.empty() && !sig.cone_points().empty() && out.back() != '*') {
            // A bare mirror circle follows its cones directly, as in "2,2*".
            out += '*';
            continue;
        }
        std::string item = "*";
        for (std::size_t i = 0; i < boundary.size(); ++i) {
            if (i > 0) item += ',';
            item += std::to_string(boundary[i]);
        }
        append_item(item);
    }
    for (int i = 0; i < sig.crosscaps(); ++i) out += "×";
    return out;
}

}  // namespace orbiheat::conway
