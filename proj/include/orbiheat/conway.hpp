#pragma once

#include "orbiheat/signature.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orbiheat::conway {

// Comma-augmented Conway notation:
//
//   signature := handle* cone* mirror* cross*
//   handle    := "o"
//   cone      := integer
//   mirror    := "*" integer*
//   cross     := "×" | "x"
//
// Commas and whitespace separate tokens and are otherwise ignored. Integers
// after a "*" are corners of that boundary until the next "*", crosscap or end
// of input, so "2,*2,2" is a cone of order 2 and a boundary with corners 2,2.
// An optional "O(...)" wrapper is stripped. Whole-input aliases: torus, klein,
// sphere, *torus, *klein.

struct Token {
    enum class Kind { Handle, ConeOrder, MirrorStart, CornerOrder, Crosscap };
    Kind kind;
    Order order = 0;           // cone/corner payload
    std::size_t position = 0;  // code-point offset into the input
};

enum class ParseErrorKind { OrderTooSmall, OrderTooLarge, OutOfOrderToken, UnknownCharacter };

const char* to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t position, const std::string& detail);

    ParseErrorKind kind() const { return kind_; }
    /// Code-point offset into the text handed to tokenize/parse.
    std::size_t position() const { return position_; }

private:
    ParseErrorKind kind_;
    std::size_t position_;
};

/// Tokenizes after alias and wrapper resolution. Throws ParseError.
std::vector<Token> tokenize(std::string_view text);

/// Empty input is the smooth sphere. Throws ParseError.
OrbifoldSignature parse(std::string_view text);

/// Canonical notation with parse(render(sig)) == sig. Uses U+00D7 for crosscaps.
std::string render(const OrbifoldSignature& sig);

}  // namespace orbiheat::conway
