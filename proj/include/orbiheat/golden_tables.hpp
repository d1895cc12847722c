#pragma once

#include "orbiheat/rational.hpp"
#include "orbiheat/signature.hpp"

#include <string>
#include <vector>

namespace orbiheat::tables {

// Reference tables of degree-zero constants and of triangular pillows (chi, c),
// embedded as exact rationals.
// Rows parameterized by orders (O(m), O(2,2,m), ...) are instantiated for every
// order in [2, family_bound].

/// One instance of a degree-zero row: the constant term and whether a t^{-1/2}
/// (mirror-length) term is listed.
struct ExpansionEntry {
    std::string row;       ///< row label, e.g. "O(*2,2,m), O(2,*m)"
    std::string notation;  ///< concrete instance, e.g. "*2,2,7"
    Rational constant;
    bool mirror_term;
};

struct PillowEntry {
    std::string row;
    std::string notation;
    Rational chi;
    Rational c;
};

std::vector<ExpansionEntry> expansion_table(Order family_bound = 12);
std::vector<PillowEntry> pillow_table(Order family_bound = 12);

/// Distinct row labels of each table, in table order.
std::vector<std::string> expansion_rows();
std::vector<std::string> pillow_rows();

struct Mismatch {
    std::string row;
    std::string notation;
    std::string field;
    std::string expected;
    std::string computed;
};

struct TableCheck {
    std::size_t entries_checked = 0;
    std::vector<Mismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// Recomputes degree-zero constants and mirror-term presence.
TableCheck check_expansion_table(Order family_bound = 12);
/// Recomputes chi and c.
TableCheck check_pillow_table(Order family_bound = 12);

}  // namespace orbiheat::tables
